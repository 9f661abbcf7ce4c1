#include "hgmono/exact.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hgmono/errors.hpp"

namespace hgm {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InvalidInput("empty fraction");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InvalidInput("malformed fraction '" + s + "'");
  BigInt n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
  return BigRational(n, d);
}

BigInt BigRational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigRational BigRational::frac() const { return *this - BigRational(floor()); }

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigRational pow(const BigRational& base, unsigned exp) {
  BigRational r(1), b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(unsigned degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(unsigned d) {
  std::vector<BigInt> v(d + 1, BigInt(0));
  v[0] = -1;
  v[d] += 1;
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("IntPolynomial: division by zero polynomial");
  const BigInt& lead = divisor.coeffs_.back();
  if (lead != 1 && lead != -1) throw std::logic_error("IntPolynomial: divisor must be monic up to sign");
  std::vector<BigInt> rem = coeffs_;
  int dd = divisor.degree();
  int qd = degree() - dd;
  if (qd < 0) {
    if (!is_zero()) throw std::logic_error("IntPolynomial: inexact division");
    return {};
  }
  std::vector<BigInt> q(static_cast<std::size_t>(qd) + 1, BigInt(0));
  for (int k = qd; k >= 0; --k) {
    BigInt c = rem[static_cast<std::size_t>(k + dd)] * lead;  // lead = +-1
    q[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("IntPolynomial: inexact division");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    BigInt a = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Number theory

int mobius(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("mobius: m must be positive");
  int result = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

std::int64_t euler_phi(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("divisors: m must be positive");
  std::vector<std::int64_t> lo, hi;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    lo.push_back(d);
    if (d != m / d) hi.push_back(m / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

IntPolynomial cyclotomic_poly(std::int64_t m) {
  IntPolynomial num = IntPolynomial::constant(1), den = IntPolynomial::constant(1);
  for (auto d : divisors(m)) {
    int mu = mobius(m / d);
    if (mu == 1) num = num * IntPolynomial::x_pow_minus_one(static_cast<unsigned>(d));
    if (mu == -1) den = den * IntPolynomial::x_pow_minus_one(static_cast<unsigned>(d));
  }
  return num.divide_exact(den);
}

// ---------------------------------------------------------------------------
// Partitions

int Partition::sum() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::vector<Partition> partitions(int j) {
  if (j < 0) throw std::invalid_argument("partitions: j must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> descend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      descend(remaining - p, p);
      cur.pop_back();
    }
  };
  descend(j, j);
  return out;
}

BigInt multiplicity_M(const Partition& p) {
  BigInt r = 1;
  std::size_t i = 0;
  while (i < p.parts.size()) {
    std::size_t k = i;
    while (k < p.parts.size() && p.parts[k] == p.parts[i]) ++k;
    r *= factorial(static_cast<unsigned>(k - i));
    i = k;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

BigRational bernoulli(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("bernoulli: index must be even and >= 2");
  static std::mutex mu;
  static std::vector<BigRational> table{BigRational(1)};  // B_0, B_1, ...
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    auto m = static_cast<unsigned>(table.size());
    BigRational s(0);
    for (unsigned j = 0; j < m; ++j) s += BigRational(binomial(m + 1, j)) * table[j];
    table.push_back(-s / BigRational(static_cast<long>(m) + 1));
  }
  return table[static_cast<std::size_t>(k)];
}

BigRational zeta_even_ratio(int two_p) {
  return -bernoulli(two_p) / (BigRational(2) * BigRational(factorial(static_cast<unsigned>(two_p))));
}

}  // namespace hgm
