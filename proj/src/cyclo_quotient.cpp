#include "hgmono/cyclo_quotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hgmono/errors.hpp"

namespace hgm {

namespace {

std::string factor_power(int e, int count) {
  std::ostringstream os;
  os << "(X";
  if (e > 1) os << '^' << e;
  os << " - 1)";
  if (count > 1) os << '^' << count;
  return os.str();
}

std::string product_str(const std::vector<int>& v) {
  if (v.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t k = i;
    while (k < v.size() && v[k] == v[i]) ++k;
    out += factor_power(v[i], static_cast<int>(k - i));
    i = k;
  }
  return out;
}

}  // namespace

int QuotientForm::degree() const {
  return std::accumulate(a.begin(), a.end(), 0) - std::accumulate(b.begin(), b.end(), 0);
}

bool QuotientForm::is_canonical() const {
  auto desc = [](const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end(), std::greater<>()); };
  if (!desc(a) || !desc(b)) return false;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

std::string QuotientForm::str() const {
  std::string num = product_str(a);
  if (b.empty()) return num;
  std::string den = product_str(b);
  if (b.size() > 1 && std::adjacent_find(b.begin(), b.end(), std::not_equal_to<>()) != b.end()) den = "(" + den + ")";
  return num + "/" + den;
}

std::vector<BigRational> normalize_alphas(std::span<const BigRational> alphas) {
  std::vector<BigRational> out;
  out.reserve(alphas.size());
  for (const auto& al : alphas) {
    if (al.is_integer()) throw IntegerExponent("exponent " + al.str() + " is an integer");
    out.push_back(al.frac());
  }
  return out;
}

CyclotomicMultiset recognize_cyclotomic(std::span<const BigRational> alphas) {
  if (alphas.empty()) throw InvalidInput("empty exponent list");
  auto reduced = normalize_alphas(alphas);
  // denominator -> (numerator -> count)
  std::map<long, std::map<long, int>> groups;
  for (const auto& al : reduced) {
    if (!al.denominator().fits_slong_p()) throw NotCyclotomicProduct("denominator too large");
    groups[al.denominator().get_si()][al.numerator().get_si()] += 1;
  }
  CyclotomicMultiset result;
  for (const auto& [m, residues] : groups) {
    const int mult = residues.begin()->second;
    bool complete = static_cast<std::int64_t>(residues.size()) == euler_phi(m);
    for (const auto& [c, count] : residues) complete = complete && count == mult;
    if (!complete) {
      throw NotCyclotomicProduct("primitive roots of unity of order " + std::to_string(m) +
                                 " do not all occur with equal multiplicity");
    }
    result[static_cast<int>(m)] = mult;
  }
  return result;
}

QuotientForm canonicalize(QuotientForm q) {
  std::map<int, int> exps;
  for (int x : q.a) exps[x] += 1;
  for (int x : q.b) exps[x] -= 1;
  QuotientForm out;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    for (int i = 0; i < it->second; ++i) out.a.push_back(it->first);
    for (int i = 0; i < -it->second; ++i) out.b.push_back(it->first);
  }
  return out;
}

QuotientForm to_quotient_form(const CyclotomicMultiset& cyclo) {
  QuotientForm q;
  for (const auto& [m, mult] : cyclo) {
    for (auto d : divisors(m)) {
      int mu = mobius(m / d);
      for (int i = 0; i < mult; ++i) {
        if (mu == 1) q.a.push_back(static_cast<int>(d));
        if (mu == -1) q.b.push_back(static_cast<int>(d));
      }
    }
  }
  return canonicalize(std::move(q));
}

IntPolynomial cyclotomic_product(const CyclotomicMultiset& cyclo) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& [m, mult] : cyclo) {
    auto phi = cyclotomic_poly(m);
    for (int i = 0; i < mult; ++i) p = p * phi;
  }
  return p;
}

IntPolynomial expand(const QuotientForm& q) {
  IntPolynomial num = IntPolynomial::constant(1), den = IntPolynomial::constant(1);
  for (int x : q.a) num = num * IntPolynomial::x_pow_minus_one(static_cast<unsigned>(x));
  for (int x : q.b) den = den * IntPolynomial::x_pow_minus_one(static_cast<unsigned>(x));
  return num.divide_exact(den);
}

BigInt compute_C(const QuotientForm& q) {
  BigInt num = 1, den = 1, t;
  for (int x : q.a) {
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(x));
    num *= t;
  }
  for (int x : q.b) {
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(x));
    den *= t;
  }
  if (num % den != 0) throw NonIntegerC("C = " + num.get_str() + "/" + den.get_str() + " is not an integer");
  return num / den;
}

BigRational compute_d(const QuotientForm& q) {
  BigInt num = 1, den = 1;
  for (int x : q.a) num *= x;
  for (int x : q.b) den *= x;
  return BigRational(num, den);
}

BigRational c_pm(const QuotientForm& q, Sign sign, int j) {
  if (j < 0) throw std::invalid_argument("c_pm: j must be nonnegative");
  if (j == 0) return BigRational(1);
  const long s = sign == Sign::Plus ? 1 : -1;
  BigInt power_sum = 0, t;
  for (int x : q.a) {
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(j));
    power_sum += t;
  }
  for (int x : q.b) {
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(j));
    power_sum -= t;
  }
  const long s_pow = (s == -1 && j % 2 == 1) ? -1 : 1;
  BigInt numer = BigInt(s * q.degree()) - BigInt(s_pow) * power_sum;
  return BigRational(numer, BigInt(j));
}

std::vector<BigInt> f0_coeffs(const QuotientForm& q, int terms) {
  const int n = q.degree();
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(std::max(terms, 0)));
  for (int m = 0; m < terms; ++m) {
    BigInt num = 1, den = 1;
    for (int x : q.a) num *= factorial(static_cast<unsigned>(x * m));
    for (int x : q.b) den *= factorial(static_cast<unsigned>(x * m));
    BigInt mf = factorial(static_cast<unsigned>(m)), mfn;
    mpz_pow_ui(mfn.get_mpz_t(), mf.get_mpz_t(), static_cast<unsigned long>(n));
    den *= mfn;
    if (num % den != 0) {
      throw NonIntegerCoefficient("coefficient " + std::to_string(m) + " of f0^C is not an integer");
    }
    out.push_back(num / den);
  }
  return out;
}

BigInt check_factorial_ratio(const QuotientForm& q) {
  BigInt num = 1, den = 1;
  for (int x : q.a) num *= factorial(static_cast<unsigned>(x));
  for (int x : q.b) den *= factorial(static_cast<unsigned>(x));
  if (num % den != 0) throw NonIntegerFactorialRatio("prod a! / prod b! is not an integer");
  return num / den;
}

}  // namespace hgm
