#pragma once

// Exact arithmetic substrate: big integers and rationals, integer
// polynomials, cyclotomic polynomials, integer partitions and Bernoulli
// numbers.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hgm {

using BigInt = mpz_class;

/// Reduced fraction with positive denominator.
///
/// Thin value wrapper over mpq_class. The wrapper exists so that arithmetic
/// returns plain values rather than gmpxx expression templates, which keeps
/// the type usable as an Eigen scalar and inside generic code.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);

  /// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Largest integer <= value.
  BigInt floor() const;
  /// value - floor(value), in [0, 1).
  BigRational frac() const;

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { BigRational r; r.v_ = -v_; return r; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

BigRational pow(const BigRational& base, unsigned exp);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Dense univariate polynomial over Z, coefficients in ascending degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(unsigned degree, const BigInt& c = 1);
  /// X^d - 1.
  static IntPolynomial x_pow_minus_one(unsigned d);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of X^i (zero beyond the degree).
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// Exact division. Throws std::logic_error on a nonzero remainder or
  /// when the divisor is not monic up to sign.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// Human readable form in X, highest degree first, e.g. "X^2 - X + 1".
  std::string str(char var = 'X') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

int mobius(std::int64_t m);
std::int64_t euler_phi(std::int64_t m);
std::vector<std::int64_t> divisors(std::int64_t m);

/// m-th cyclotomic polynomial from the Moebius product of (X^d - 1) factors.
IntPolynomial cyclotomic_poly(std::int64_t m);

/// Weakly decreasing positive parts. The empty partition stands for the
/// single partition of 0.
struct Partition {
  std::vector<int> parts;

  int sum() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of j, in lexicographically descending order.
std::vector<Partition> partitions(int j);

/// Product over distinct part values of (multiplicity)!.
BigInt multiplicity_M(const Partition& p);

/// B_k for even k >= 2 (B_1 is never requested). Memoized, thread-safe.
BigRational bernoulli(int k);

/// zeta(2p) / (2 pi i)^(2p) = -B_{2p} / (2 (2p)!).
BigRational zeta_even_ratio(int two_p);

}  // namespace hgm
