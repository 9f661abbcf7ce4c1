#pragma once

// The ring Q[lambda, g3, g5, ...] housing exact monodromy entries.
//   g_k    = zeta(k) / (2 pi i)^k   (odd k >= 3)
//   lambda = log(C) / (2 pi i)
// Even zeta values are reduced to rationals on construction, so they never
// appear as generators.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hgmono/exact.hpp"

namespace hgm {

/// Generator index: 0 is lambda, i >= 1 is g_{2i+1}.
int generator_index_of_g(int k);
std::string generator_name(int index);
/// Inverse of generator_name; throws InvalidInput for unknown names.
int generator_index(const std::string& name);

/// Numerical values substituted for the generators, by generator index.
struct GeneratorValues {
  std::vector<std::complex<double>> values;
  std::complex<double> at(int index) const;
};

class ZetaElem {
 public:
  /// Exponents by generator index, trailing zeros trimmed.
  using Monomial = std::vector<int>;

  /// Graded order: total degree, then lexicographic on (lambda, g3, g5, ...)
  /// with larger exponents first.
  struct MonomialOrder {
    bool operator()(const Monomial& x, const Monomial& y) const;
  };
  using TermMap = std::map<Monomial, BigRational, MonomialOrder>;

  ZetaElem() = default;
  ZetaElem(int v) : ZetaElem(BigRational(static_cast<long>(v))) {}  // NOLINT
  ZetaElem(long v) : ZetaElem(BigRational(v)) {}  // NOLINT
  ZetaElem(const BigRational& r);  // NOLINT(google-explicit-constructor)

  static ZetaElem generator(int index);
  static ZetaElem g(int k) { return generator(generator_index_of_g(k)); }
  static ZetaElem lambda() { return generator(0); }
  static ZetaElem from_terms(TermMap terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The value when it is a rational constant.
  std::optional<BigRational> rational_value() const;
  /// Coefficient of a given monomial (zero if absent).
  BigRational coeff(const Monomial& mono) const;
  int total_degree() const;
  /// Sorted generator indices that occur with nonzero exponent.
  std::vector<int> support() const;

  const TermMap& terms() const { return terms_; }

  ZetaElem& operator+=(const ZetaElem& o);
  ZetaElem& operator-=(const ZetaElem& o);
  ZetaElem& operator*=(const ZetaElem& o) { return *this = *this * o; }
  /// Division is only defined for nonzero rational divisors.
  ZetaElem& operator/=(const ZetaElem& o) { return *this = *this / o; }

  friend ZetaElem operator+(ZetaElem a, const ZetaElem& b) { return a += b; }
  friend ZetaElem operator-(ZetaElem a, const ZetaElem& b) { return a -= b; }
  friend ZetaElem operator*(const ZetaElem& a, const ZetaElem& b);
  friend ZetaElem operator/(const ZetaElem& a, const ZetaElem& b);
  ZetaElem operator-() const;

  friend bool operator==(const ZetaElem& a, const ZetaElem& b) { return a.terms_ == b.terms_; }

  std::complex<double> evaluate(const GeneratorValues& gv) const;

  /// e.g. "1 - 200*g3", "4*lambda^2", "-7/12".
  std::string str() const;

 private:
  TermMap terms_;
};

/// 0 for k = 1, the even-zeta rational for even k, g_k for odd k >= 3.
ZetaElem zeta_symbol(int k);

inline bool is_unit(const ZetaElem& x) {
  auto r = x.rational_value();
  return r && !r->is_zero();
}
inline bool is_unit(const std::complex<double>& x) { return x != std::complex<double>(0.0); }
inline bool is_zero_value(const ZetaElem& x) { return x.is_zero(); }
inline bool is_zero_value(const std::complex<double>& x) { return x == std::complex<double>(0.0); }

}  // namespace hgm

namespace Eigen {

template <>
struct NumTraits<hgm::ZetaElem> : GenericNumTraits<hgm::ZetaElem> {
  using Real = hgm::ZetaElem;
  using NonInteger = hgm::ZetaElem;
  using Literal = hgm::ZetaElem;
  using Nested = hgm::ZetaElem;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 120
  };
};

}  // namespace Eigen

namespace hgm {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Square matrix over the zeta ring.
using FieldMatrix = Matrix<ZetaElem>;

}  // namespace hgm
