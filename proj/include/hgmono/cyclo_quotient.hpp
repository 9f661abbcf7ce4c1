#pragma once

// Cyclotomic recognition of exponent sets and the quotient form
//   prod_k (X - e^{-2 pi i alpha_k}) = prod (X^{a_i} - 1) / prod (X^{b_i} - 1)
// together with the constants that depend only on that form.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hgmono/exact.hpp"

namespace hgm {

/// Exponent multisets a, b of the quotient form. Canonical forms are
/// sorted descending with no value shared between a and b.
struct QuotientForm {
  std::vector<int> a;
  std::vector<int> b;

  /// sum(a) - sum(b), the degree of the represented polynomial.
  int degree() const;
  bool is_canonical() const;

  /// e.g. "(X^2 - 1)^4/(X - 1)^4", "(X^10 - 1)(X - 1)/((X^5 - 1)(X^2 - 1))".
  std::string str() const;

  friend bool operator==(const QuotientForm&, const QuotientForm&) = default;
};

/// Cyclotomic index m -> multiplicity of Phi_m.
using CyclotomicMultiset = std::map<int, int>;

/// Reduces every alpha into (0, 1). Throws IntegerExponent for integers.
std::vector<BigRational> normalize_alphas(std::span<const BigRational> alphas);

/// Throws NotCyclotomicProduct or IntegerExponent.
CyclotomicMultiset recognize_cyclotomic(std::span<const BigRational> alphas);

QuotientForm to_quotient_form(const CyclotomicMultiset& cyclo);

/// Cancels values common to a and b and sorts both descending.
QuotientForm canonicalize(QuotientForm q);

/// prod Phi_m^{mu_m} over Z.
IntPolynomial cyclotomic_product(const CyclotomicMultiset& cyclo);
/// prod (X^a - 1) / prod (X^b - 1) over Z.
IntPolynomial expand(const QuotientForm& q);

/// prod a^a / prod b^b. Throws NonIntegerC if the quotient is not integral.
BigInt compute_C(const QuotientForm& q);
/// prod a / prod b.
BigRational compute_d(const QuotientForm& q);

enum class Sign { Plus, Minus };

/// c_0 = 1; c_j = (s n - s^j sum(a^j - b^j)) / j with s = +-1.
BigRational c_pm(const QuotientForm& q, Sign sign, int j);

/// First `terms` Taylor coefficients of f_0^C:
///   prod (a m)! / prod (b m)! / (m!)^n.
/// Throws NonIntegerCoefficient if any is not an integer.
std::vector<BigInt> f0_coeffs(const QuotientForm& q, int terms);

/// prod a! / prod b!. Throws NonIntegerFactorialRatio if inexact.
BigInt check_factorial_ratio(const QuotientForm& q);

}  // namespace hgm
