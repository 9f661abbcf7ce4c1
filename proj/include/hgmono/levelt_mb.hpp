#pragma once

// Levelt's companion normal form and the Mellin-Barnes-basis triple. A
// monic polynomial X^n + A_1 X^{n-1} + ... + A_n is passed by its ascending
// coefficients (A_n, ..., A_1, 1).

#include <complex>
#include <span>
#include <vector>

#include "hgmono/exact.hpp"
#include "hgmono/triple.hpp"

namespace hgm {

using ComplexMatrix = Matrix<std::complex<double>>;

/// Ones on the superdiagonal, last row (-A_n, ..., -A_1). Throws NonMonic.
template <class Scalar>
Matrix<Scalar> companion(const std::vector<Scalar>& ascending) {
  if (ascending.size() < 2 || !(ascending.back() == Scalar(1)))
    throw NonMonic("companion: polynomial must be monic of degree >= 1");
  const auto n = static_cast<Eigen::Index>(ascending.size() - 1);
  Matrix<Scalar> m = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i + 1 < n; ++i) m(i, i + 1) = Scalar(1);
  for (Eigen::Index j = 0; j < n; ++j) m(n - 1, j) = -ascending[static_cast<std::size_t>(j)];
  return m;
}

FieldMatrix companion(const IntPolynomial& p);

namespace detail {

// Triple from the coefficient lists of A (roots e^{-2 pi i alpha}) and
// B (roots e^{-2 pi i beta}).
template <class Scalar>
Triple<Scalar> mb_triple_from_coeffs(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  const auto n = static_cast<Eigen::Index>(b.size() - 1);
  auto A = [&](Eigen::Index k) { return a[static_cast<std::size_t>(n - k)]; };
  auto B = [&](Eigen::Index k) { return b[static_cast<std::size_t>(n - k)]; };
  if (is_zero_value(B(n)) || is_zero_value(A(n))) throw InvalidInput("polynomial has a zero root");
  Triple<Scalar> t;
  t.M0 = companion(b);
  t.M1 = identity<Scalar>(n);
  for (Eigen::Index m = 0; m < n; ++m) t.M1(0, m) += (A(n - m) - B(n - m)) / B(n);
  t.Minf = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index m = 0; m < n; ++m) t.Minf(0, m) = -A(n - 1 - m) / A(n);
  for (Eigen::Index i = 1; i < n; ++i) t.Minf(i, i - 1) = Scalar(1);
  return t;
}

}  // namespace detail

/// Exact triple for integral A and B. Throws ResonantInput if they share a root.
MonodromyTriple mb_triple(const IntPolynomial& a, const IntPolynomial& b);

/// Numeric triple from the exponents. Throws ResonantInput when some
/// alpha_k = beta_l mod 1 (within 1e-9).
Triple<std::complex<double>> mb_triple(std::span<const double> alphas, std::span<const double> betas);

/// Ascending coefficients of prod (X - r).
std::vector<std::complex<double>> poly_from_roots(std::span<const std::complex<double>> roots);

/// e^{-2 pi i x} for each x.
std::vector<std::complex<double>> unit_roots(std::span<const double> exponents);

/// Sylvester resultant, exact.
BigRational resultant(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace hgm
