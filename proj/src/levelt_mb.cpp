#include "hgmono/levelt_mb.hpp"

#include <cmath>
#include <numbers>

#include "hgmono/errors.hpp"

namespace hgm {

namespace {

std::vector<ZetaElem> to_zeta(const IntPolynomial& p) {
  std::vector<ZetaElem> out;
  for (const auto& c : p.coeffs()) out.emplace_back(BigRational(c));
  return out;
}

double distance_mod_one(double x) {
  double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

}  // namespace

FieldMatrix companion(const IntPolynomial& p) { return companion(to_zeta(p)); }

BigRational resultant(const IntPolynomial& a, const IntPolynomial& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return BigRational(0);
  if (m + n == 0) return BigRational(1);
  FieldMatrix s = FieldMatrix::Constant(m + n, m + n, ZetaElem(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = BigRational(a.coeff(static_cast<std::size_t>(m - k)));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = BigRational(b.coeff(static_cast<std::size_t>(n - k)));
  return *determinant(s).rational_value();
}

MonodromyTriple mb_triple(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree() || a.degree() < 1) throw InvalidInput("A and B must have equal positive degree");
  if (!a.is_monic() || !b.is_monic()) throw NonMonic("A and B must be monic");
  if (resultant(a, b).is_zero()) throw ResonantInput("A and B share a root");
  return detail::mb_triple_from_coeffs(to_zeta(a), to_zeta(b));
}

std::vector<std::complex<double>> unit_roots(std::span<const double> exponents) {
  std::vector<std::complex<double>> r;
  for (double x : exponents) r.push_back(std::polar(1.0, -2.0 * std::numbers::pi * x));
  return r;
}

std::vector<std::complex<double>> poly_from_roots(std::span<const std::complex<double>> roots) {
  std::vector<std::complex<double>> p{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] -= r * p[i];
      next[i + 1] += p[i];
    }
    p = std::move(next);
  }
  return p;
}

Triple<std::complex<double>> mb_triple(std::span<const double> alphas, std::span<const double> betas) {
  if (alphas.size() != betas.size() || alphas.empty()) throw InvalidInput("need n alphas and n betas, n >= 1");
  for (double a : alphas)
    for (double b : betas)
      if (distance_mod_one(a - b) < 1e-9) throw ResonantInput("alpha and beta coincide modulo 1");
  auto ra = unit_roots(alphas), rb = unit_roots(betas);
  auto a = poly_from_roots(ra), b = poly_from_roots(rb);
  a.back() = 1.0;
  b.back() = 1.0;
  return detail::mb_triple_from_coeffs(a, b);
}

}  // namespace hgm
