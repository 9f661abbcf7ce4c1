#include "hgmono/nonresonant.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "hgmono/errors.hpp"

namespace hgm {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

double distance_mod_one(double x) {
  double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

void validate(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || a.size() != b.size()) throw InvalidInput("need n alphas and n betas, n >= 1");
  for (std::size_t l = 0; l < b.size(); ++l)
    for (std::size_t p = 0; p < l; ++p)
      if (distance_mod_one(b[l] - b[p]) < 1e-9) throw ResonantInput("betas are not distinct modulo 1");
  for (double x : a)
    for (double y : b)
      if (distance_mod_one(x - y) < 1e-9) throw ResonantInput("some alpha equals some beta modulo 1");
}

cplx expi(double x) { return std::polar(1.0, x); }

// prod_m sin(pi(beta_l - alpha_m)) / sin(pi(beta_l - beta_m)), m = l skipped below.
cplx sine_product(const NonresonantProblem& p, int l) {
  const double bl = p.betas[static_cast<std::size_t>(l)];
  double r = 1.0;
  for (int m = 0; m < p.n; ++m) {
    r *= std::sin(kPi * (bl - p.alphas[static_cast<std::size_t>(m)]));
    if (m != l) r /= std::sin(kPi * (bl - p.betas[static_cast<std::size_t>(m)]));
  }
  return r;
}

}  // namespace

NonresonantProblem NonresonantProblem::from_doubles(std::span<const double> alphas, std::span<const double> betas) {
  NonresonantProblem p;
  p.alphas.assign(alphas.begin(), alphas.end());
  p.betas.assign(betas.begin(), betas.end());
  validate(p.alphas, p.betas);
  p.n = static_cast<int>(p.alphas.size());
  double s = 0.0;
  for (int k = 0; k < p.n; ++k) s += p.betas[static_cast<std::size_t>(k)] - p.alphas[static_cast<std::size_t>(k)];
  p.c = 2.0 * kI * ((p.n % 2 == 0) ? 1.0 : -1.0) * expi(kPi * s);
  return p;
}

NonresonantProblem NonresonantProblem::from_rationals(std::span<const BigRational> alphas,
                                                      std::span<const BigRational> betas) {
  for (const auto& x : alphas)
    for (const auto& y : betas)
      if ((x - y).is_integer()) throw ResonantInput("alpha " + x.str() + " equals beta " + y.str() + " modulo 1");
  for (std::size_t l = 0; l < betas.size(); ++l)
    for (std::size_t p = 0; p < l; ++p)
      if ((betas[l] - betas[p]).is_integer()) throw ResonantInput("betas are not distinct modulo 1");
  std::vector<double> a, b;
  for (const auto& x : alphas) a.push_back(x.to_double());
  for (const auto& y : betas) b.push_back(y.to_double());
  return from_doubles(a, b);
}

ComplexMatrix m0_diag(const NonresonantProblem& p) {
  ComplexMatrix m = ComplexMatrix::Zero(p.n, p.n);
  for (int l = 0; l < p.n; ++l) m(l, l) = expi(-2.0 * kPi * p.betas[static_cast<std::size_t>(l)]);
  return m;
}

cplx gamma_ratio(const NonresonantProblem& p, int l) {
  const double bl = p.betas[static_cast<std::size_t>(l)];
  cplx g = 1.0;
  for (double a : p.alphas) g *= gamma_complex(a - bl + 1.0);
  for (double b : p.betas) g /= gamma_complex(b - bl + 1.0);
  return g;
}

ComplexMatrix m1_sine(const NonresonantProblem& p) {
  double s = 0.0;
  for (int k = 0; k < p.n; ++k) s += p.betas[static_cast<std::size_t>(k)] - p.alphas[static_cast<std::size_t>(k)];
  const cplx scale = 2.0 * kI * expi(kPi * s);
  std::vector<cplx> g(static_cast<std::size_t>(p.n));
  for (int l = 0; l < p.n; ++l) g[static_cast<std::size_t>(l)] = gamma_ratio(p, l);
  ComplexMatrix m = ComplexMatrix::Identity(p.n, p.n);
  for (int l = 0; l < p.n; ++l) {
    cplx col = scale * g[static_cast<std::size_t>(l)] * sine_product(p, l);
    for (int k = 0; k < p.n; ++k) m(k, l) += col / g[static_cast<std::size_t>(k)];
  }
  return m;
}

ComplexMatrix m1_sine_printed(const NonresonantProblem& p) {
  ComplexMatrix m = ComplexMatrix::Identity(p.n, p.n);
  for (int k = 0; k < p.n; ++k)
    for (int l = 0; l < p.n; ++l)
      m(k, l) += p.c * expi(2.0 * kPi * p.betas[static_cast<std::size_t>(k)]) * sine_product(p, l);
  return m;
}

ComplexMatrix m_infinity_formula(const NonresonantProblem& p) {
  for (int k = 0; k < p.n; ++k)
    for (int m = 0; m < k; ++m)
      if (distance_mod_one(p.alphas[static_cast<std::size_t>(k)] - p.alphas[static_cast<std::size_t>(m)]) < 1e-9)
        throw ResonantInput("alphas are not distinct modulo 1");
  ComplexMatrix r = m1_sine(p) - ComplexMatrix::Identity(p.n, p.n);
  const cplx f = 4.0 / (p.c * p.c);
  ComplexMatrix m(p.n, p.n);
  for (int k = 0; k < p.n; ++k)
    for (int l = 0; l < p.n; ++l) {
      m(k, l) = f * r(k, l) * expi(2.0 * kPi * p.betas[static_cast<std::size_t>(l)]);
      if (k == l) m(k, l) += expi(2.0 * kPi * p.betas[static_cast<std::size_t>(k)]);
    }
  return m;
}

ComplexMatrix m_infinity_printed(const NonresonantProblem& p) {
  ComplexMatrix m(p.n, p.n);
  for (int k = 0; k < p.n; ++k) {
    const double ak = p.alphas[static_cast<std::size_t>(k)], bk = p.betas[static_cast<std::size_t>(k)];
    for (int l = 0; l < p.n; ++l) {
      m(k, l) = 4.0 / p.c * expi(2.0 * kPi * (bk + ak)) * sine_product(p, l);
      if (k == l) m(k, l) += expi(2.0 * kPi * ak);
    }
  }
  return m;
}

ComplexMatrix rank1_inverse(const ComplexMatrix& m) {
  const auto n = m.rows();
  ComplexMatrix r = m - ComplexMatrix::Identity(n, n);
  const cplx denom = 1.0 + r.trace();
  if (std::abs(denom) < 1e-12) throw TraceMinusOne("1 + Tr(M - I) vanishes");
  return ComplexMatrix::Identity(n, n) - r / denom;
}

namespace {

VDTransform vd_with_sign(const NonresonantProblem& p, double sign) {
  const int n = p.n;
  VDTransform t{ComplexMatrix(n, n), ComplexMatrix::Zero(n, n)};
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) t.V(k, l) = expi(-2.0 * kPi * k * p.betas[static_cast<std::size_t>(l)]);
  const cplx pref = sign / std::pow(2.0 * kI, n - 1);
  for (int l = 0; l < n; ++l) {
    const double bl = p.betas[static_cast<std::size_t>(l)];
    cplx d = pref * expi(kPi * n * bl) * gamma_ratio(p, l);
    for (int m = 0; m < n; ++m)
      if (m != l) d /= std::sin(kPi * (p.betas[static_cast<std::size_t>(m)] - bl));
    t.D(l, l) = d;
  }
  return t;
}

}  // namespace

VDTransform vd_transform(const NonresonantProblem& p) { return vd_with_sign(p, (p.n % 2 == 0) ? 1.0 : -1.0); }

VDTransform vd_transform_printed(const NonresonantProblem& p) { return vd_with_sign(p, 1.0); }

Triple<cplx> frobenius_triple_via_vd(const NonresonantProblem& p) {
  auto mb = mb_triple(p.alphas, p.betas);
  auto vd = vd_transform(p);
  ComplexMatrix s = vd.V * vd.D;
  ComplexMatrix s_inv = s.inverse();
  return conjugate<cplx>(mb, s_inv, s);
}

VerifyReport verify_VD(const NonresonantProblem& p, cplx z, double tol, int terms) {
  auto vd = vd_transform(p);
  ComplexMatrix s = vd.V * vd.D;
  auto f = frobenius_eval_nonresonant(p.alphas, p.betas, z, terms);
  ContourSpec contour = default_contour(p.alphas, p.betas);
  contour.tol = tol;
  VerifyReport r;
  double scale = 0.0, worst = 0.0;
  for (int k = 0; k < p.n; ++k) {
    cplx lhs = mb_integral_quadrature(k, z, p.alphas, p.betas, contour);
    cplx rhs = 0.0;
    for (int l = 0; l < p.n; ++l) rhs += s(k, l) * f[static_cast<std::size_t>(l)];
    r.lhs.push_back(lhs);
    r.rhs.push_back(rhs);
    scale = std::max(scale, std::abs(lhs));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  r.residual = worst / scale;
  return r;
}

}  // namespace hgm
