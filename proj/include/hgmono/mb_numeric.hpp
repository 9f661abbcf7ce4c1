#pragma once

// Double-precision oracle: complex Gamma, Mellin-Barnes integrals
//   I_j(z) = (-1)^n / (2 pi i)^n  int_L prod Gamma(alpha_k + s) Gamma(1 - beta_k - s)
//            * e^{(2j - n) pi i s} z^s ds
// by quadrature and by residues, and the Frobenius series at z = 0.
// Logarithms and powers of z use the branch arg z in (0, 2 pi).

#include <complex>
#include <span>
#include <vector>

#include "hgmono/jet.hpp"
#include "hgmono/levelt_mb.hpp"

namespace hgm {

using cplx = std::complex<double>;

cplx gamma_complex(cplx z);
/// A logarithm of Gamma(z); exp(log_gamma_complex(z)) == Gamma(z).
cplx log_gamma_complex(cplx z);
/// A logarithm of sin(pi z), stable for large |Im z|.
cplx log_sin_pi(cplx z);
/// psi^{(m)}(x) for real x > 0.
double polygamma(int m, double x);
/// Riemann zeta for k >= 2 by a partial sum with Euler-Maclaurin tail.
double zeta_numeric(int k);

/// log z with arg in (0, 2 pi); throws InvalidInput on the nonnegative real axis.
cplx log_branch(cplx z);

struct ContourSpec {
  double sigma = 0.0;
  double t_max = 0.0;  // 0 selects the height automatically
  double tol = 1e-12;  // relative
};

/// sigma strictly between max(-alpha) and min(1 - beta). Throws ContourInvalid.
ContourSpec default_contour(std::span<const double> alphas, std::span<const double> betas);

cplx mb_integrand(int j, cplx s, cplx log_z, std::span<const double> alphas, std::span<const double> betas);

cplx mb_integral_quadrature(int j, cplx z, std::span<const double> alphas, std::span<const double> betas,
                            const ContourSpec& contour);

/// Sum over the right-hand poles, |z| < 1. All beta equal to 1 selects the
/// order-n pole route; otherwise the betas must be distinct modulo 1.
cplx mb_integral_residues(int j, cplx z, std::span<const double> alphas, std::span<const double> betas,
                          int terms = 400);

/// (f_{n-1}/(2 pi i)^{n-1}, ..., f_0) at z for beta = (1, ..., 1). With
/// `c_normalized` the coefficients carry C^m (series radius 1/C).
std::vector<cplx> frobenius_eval_unipotent(std::span<const double> alphas, bool c_normalized, double C, cplx z,
                                           int terms = 2000);

/// (f_1, ..., f_n), f_l = z^{1 - beta_l} sum prod (alpha - beta_l + 1)_m / prod (beta - beta_l + 1)_m z^m.
std::vector<cplx> frobenius_eval_nonresonant(std::span<const double> alphas, std::span<const double> betas, cplx z,
                                             int terms = 2000);

/// Numeric values of lambda (from C) and g_3, g_5, ... up to g_{max_odd}.
GeneratorValues numeric_generators(double C, int max_odd);

struct VerifyReport {
  std::vector<cplx> lhs;  // I_k(z) by quadrature
  std::vector<cplx> rhs;  // transformation matrix times Frobenius column
  double residual = 0.0;  // max |lhs - rhs| / max |lhs|
};

/// I = T f for a cyclotomic unipotent case. The integrals are divided by
/// prod Gamma(alpha_k) to match the normalization of T. The raw variant uses
/// T with lambda and the raw Frobenius series; the normalized one uses T_C
/// against the C-normalized series at z / C.
VerifyReport verify_T(std::span<const BigRational> alphas, cplx z, double tol = 1e-12, bool normalized = false,
                      int terms = 2000);

}  // namespace hgm
