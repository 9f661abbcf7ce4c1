#pragma once

// Frobenius-basis monodromy for non-resonant parameters, in double
// precision. The basis is f_1, ..., f_n with f_l ~ z^{1 - beta_l}.

#include <complex>
#include <span>
#include <vector>

#include "hgmono/exact.hpp"
#include "hgmono/levelt_mb.hpp"
#include "hgmono/mb_numeric.hpp"

namespace hgm {

struct NonresonantProblem {
  std::vector<double> alphas;
  std::vector<double> betas;
  int n = 0;
  /// 2i (-1)^n e^{pi i sum(beta - alpha)}.
  cplx c;

  /// Throws ResonantInput when betas coincide modulo 1 or some alpha
  /// equals some beta modulo 1 (exactly or within 1e-9).
  static NonresonantProblem from_rationals(std::span<const BigRational> alphas, std::span<const BigRational> betas);
  static NonresonantProblem from_doubles(std::span<const double> alphas, std::span<const double> betas);
};

ComplexMatrix m0_diag(const NonresonantProblem& p);

/// prod Gamma(alpha_k - beta_l + 1) / prod Gamma(beta_p - beta_l + 1).
cplx gamma_ratio(const NonresonantProblem& p, int l);

/// (M1)_{kl} = delta_{kl} + 2i e^{pi i sum(beta - alpha)} (G_l / G_k)
///             * prod_m sin(pi(beta_l - alpha_m)) / sin(pi(beta_l - beta_m)),
/// the m = l denominator read as 1 and G_l = gamma_ratio(p, l).
ComplexMatrix m1_sine(const NonresonantProblem& p);

/// delta_{kl} + c e^{2 pi i beta_k} prod_m sin(pi(beta_l - alpha_m)) / sin(pi(beta_l - beta_m)),
/// kept for comparison; it is not the monodromy in the basis f_1, ..., f_n.
ComplexMatrix m1_sine_printed(const NonresonantProblem& p);

/// (M1^{-1}) M0^{-1} with M1^{-1} = I + 4 c^{-2} (M1 - I):
/// (Minf)_{kl} = e^{2 pi i beta_k} delta_{kl} + 4 c^{-2} (M1 - I)_{kl} e^{2 pi i beta_l}.
/// Requires alphas distinct modulo 1 as well.
ComplexMatrix m_infinity_formula(const NonresonantProblem& p);

/// e^{2 pi i alpha_k} delta_{kl} + (4/c) e^{2 pi i (beta_k + alpha_k)} prod ..., kept for comparison.
ComplexMatrix m_infinity_printed(const NonresonantProblem& p);

/// (I + R)^{-1} = I - R / (1 + Tr R) for rank(R) <= 1; M is passed as I + R.
/// Throws TraceMinusOne when |1 + Tr R| < 1e-12.
ComplexMatrix rank1_inverse(const ComplexMatrix& m);

struct VDTransform {
  ComplexMatrix V;  // e^{-2 pi i k beta_l}, k = 0..n-1
  ComplexMatrix D;  // diagonal
};

/// Mellin-Barnes column = V D (f_1, ..., f_n) with
///   D_ll = (-1)^n (2i)^{1-n} e^{pi i n beta_l} G_l prod_{m != l} 1 / sin(pi(beta_m - beta_l)).
VDTransform vd_transform(const NonresonantProblem& p);

/// Same without the (-1)^n; off by a sign for odd n.
VDTransform vd_transform_printed(const NonresonantProblem& p);

/// Mellin-Barnes triple conjugated into the Frobenius basis by (VD)^{-1}.
Triple<cplx> frobenius_triple_via_vd(const NonresonantProblem& p);

/// I = V D f at z, with I_k by quadrature.
VerifyReport verify_VD(const NonresonantProblem& p, cplx z, double tol = 1e-12, int terms = 2000);

}  // namespace hgm
