#pragma once

// Exact monodromy for the maximally unipotent case beta = (1, ..., 1) with a
// cyclotomic exponent set alpha. Frobenius-basis vectors are ordered
//   (f_{n-1} / (2 pi i)^{n-1}, ..., f_1 / (2 pi i), f_0).

#include <span>
#include <string>
#include <vector>

#include "hgmono/cyclo_quotient.hpp"
#include "hgmono/jet.hpp"
#include "hgmono/triple.hpp"

namespace hgm {

enum class Basis { NormalizedFrobenius, Frobenius, MellinBarnes };
enum class Normalization { CNormalized, Raw };

/// "normalized-frobenius", "frobenius", "mellin-barnes".
std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

struct UnipotentProblem {
  std::vector<BigRational> alphas;  // reduced into (0, 1)
  QuotientForm q;
  int n = 0;
  BigInt C;

  static UnipotentProblem from_alphas(std::span<const BigRational> alphas);
};

/// Generators that may occur in entries for this degree and basis:
/// g_k for odd 3 <= k <= n - 1, plus lambda for the raw Frobenius basis.
std::vector<int> problem_generators(int n, Basis basis);

/// e^N: (k, l) entry 1/(l - k)! for l >= k.
FieldMatrix m0_unipotent(int n);

/// c_j = d/(n-1)! * j! * [z^j] prod_{m=1}^{n-1} (z - m + n/2).
std::vector<BigRational> c_coeffs(const QuotientForm& q, int n);

struct VVectors {
  std::vector<ZetaElem> minus;
  std::vector<ZetaElem> plus;
};

/// Partition-sum vectors with M_{1/C} = I - v_- v_+^T.
VVectors v_vectors(const QuotientForm& q, int n);

FieldMatrix m1_over_C(const QuotientForm& q, int n);
/// (M0 M1)^{-1}.
FieldMatrix m_infinity(const QuotientForm& q, int n);

/// Triple in the C-normalized Frobenius basis.
MonodromyTriple unipotent_triple(const QuotientForm& q, int n);

/// sum_{p >= 2} c_p^{sign} zeta(p) t^p, truncated to n terms.
Jet<ZetaElem> zeta_log_jet(const QuotientForm& q, Sign sign, int n);

/// Jet of phi_C(s) = prod Gamma(a s + 1) / prod Gamma(b s + 1) * Gamma(1 - s)^n.
Jet<ZetaElem> phiC_jet(const QuotientForm& q, int n);

/// Jet of C^s = exp(lambda t).
Jet<ZetaElem> c_power_jet(int n);

/// Q_{kl} = (k - n/2)^l / l!, with 0^0 = 1.
FieldMatrix q_matrix(int n);

/// phi-jet for the chosen normalization; the raw one is phi_C * C^{-s}.
Jet<ZetaElem> phi_jet(const QuotientForm& q, int n, Normalization norm);

/// Mellin-Barnes column = T * Frobenius column; T = Q * toeplitz(phi).
FieldMatrix t_matrix(const QuotientForm& q, int n, Normalization norm);

/// First column of T^{-1}.
std::vector<ZetaElem> u_vector(const FieldMatrix& t);

/// Jet of V(s) = (-1)^n phi(s) e^{-pi i n s} prod (e^{2 pi i s} - e^{-2 pi i alpha_k}).
Jet<ZetaElem> v_jet(const QuotientForm& q, int n, Normalization norm);

/// I + u v^T with u from T and v from the V-jet.
FieldMatrix m1_via_T(const QuotientForm& q, int n, Normalization norm = Normalization::CNormalized);

/// Jet of W(s) = e^{2 pi i s} V(s); the sign factor (-1)^n e^{-2 pi i sum alpha} is 1.
Jet<ZetaElem> w_jet(const QuotientForm& q, int n);

struct WFormReport {
  FieldMatrix W;  // e^N + u v_W^T
  bool equals_M1 = false;
  bool equals_M0M1 = false;
  bool equals_M1M0 = false;
  bool equals_Minf_inverse = false;

  /// Comma separated names of the matching products, or "none".
  std::string pattern() const;
};

WFormReport w_form(const QuotientForm& q, int n);

/// Conjugates between the C-normalized Frobenius, raw Frobenius and
/// Mellin-Barnes bases. Matrices act on column vectors of basis functions.
MonodromyTriple to_basis(const MonodromyTriple& triple, const QuotientForm& q, Basis from, Basis to);

/// Convenience: the triple for q in the requested basis.
MonodromyTriple unipotent_monodromy(const QuotientForm& q, int n, Basis basis);

}  // namespace hgm
