#include "hgmono/unipotent.hpp"

#include "hgmono/errors.hpp"

namespace hgm {

namespace {

void check_degree(const QuotientForm& q, int n) {
  if (n < 1) throw InvalidInput("degree must be at least 1");
  if (q.degree() != n) throw InvalidInput("quotient form degree " + std::to_string(q.degree()) + " != n = " + std::to_string(n));
}

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

ZetaElem rat(const BigRational& r) { return ZetaElem(r); }

}  // namespace

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::NormalizedFrobenius: return "normalized-frobenius";
    case Basis::Frobenius: return "frobenius";
    case Basis::MellinBarnes: return "mellin-barnes";
  }
  return "";
}

Basis parse_basis(const std::string& name) {
  if (name == "normalized-frobenius") return Basis::NormalizedFrobenius;
  if (name == "frobenius") return Basis::Frobenius;
  if (name == "mellin-barnes") return Basis::MellinBarnes;
  throw InvalidInput("unknown basis '" + name + "'");
}

UnipotentProblem UnipotentProblem::from_alphas(std::span<const BigRational> alphas) {
  UnipotentProblem p;
  p.alphas = normalize_alphas(alphas);
  p.q = to_quotient_form(recognize_cyclotomic(alphas));
  p.n = static_cast<int>(alphas.size());
  p.C = compute_C(p.q);
  return p;
}

std::vector<int> problem_generators(int n, Basis basis) {
  std::vector<int> gens;
  if (basis == Basis::Frobenius) gens.push_back(0);
  for (int k = 3; k <= n - 1; k += 2) gens.push_back(generator_index_of_g(k));
  return gens;
}

FieldMatrix m0_unipotent(int n) {
  std::vector<ZetaElem> e(sz(n));
  for (int k = 0; k < n; ++k) e[sz(k)] = BigRational(BigInt(1), factorial(static_cast<unsigned>(k)));
  return toeplitz(Jet<ZetaElem>(std::move(e)));
}

std::vector<BigRational> c_coeffs(const QuotientForm& q, int n) {
  check_degree(q, n);
  // prod_{m=1}^{n-1} (z + n/2 - m), ascending coefficients
  std::vector<BigRational> poly{BigRational(1)};
  for (int m = 1; m <= n - 1; ++m) {
    BigRational shift = BigRational(BigInt(n), BigInt(2)) - BigRational(m);
    std::vector<BigRational> next(poly.size() + 1, BigRational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += shift * poly[i];
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  }
  BigRational scale = compute_d(q) / BigRational(factorial(static_cast<unsigned>(n - 1)));
  std::vector<BigRational> c(sz(n));
  for (int j = 0; j < n; ++j) c[sz(j)] = scale * BigRational(factorial(static_cast<unsigned>(j))) * poly[sz(j)];
  return c;
}

namespace {

// sum over partitions p of l of (1/M(p)) prod_i c_{p_i} zeta(p_i) / (2 pi i)^{p_i}
ZetaElem partition_sum(const QuotientForm& q, Sign sign, int l) {
  ZetaElem total;
  for (const auto& p : partitions(l)) {
    ZetaElem term(BigRational(BigInt(1), multiplicity_M(p)));
    for (int part : p.parts) {
      term *= rat(c_pm(q, sign, part)) * zeta_symbol(part);
      if (term.is_zero()) break;
    }
    total += term;
  }
  return total;
}

}  // namespace

VVectors v_vectors(const QuotientForm& q, int n) {
  check_degree(q, n);
  auto c = c_coeffs(q, n);
  std::vector<ZetaElem> psi(sz(n));
  VVectors v{std::vector<ZetaElem>(sz(n)), std::vector<ZetaElem>(sz(n))};
  for (int l = 0; l < n; ++l) {
    psi[sz(l)] = partition_sum(q, Sign::Minus, l);
    v.plus[sz(l)] = partition_sum(q, Sign::Plus, l);
  }
  for (int j = 0; j < n; ++j)
    for (int l = 0; l + j < n; ++l) v.minus[sz(j)] += rat(c[sz(l + j)]) * psi[sz(l)];
  return v;
}

FieldMatrix m1_over_C(const QuotientForm& q, int n) {
  auto v = v_vectors(q, n);
  return identity<ZetaElem>(n) - outer(v.minus, v.plus);
}

FieldMatrix m_infinity(const QuotientForm& q, int n) {
  FieldMatrix m0m1 = m0_unipotent(n) * m1_over_C(q, n);
  return matrix_inverse(m0m1);
}

MonodromyTriple unipotent_triple(const QuotientForm& q, int n) {
  MonodromyTriple t;
  t.M0 = m0_unipotent(n);
  t.M1 = m1_over_C(q, n);
  FieldMatrix m0m1 = t.M0 * t.M1;
  t.Minf = matrix_inverse(m0m1);
  return t;
}

Jet<ZetaElem> zeta_log_jet(const QuotientForm& q, Sign sign, int n) {
  Jet<ZetaElem> j(sz(n));
  for (int p = 2; p < n; ++p) j[sz(p)] = rat(c_pm(q, sign, p)) * zeta_symbol(p);
  return j;
}

Jet<ZetaElem> phiC_jet(const QuotientForm& q, int n) {
  check_degree(q, n);
  return jet_inverse(jet_exp(zeta_log_jet(q, Sign::Minus, n)));
}

Jet<ZetaElem> c_power_jet(int n) { return Jet<ZetaElem>::exponential(sz(n), ZetaElem::lambda()); }

FieldMatrix q_matrix(int n) {
  FieldMatrix m(n, n);
  for (int k = 0; k < n; ++k) {
    BigRational x = BigRational(k) - BigRational(BigInt(n), BigInt(2));
    BigRational term(1);  // x^l / l!, with 0^0 = 1
    for (int l = 0; l < n; ++l) {
      m(k, l) = term;
      term = term * x / BigRational(l + 1);
    }
  }
  return m;
}

Jet<ZetaElem> phi_jet(const QuotientForm& q, int n, Normalization norm) {
  Jet<ZetaElem> phi = phiC_jet(q, n);
  if (norm == Normalization::Raw) phi = phi * Jet<ZetaElem>::exponential(sz(n), -ZetaElem::lambda());
  return phi;
}

FieldMatrix t_matrix(const QuotientForm& q, int n, Normalization norm) {
  return q_matrix(n) * toeplitz(phi_jet(q, n, norm));
}

std::vector<ZetaElem> u_vector(const FieldMatrix& t) {
  FieldMatrix inv = matrix_inverse(t);
  std::vector<ZetaElem> u(static_cast<std::size_t>(inv.rows()));
  for (Eigen::Index i = 0; i < inv.rows(); ++i) u[static_cast<std::size_t>(i)] = inv(i, 0);
  return u;
}

Jet<ZetaElem> v_jet(const QuotientForm& q, int n, Normalization norm) {
  const std::size_t len = sz(n);
  const IntPolynomial poly = expand(q);
  std::vector<ZetaElem> a;
  for (const auto& c : poly.coeffs()) a.emplace_back(BigRational(c));
  Jet<ZetaElem> et = Jet<ZetaElem>::exponential(len, ZetaElem(1));
  Jet<ZetaElem> prod = jet_polyval(a, et);
  Jet<ZetaElem> shift = Jet<ZetaElem>::exponential(len, ZetaElem(BigRational(BigInt(-n), BigInt(2))));
  ZetaElem sign(n % 2 == 0 ? 1 : -1);
  return sign * (phi_jet(q, n, norm) * shift * prod);
}

FieldMatrix m1_via_T(const QuotientForm& q, int n, Normalization norm) {
  auto u = u_vector(t_matrix(q, n, norm));
  return identity<ZetaElem>(n) + outer(u, v_jet(q, n, norm).coeffs());
}

Jet<ZetaElem> w_jet(const QuotientForm& q, int n) {
  return Jet<ZetaElem>::exponential(sz(n), ZetaElem(1)) * v_jet(q, n, Normalization::CNormalized);
}

std::string WFormReport::pattern() const {
  std::string out;
  auto add = [&out](bool hit, const char* name) {
    if (!hit) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(equals_M1, "M1");
  add(equals_M0M1, "M0*M1");
  add(equals_M1M0, "M1*M0");
  add(equals_Minf_inverse, "Minf^-1");
  return out.empty() ? "none" : out;
}

WFormReport w_form(const QuotientForm& q, int n) {
  auto u = u_vector(t_matrix(q, n, Normalization::CNormalized));
  WFormReport r;
  r.W = m0_unipotent(n) + outer(u, w_jet(q, n).coeffs());
  auto t = unipotent_triple(q, n);
  FieldMatrix m0m1 = t.M0 * t.M1, m1m0 = t.M1 * t.M0;
  r.equals_M1 = matrices_equal<ZetaElem>(r.W, t.M1);
  r.equals_M0M1 = matrices_equal<ZetaElem>(r.W, m0m1);
  r.equals_M1M0 = matrices_equal<ZetaElem>(r.W, m1m0);
  r.equals_Minf_inverse = matrices_equal<ZetaElem>(r.W, matrix_inverse(t.Minf));
  return r;
}

namespace {

// S with M^{basis} = S M^{C-normalized} S^{-1}.
struct BasisChange {
  FieldMatrix s, s_inv;
};

BasisChange basis_change(const QuotientForm& q, int n, Basis b) {
  switch (b) {
    case Basis::NormalizedFrobenius:
      return {identity<ZetaElem>(n), identity<ZetaElem>(n)};
    case Basis::Frobenius:
      return {toeplitz(c_power_jet(n)), toeplitz(Jet<ZetaElem>::exponential(sz(n), -ZetaElem::lambda()))};
    case Basis::MellinBarnes: {
      FieldMatrix t = t_matrix(q, n, Normalization::CNormalized);
      FieldMatrix t_inv = matrix_inverse(t);
      return {t, t_inv};
    }
  }
  throw std::logic_error("unknown basis");
}

}  // namespace

MonodromyTriple to_basis(const MonodromyTriple& triple, const QuotientForm& q, Basis from, Basis to) {
  if (from == to) return triple;
  const int n = static_cast<int>(triple.M0.rows());
  check_degree(q, n);
  auto f = basis_change(q, n, from);
  auto g = basis_change(q, n, to);
  FieldMatrix s = g.s * f.s_inv, s_inv = f.s * g.s_inv;
  return conjugate(triple, s, s_inv);
}

MonodromyTriple unipotent_monodromy(const QuotientForm& q, int n, Basis basis) {
  return to_basis(unipotent_triple(q, n), q, Basis::NormalizedFrobenius, basis);
}

}  // namespace hgm
