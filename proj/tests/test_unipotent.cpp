#include <doctest.h>

#include "hgmono/levelt_mb.hpp"
#include "hgmono/matrix_ops.hpp"
#include "hgmono/tables.hpp"
#include "hgmono/unipotent.hpp"
#include "oracles.hpp"

using namespace hgm;

namespace {

QuotientForm qf(std::initializer_list<const char*> xs) {
  std::vector<BigRational> v;
  for (auto x : xs) v.push_back(BigRational::parse(x));
  return to_quotient_form(recognize_cyclotomic(v));
}

ZetaElem r(const char* s) { return ZetaElem(BigRational::parse(s)); }

FieldMatrix mat(int n, std::initializer_list<ZetaElem> xs) {
  FieldMatrix m(n, n);
  auto it = xs.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

const QuotientForm kQuintic = qf({"1/5", "2/5", "3/5", "4/5"});
const QuotientForm kSquare = qf({"1/2", "1/2"});
const QuotientForm kCube = qf({"1/2", "1/2", "1/2"});

std::vector<QuotientForm> all_table_forms() {
  std::vector<QuotientForm> out;
  for (int n : {2, 3, 4})
    for (const auto& c : table_cases(n)) out.push_back(to_quotient_form(recognize_cyclotomic(c.alphas)));
  return out;
}

}  // namespace

TEST_CASE("m0") {
  CHECK(matrices_equal<ZetaElem>(m0_unipotent(2), mat(2, {1, 1, 0, 1})));
  auto m = m0_unipotent(4);
  CHECK(m(0, 2) == r("1/2"));
  CHECK(m(0, 3) == r("1/6"));
  FieldMatrix nil = m - identity<ZetaElem>(4);
  CHECK(is_zero_matrix<ZetaElem>(FieldMatrix(nil * nil * nil * nil)));
  CHECK(!is_zero_matrix<ZetaElem>(FieldMatrix(nil * nil * nil)));
}

TEST_CASE("c coefficients") {
  auto c = c_coeffs(kQuintic, 4);
  CHECK(c == std::vector<BigRational>{0, BigRational::parse("-5/6"), 0, 5});
  CHECK(c_coeffs(kSquare, 2) == std::vector<BigRational>{0, 4});
  CHECK(c_coeffs(kCube, 3) == std::vector<BigRational>{-1, 0, 8});
  CHECK_THROWS_AS(c_coeffs(kQuintic, 3), InvalidInput);
}

TEST_CASE("v vectors") {
  auto v = v_vectors(kQuintic, 4);
  CHECK(v.minus == std::vector<ZetaElem>{ZetaElem(200) * ZetaElem::g(3), r("25/12"), 0, 5});
  CHECK(v.plus == std::vector<ZetaElem>{1, 0, r("5/12"), ZetaElem(-40) * ZetaElem::g(3)});
  auto v2 = v_vectors(kSquare, 2);
  CHECK(v2.minus == std::vector<ZetaElem>{0, 4});
  CHECK(v2.plus == std::vector<ZetaElem>{1, 0});
}

TEST_CASE("phi jet") {
  auto phi = phiC_jet(kQuintic, 4);
  CHECK(phi[0] == ZetaElem(1));
  CHECK(phi[1] == ZetaElem(0));
  CHECK(phi[2] == r("-7/12"));
  auto e = jet_exp(zeta_log_jet(kQuintic, Sign::Plus, 4));
  // exp(sum c_p^+ zeta(p) t^p) against the partition sums
  auto v = v_vectors(kQuintic, 4);
  for (std::size_t j = 0; j < 4; ++j) CHECK(e[j] == v.plus[j]);
}

TEST_CASE("Q and T") {
  CHECK(matrices_equal<ZetaElem>(q_matrix(2), mat(2, {1, -1, 1, 0})));
  auto t = t_matrix(kQuintic, 4, Normalization::CNormalized);
  CHECK(determinant(t).rational_value().has_value());
  // (-1)^n (prod b / prod a) V_C(0) = 1
  for (const auto& q : all_table_forms()) {
    const int n = q.degree();
    ZetaElem v0 = v_jet(q, n, Normalization::CNormalized)[0];
    ZetaElem sign(n % 2 ? -1 : 1);
    CHECK(sign * v0 / ZetaElem(compute_d(q)) == ZetaElem(1));
  }
}

TEST_CASE("worked matrices") {
  CHECK(matrices_equal<ZetaElem>(m1_over_C(kSquare, 2), mat(2, {1, 0, -4, 1})));
  FieldMatrix m3 = mat(3, {0, 0, r("-1/8"), 0, 1, 0, -8, 0, 0});
  CHECK(matrices_equal<ZetaElem>(m1_over_C(kCube, 3), m3));
  CHECK(matrices_equal<ZetaElem>(matrix_inverse(m3), m3));
  auto m = m1_over_C(kQuintic, 4);
  ZetaElem a = ZetaElem(-200) * ZetaElem::g(3);
  CHECK(m(0, 0) == ZetaElem(1) + a);
  CHECK(m(3, 0) == ZetaElem(-5));
  CHECK(m(0, 3) == a * a / ZetaElem(5));
}

TEST_CASE("structure over the table cases") {
  for (const auto& q : all_table_forms()) {
    const int n = q.degree();
    CAPTURE(q.str());
    auto t = unipotent_triple(q, n);
    auto v = v_vectors(q, n);
    ZetaElem dot;
    for (int k = 0; k < n; ++k) dot += v.plus[k] * v.minus[k];
    FieldMatrix r1 = t.M1 - identity<ZetaElem>(n);
    CHECK(matrix_rank(r1) == 1);
    CHECK(relation_holds(t));
    // M1 is a transvection for even n and a reflection for odd n
    if (n % 2 == 0) {
      CHECK(dot == ZetaElem(0));
      CHECK(is_zero_matrix<ZetaElem>(FieldMatrix(r1 * r1)));
      CHECK(determinant(t.M1) == ZetaElem(1));
    } else {
      CHECK(dot == ZetaElem(2));
      CHECK(matrices_equal<ZetaElem>(FieldMatrix(r1 * r1), FieldMatrix(ZetaElem(-2) * r1)));
      CHECK(determinant(t.M1) == ZetaElem(-1));
    }
    auto cp = characteristic_polynomial(FieldMatrix(matrix_inverse(t.Minf)));
    auto poly = expand(q);
    for (int k = 0; k <= n; ++k) CHECK(cp[k] == ZetaElem(BigRational(poly.coeff(k))));
    CHECK(matrices_equal<ZetaElem>(m1_via_T(q, n), t.M1));
    CHECK(matrices_equal<ZetaElem>(m_infinity(q, n), t.Minf));
  }
}

TEST_CASE("route equivalence on random sets") {
  oracle::Gen gen(4242);
  for (int trial = 0; trial < 12; ++trial) {
    auto alphas = gen.cyclotomic_alphas(gen.uniform(2, 6));
    auto q = to_quotient_form(recognize_cyclotomic(alphas));
    const int n = q.degree();
    CAPTURE(q.str());
    CHECK(matrices_equal<ZetaElem>(m1_via_T(q, n), m1_over_C(q, n)));
    CHECK(matrices_equal<ZetaElem>(m1_via_T(q, n, Normalization::Raw),
                                   unipotent_monodromy(q, n, Basis::Frobenius).M1));
  }
}

TEST_CASE("basis changes") {
  auto t = unipotent_triple(kSquare, 2);
  auto same = to_basis(t, kSquare, Basis::NormalizedFrobenius, Basis::NormalizedFrobenius);
  CHECK(matrices_equal<ZetaElem>(same.M1, t.M1));

  auto raw = unipotent_monodromy(kSquare, 2, Basis::Frobenius);
  ZetaElem l = ZetaElem::lambda();
  CHECK(matrices_equal<ZetaElem>(raw.M1, mat(2, {ZetaElem(1) - ZetaElem(4) * l, ZetaElem(4) * l * l, -4,
                                                  ZetaElem(1) + ZetaElem(4) * l})));
  CHECK(relation_holds(raw));
  CHECK(matrices_equal<ZetaElem>(raw.M0, t.M0));

  auto back = to_basis(raw, kSquare, Basis::Frobenius, Basis::NormalizedFrobenius);
  CHECK(matrices_equal<ZetaElem>(back.M1, t.M1));
  CHECK(matrices_equal<ZetaElem>(back.Minf, t.Minf));

  auto mb = unipotent_monodromy(kQuintic, 4, Basis::MellinBarnes);
  auto direct = mb_triple(expand(kQuintic), IntPolynomial::x_pow_minus_one(1) * IntPolynomial::x_pow_minus_one(1) *
                                               IntPolynomial::x_pow_minus_one(1) * IntPolynomial::x_pow_minus_one(1));
  CHECK(matrices_equal<ZetaElem>(mb.M0, direct.M0));
  CHECK(matrices_equal<ZetaElem>(mb.M1, direct.M1));
  CHECK(matrices_equal<ZetaElem>(mb.Minf, direct.Minf));
  CHECK(mb.M1(0, 1) == ZetaElem(5));
}

TEST_CASE("generator support") {
  for (const auto& q : all_table_forms()) {
    const int n = q.degree();
    for (Basis b : {Basis::NormalizedFrobenius, Basis::Frobenius, Basis::MellinBarnes}) {
      auto t = unipotent_monodromy(q, n, b);
      auto allowed = problem_generators(n, b);
      for (const FieldMatrix* m : {&t.M0, &t.M1, &t.Minf})
        for (Eigen::Index i = 0; i < n; ++i)
          for (Eigen::Index j = 0; j < n; ++j)
            for (int g : (*m)(i, j).support()) CHECK(std::find(allowed.begin(), allowed.end(), g) != allowed.end());
    }
  }
}

TEST_CASE("W form") {
  auto w = w_form(kSquare, 2);
  CHECK(w.W.rows() == 2);
  std::string pattern = w.pattern();
  for (const auto& q : all_table_forms()) CHECK(w_form(q, q.degree()).pattern() == pattern);
  CHECK(pattern == "M1*M0");
}

TEST_CASE("names") {
  CHECK(parse_basis("mellin-barnes") == Basis::MellinBarnes);
  CHECK(basis_name(Basis::Frobenius) == "frobenius");
  CHECK_THROWS_AS(parse_basis("other"), InvalidInput);
  CHECK(problem_generators(6, Basis::Frobenius) == std::vector<int>{0, 1, 2});
  CHECK(problem_generators(4, Basis::NormalizedFrobenius) == std::vector<int>{1});
}
