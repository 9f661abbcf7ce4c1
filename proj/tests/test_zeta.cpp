#include <doctest.h>

#include "hgmono/errors.hpp"
#include "hgmono/jet.hpp"
#include "hgmono/matrix_ops.hpp"
#include "hgmono/serialize.hpp"
#include "hgmono/zeta_field.hpp"
#include "oracles.hpp"

using namespace hgm;

TEST_CASE("generators") {
  CHECK(generator_name(0) == "lambda");
  CHECK(generator_name(generator_index_of_g(5)) == "g5");
  CHECK(generator_index("g7") == 3);
  CHECK_THROWS_AS(generator_index("g4"), InvalidInput);
  CHECK_THROWS_AS(generator_index("x"), InvalidInput);
  CHECK(zeta_symbol(1).is_zero());
  CHECK(zeta_symbol(2) == ZetaElem(BigRational::parse("-1/24")));
  CHECK(zeta_symbol(3) == ZetaElem::g(3));
}

TEST_CASE("rendering") {
  ZetaElem x = ZetaElem(1) - ZetaElem(200) * ZetaElem::g(3);
  CHECK(x.str() == "1 - 200*g3");
  CHECK((ZetaElem(4) * ZetaElem::lambda() * ZetaElem::lambda()).str() == "4*lambda^2");
  CHECK(ZetaElem(BigRational::parse("-7/12")).str() == "-7/12");
  CHECK(ZetaElem().str() == "0");
}

TEST_CASE("ring axioms on random elements") {
  oracle::Gen gen(2024);
  for (int t = 0; t < 200; ++t) {
    ZetaElem a = gen.zeta_elem(), b = gen.zeta_elem(), c = gen.zeta_elem();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ZetaElem());
    CHECK(a * ZetaElem(1) == a);
    CHECK((a + ZetaElem()) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  oracle::Gen gen(99);
  GeneratorValues gv{{{0.3, -0.7}, {1.1, 0.2}, {-0.4, 0.9}}};
  for (int t = 0; t < 200; ++t) {
    ZetaElem a = gen.zeta_elem(), b = gen.zeta_elem();
    auto ea = a.evaluate(gv), eb = b.evaluate(gv);
    CHECK(std::abs((a + b).evaluate(gv) - (ea + eb)) < 1e-10);
    CHECK(std::abs((a * b).evaluate(gv) - ea * eb) < 1e-10 * (1.0 + std::abs(ea * eb)));
  }
}

TEST_CASE("division only by nonzero rationals") {
  ZetaElem x = ZetaElem::g(3) + ZetaElem(2);
  CHECK(x / ZetaElem(2) == ZetaElem(BigRational::parse("1/2")) * ZetaElem::g(3) + ZetaElem(1));
  CHECK_THROWS(x / ZetaElem::g(3));
  CHECK_THROWS(x / ZetaElem());
}

TEST_CASE("jets") {
  using J = Jet<ZetaElem>;
  const std::size_t n = 6;
  J e = J::exponential(n, ZetaElem(1));
  CHECK(e[3] == ZetaElem(BigRational::parse("1/6")));
  J log1p(n);  // log(e^t) = t
  log1p[1] = ZetaElem(1);
  CHECK(jet_exp(log1p) == e);
  CHECK(jet_inverse(e) == J::exponential(n, ZetaElem(-1)));
  J bad(n);
  bad[0] = ZetaElem(1);
  CHECK_THROWS_AS(jet_exp(bad), std::invalid_argument);
  J nonunit(n);
  nonunit[0] = ZetaElem::g(3);
  CHECK_THROWS_AS(jet_inverse(nonunit), NonInvertibleJet);
  CHECK_THROWS_AS(jet_inverse(J(n)), NonInvertibleJet);
}

TEST_CASE("toeplitz is a homomorphism") {
  oracle::Gen gen(5);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 5));
    std::vector<ZetaElem> a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = gen.zeta_elem();
      b[k] = gen.zeta_elem();
    }
    Jet<ZetaElem> ja(a), jb(b);
    CHECK(matrices_equal<ZetaElem>(toeplitz(ja * jb), toeplitz(ja) * toeplitz(jb)));
    CHECK(matrices_equal<ZetaElem>(toeplitz(ja + jb), toeplitz(ja) + toeplitz(jb)));
  }
}

TEST_CASE("exact linear algebra") {
  FieldMatrix m(2, 2);
  m << ZetaElem(1), ZetaElem::g(3), ZetaElem(0), ZetaElem(1);
  auto inv = matrix_inverse(m);
  CHECK(matrices_equal<ZetaElem>(FieldMatrix(m * inv), identity<ZetaElem>(2)));
  CHECK(inv(0, 1) == -ZetaElem::g(3));

  FieldMatrix s(2, 2);
  s << ZetaElem(1), ZetaElem(2), ZetaElem(2), ZetaElem(4);
  CHECK_THROWS_AS(matrix_inverse(s), SingularMatrix);
  FieldMatrix nr(2, 2);
  nr << ZetaElem(1), ZetaElem::g(3), ZetaElem(2), ZetaElem(1);
  CHECK_THROWS_AS(matrix_inverse(nr), NonRationalDeterminant);

  CHECK(matrix_rank(s) == 1);
  CHECK(matrix_rank(m) == 2);
  CHECK(matrix_rank_of_difference_from_identity(m) == 1);
  CHECK(matrix_rank_of_difference_from_identity(identity<ZetaElem>(3)) == 0);

  // char poly of the companion-like matrix [[0, -2], [1, 3]] is X^2 - 3X + 2
  FieldMatrix c(2, 2);
  c << ZetaElem(0), ZetaElem(-2), ZetaElem(1), ZetaElem(3);
  auto cp = characteristic_polynomial(c);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == ZetaElem(2));
  CHECK(cp[1] == ZetaElem(-3));
  CHECK(cp[2] == ZetaElem(1));
  CHECK(determinant(c) == ZetaElem(2));
}

TEST_CASE("random unipotent-triangular inverses") {
  oracle::Gen gen(17);
  for (int t = 0; t < 20; ++t) {
    const int n = gen.uniform(1, 5);
    FieldMatrix m = identity<ZetaElem>(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) m(i, j) = gen.zeta_elem();
    FieldMatrix p = identity<ZetaElem>(n);  // a rational permutation-like scaling
    for (int i = 0; i < n; ++i) p(i, i) = ZetaElem(i + 1);
    FieldMatrix a = p * m;
    CHECK(matrices_equal<ZetaElem>(FieldMatrix(a * matrix_inverse(a)), identity<ZetaElem>(n)));
  }
}

TEST_CASE("json round trip") {
  oracle::Gen gen(31);
  for (int t = 0; t < 50; ++t) {
    ZetaElem x = gen.zeta_elem();
    CHECK(zeta_from_json(to_json(x)) == x);
    CHECK(zeta_from_json(nlohmann::json::parse(to_json(x).dump())) == x);
  }
  auto j = nlohmann::json::parse(R"([{"coeff": "3/6", "mono": {"g3": 2, "lambda": 1}}])");
  ZetaElem expect = ZetaElem(BigRational::parse("1/2")) * ZetaElem::g(3) * ZetaElem::g(3) * ZetaElem::lambda();
  CHECK(zeta_from_json(j) == expect);
  CHECK_THROWS_AS(zeta_from_json(nlohmann::json::parse(R"({"coeff": "1"})")), InvalidInput);
  CHECK_THROWS_AS(zeta_from_json(nlohmann::json::parse(R"([{"coeff": "1", "mono": {"g2": 1}}])")), InvalidInput);
}

TEST_CASE("text parsing") {
  auto v = parse_rational_list("1/5, 2/5,3/5");
  REQUIRE(v.size() == 3);
  CHECK(v[1] == BigRational::parse("2/5"));
  CHECK_THROWS_AS(parse_rational_list("1/5,,2/5"), InvalidInput);
  CHECK(parse_complex("-1/2") == std::complex<double>(-0.5, 0.0));
  CHECK(parse_complex("0.3+0.2i") == std::complex<double>(0.3, 0.2));
  CHECK(parse_complex("0.3-0.2i") == std::complex<double>(0.3, -0.2));
  CHECK(parse_complex("2i") == std::complex<double>(0.0, 2.0));
  CHECK(parse_complex("-i") == std::complex<double>(0.0, -1.0));
  CHECK(parse_complex("1e-3+1e-2i") == std::complex<double>(1e-3, 1e-2));
  CHECK_THROWS_AS(parse_complex("abc"), InvalidInput);
}
