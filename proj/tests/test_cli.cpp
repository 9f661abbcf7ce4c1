#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "hgmono/levelt_mb.hpp"
#include "hgmono/matrix_ops.hpp"
#include "hgmono/serialize.hpp"
#include "hgmono/unipotent.hpp"

using namespace hgm;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HGMONO_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("factor") {
  auto r = run("factor --alphas 1/5,2/5,3/5,4/5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "a = [5], b = [1]"));
  CHECK(contains(r.out, "C = 3125"));
  CHECK(contains(r.out, "d = 5"));
  auto last = run("factor --alphas 1/6,1/2,1/2,5/6");
  CHECK(contains(last.out, "C = 6912"));
  CHECK(contains(last.out, "d = 4"));
  CHECK(run("factor --alphas 1/3,1/4").code == 2);
  CHECK(run("factor --alphas 1/0").code == 2);
  CHECK(run("factor").code == 2);
  CHECK(run("bogus").code == 2);
}

TEST_CASE("monodromy") {
  auto r = run("monodromy --alphas 1/2,1/2,1/2 --basis normalized-frobenius");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "M1 =\n  [ 0  0  -1/8]\n  [ 0  1     0]\n  [-8  0     0]\n"));

  auto j = run("monodromy --alphas 1/5,2/5,3/5,4/5 --basis mellin-barnes --format json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["basis"] == "mellin-barnes");
  auto t = triple_from_json(doc);
  auto q = to_quotient_form(recognize_cyclotomic(parse_rational_list("1/5,2/5,3/5,4/5")));
  auto expect = unipotent_monodromy(q, 4, Basis::MellinBarnes);
  CHECK(matrices_equal<ZetaElem>(t.M1, expect.M1));
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index k = 0; k < 4; ++k) CHECK(t.M1(i, k).is_rational());

  auto raw = run("monodromy --alphas 1/2,1/2 --basis frobenius --format json");
  auto rdoc = nlohmann::json::parse(raw.out);
  CHECK(rdoc["generators"] == nlohmann::json::array({"lambda"}));
  auto rt = triple_from_json(rdoc);
  CHECK(matrices_equal<ZetaElem>(rt.M1, unipotent_monodromy(to_quotient_form(recognize_cyclotomic(
                                                                 parse_rational_list("1/2,1/2"))),
                                                             2, Basis::Frobenius)
                                            .M1));
  CHECK(run("monodromy --alphas 1/2,1/2 --basis other").code == 2);
}

TEST_CASE("output is deterministic") {
  for (const char* args : {"table --n 4", "monodromy --alphas 1/6,1/6,5/6,5/6 --format json",
                           "nonresonant --alphas 1/5,2/5 --betas 1,1/2"}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("table") {
  auto t4 = run("table --n 4");
  CHECK(t4.code == 0);
  CHECK(contains(t4.out, "4096"));
  CHECK(contains(t4.out, "some published tables print 496"));
  auto t3 = run("table --n 3 --format json");
  auto doc = nlohmann::json::parse(t3.out);
  CHECK(doc["rows"].size() == 4);
  for (const auto& row : doc["rows"]) CHECK(row["bd"] == "-1");
  auto t2 = run("table --n 2 --format json");
  std::vector<std::string> ds;
  auto doc2 = nlohmann::json::parse(t2.out);
  for (const auto& row : doc2["rows"]) ds.push_back(row["d"]);
  CHECK(ds == std::vector<std::string>{"4", "3", "2", "1"});
  CHECK(run("table --n 5").code == 2);
}

TEST_CASE("verify, series, nonresonant") {
  auto v = run("verify --alphas 1/2,1/2 --z -1/2");
  CHECK(v.code == 0);
  CHECK(contains(v.out, "PASS"));
  // an impossible tolerance is reported as a verification failure
  CHECK(run("verify --alphas 1/2,1/2 --z -1/2 --tol 1e-30").code == 1);
  CHECK(run("verify --alphas 1/2,1/2 --z 2").code == 2);

  auto s = run("series --alphas 1/5,2/5,3/5,4/5 --terms 60");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("0 1\n1 120\n2 113400\n", 0) == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 60);

  auto n = run("nonresonant --alphas 1/5,2/5 --betas 1,1/2 --format json");
  CHECK(n.code == 0);
  auto doc = nlohmann::json::parse(n.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["matrices"]["M1"].size() == 2);
  CHECK(run("nonresonant --alphas 1/2,1/3 --betas 1,1/2").code == 2);
}

TEST_CASE("--out writes a file") {
  std::string path = "hgmono_cli_test_out.json";
  CHECK(run("factor --alphas 1/2,1/2 --format json --out " + path).code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string text;
  std::array<char, 1024> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), f)) > 0) text.append(buf.data(), got);
  std::fclose(f);
  std::remove(path.c_str());
  CHECK(nlohmann::json::parse(text)["C"] == "16");
}
