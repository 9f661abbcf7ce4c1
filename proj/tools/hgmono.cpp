// hgmono: monodromy of hypergeometric equations from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <json.hpp>

#include "hgmono/errors.hpp"
#include "hgmono/matrix_ops.hpp"
#include "hgmono/mb_numeric.hpp"
#include "hgmono/nonresonant.hpp"
#include "hgmono/serialize.hpp"
#include "hgmono/tables.hpp"
#include "hgmono/unipotent.hpp"

using namespace hgm;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalid = 2;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot open '" + path + "' for writing");
    f << text;
  }
};

std::string join_ints(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string join_rationals(const std::vector<BigRational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

std::vector<double> to_doubles(const std::vector<BigRational>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

double max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

// Values that some published versions of the tables print differently.
const std::map<std::string, std::string>& printed_C() {
  static const std::map<std::string, std::string> m{{"(1/5,2/5,3/5,4/5)", "3025"},
                                                     {"(1/4,1/4,3/4,3/4)", "496"}};
  return m;
}

std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows) {
    w.resize(std::max(w.size(), r.size()), 0);
    for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::max(w[j], r[j].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) os << "  ";
      if (j + 1 == r.size())
        os << r[j];
      else
        os << std::left << std::setw(static_cast<int>(w[j])) << r[j];
    }
    os << "\n";
  }
  return os.str();
}

// factor

int cmd_factor(const std::string& alphas_text, const std::string& format, const Output& out) {
  auto alphas = parse_rational_list(alphas_text);
  auto cyclo = recognize_cyclotomic(alphas);
  auto q = to_quotient_form(cyclo);
  auto C = compute_C(q);
  auto d = compute_d(q);
  auto poly = cyclotomic_product(cyclo);
  if (format == "json") {
    json cy = json::object();
    for (auto [m, mult] : cyclo) cy[std::to_string(m)] = mult;
    json j{{"alphas", join_rationals(normalize_alphas(alphas))},
           {"cyclotomic", cy},
           {"a", q.a},
           {"b", q.b},
           {"quotient_form", q.str()},
           {"polynomial", poly.str()},
           {"C", C.get_str()},
           {"d", d.str()}};
    out.write(j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << "alphas:        " << join_rationals(normalize_alphas(alphas)) << "\n";
  os << "cyclotomic:   ";
  for (auto [m, mult] : cyclo) os << " Phi_" << m << (mult > 1 ? "^" + std::to_string(mult) : "");
  os << "\n";
  os << "polynomial:    " << poly.str() << "\n";
  os << "quotient form: " << q.str() << "\n";
  os << "a = " << join_ints(q.a) << ", b = " << join_ints(q.b) << "\n";
  os << "C = " << C.get_str() << "\n";
  os << "d = " << d.str() << "\n";
  out.write(os.str());
  return kOk;
}

// monodromy

int cmd_monodromy(const std::string& alphas_text, const std::string& basis_text, const std::string& format,
                  const Output& out) {
  auto problem = UnipotentProblem::from_alphas(parse_rational_list(alphas_text));
  Basis basis = parse_basis(basis_text);
  auto t = unipotent_monodromy(problem.q, problem.n, basis);
  if (format == "json") {
    out.write(triple_to_json(t, basis).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << "alphas: " << join_rationals(problem.alphas) << "\n";
  os << "quotient form: " << problem.q.str() << ", C = " << problem.C.get_str() << "\n";
  os << "basis: " << basis_name(basis) << "\n";
  os << "generators:";
  auto gens = problem_generators(problem.n, basis);
  if (gens.empty()) os << " none";
  for (int g : gens) os << " " << generator_name(g);
  os << "\n";
  if (std::find(gens.begin(), gens.end(), 0) != gens.end()) os << "  lambda = log(C)/(2 pi i)\n";
  for (int g : gens)
    if (g != 0) os << "  " << generator_name(g) << " = zeta(" << 2 * g + 1 << ")/(2 pi i)^" << 2 * g + 1 << "\n";
  os << "M0 =\n" << format_matrix(t.M0);
  os << "M1 =\n" << format_matrix(t.M1);
  os << "Minf =\n" << format_matrix(t.Minf);
  out.write(os.str());
  return kOk;
}

// table

int cmd_table(int n, const std::string& format, const Output& out) {
  auto rows = table_rows(n);
  bool all_ok = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.shape_matches; });
  if (n == 3)
    all_ok = all_ok && std::all_of(rows.begin(), rows.end(),
                                   [](const TableRow& r) { return r.b * r.d == BigRational(-1); });
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"case", r.input.label},
             {"polynomial", r.q.str()},
             {"C", r.C.get_str()},
             {"d", r.d.str()},
             {"M1", to_json(r.M1)},
             {"shape_matches", r.shape_matches}};
      if (n >= 3) j["24b"] = (BigRational(24) * r.b).str();
      if (n == 3) j["bd"] = (r.b * r.d).str();
      if (n == 4) j["a_over_g3"] = r.a_over_g3.str();
      arr.push_back(j);
    }
    out.write(json{{"n", n}, {"rows", arr}, {"consistent", all_ok}}.dump(2) + "\n");
    return all_ok ? kOk : kVerifyFailed;
  }

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> notes;
  switch (n) {
    case 2:
      cells.push_back({"case", "polynomial", "d"});
      for (const auto& r : rows) cells.push_back({r.input.label, r.q.str(), r.d.str()});
      break;
    case 3:
      cells.push_back({"case", "polynomial", "C", "24b", "d/2", "bd"});
      for (const auto& r : rows)
        cells.push_back({r.input.label, r.q.str(), r.C.get_str(), (BigRational(24) * r.b).str(),
                         (r.d / BigRational(2)).str(), (r.b * r.d).str()});
      break;
    default:
      cells.push_back({"case", "polynomial", "C", "d", "24b", "(2 pi i)^3 a/zeta(3)"});
      for (const auto& r : rows) {
        std::string c = r.C.get_str();
        auto it = printed_C().find(r.input.label);
        if (it != printed_C().end() && it->second != c) {
          notes.push_back("[" + std::to_string(notes.size() + 1) + "] " + r.input.label + ": C = " + c +
                          "; some published tables print " + it->second + ".");
          c += " [" + std::to_string(notes.size()) + "]";
        }
        cells.push_back({r.input.label, r.q.str(), c, r.d.str(), (BigRational(24) * r.b).str(),
                         r.a_over_g3.str()});
      }
      break;
  }
  std::ostringstream os;
  os << aligned(cells);
  for (const auto& note : notes) os << note << "\n";
  if (n == 2) os << "M1 = [[1, 0], [-d, 1]] in every row: " << (all_ok ? "yes" : "NO") << "\n";
  if (n == 3) os << "bd = -1 and M1 = [[0, 0, -1/d], [0, 1, 0], [-d, 0, 0]] in every row: " << (all_ok ? "yes" : "NO") << "\n";
  if (n == 4) os << "M1 = [[1+a, 0, ab/d, a^2/d], [-b, 1, -b^2/d, -ab/d], [0, 0, 1, 0], [-d, 0, -b, 1-a]] in every row: "
                 << (all_ok ? "yes" : "NO") << "\n";
  out.write(os.str());
  return all_ok ? kOk : kVerifyFailed;
}

// verify

int cmd_verify(const std::string& alphas_text, const std::string& betas_text, const std::string& z_text, double tol,
               int terms, const Output& out) {
  auto alphas = parse_rational_list(alphas_text);
  cplx z = parse_complex(z_text);
  std::ostringstream os;
  bool ok = true;
  auto line = [&](const std::string& name, double residual) {
    bool pass = residual < tol;
    ok = ok && pass;
    os << std::left << std::setw(40) << name << sci(residual) << "  " << (pass ? "ok" : "FAIL") << "\n";
  };
  os << "z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i, tol = " << sci(tol)
     << "\n";

  std::vector<double> a = to_doubles(normalize_alphas(alphas));
  std::vector<double> b;
  if (betas_text.empty()) {
    b.assign(a.size(), 1.0);
    auto raw = verify_T(alphas, z, 1e-12, false, terms);
    auto normalized = verify_T(alphas, z, 1e-12, true, terms);
    line("I = T f (raw Frobenius)", raw.residual);
    line("I = T_C f^C (C-normalized)", normalized.residual);
  } else {
    auto betas = parse_rational_list(betas_text);
    auto problem = NonresonantProblem::from_rationals(alphas, betas);
    b = problem.betas;
    a = problem.alphas;
    auto r = verify_VD(problem, z, 1e-12, terms);
    line("I = V D f", r.residual);
  }
  if (std::abs(z) < 1.0) {
    auto contour = default_contour(a, b);
    contour.tol = 1e-12;
    const int n = static_cast<int>(a.size());
    double worst = 0.0, scale = 0.0;
    for (int j = 0; j < n; ++j) {
      cplx q = mb_integral_quadrature(j, z, a, b, contour);
      cplx r = mb_integral_residues(j, z, a, b);
      worst = std::max(worst, std::abs(q - r));
      scale = std::max(scale, std::abs(q));
    }
    line("quadrature vs residue sum", worst / scale);
  }
  os << (ok ? "PASS" : "FAIL") << "\n";
  out.write(os.str());
  return ok ? kOk : kVerifyFailed;
}

// series

int cmd_series(const std::string& alphas_text, int terms, const std::string& format, const Output& out) {
  if (terms < 1) throw InvalidInput("--terms must be positive");
  auto q = to_quotient_form(recognize_cyclotomic(parse_rational_list(alphas_text)));
  auto coeffs = f0_coeffs(q, terms);
  if (format == "json") {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(c.get_str());
    out.write(json{{"quotient_form", q.str()}, {"C", compute_C(q).get_str()}, {"coefficients", arr}}.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  for (std::size_t m = 0; m < coeffs.size(); ++m) os << m << " " << coeffs[m].get_str() << "\n";
  out.write(os.str());
  return kOk;
}

// nonresonant

int cmd_nonresonant(const std::string& alphas_text, const std::string& betas_text, const std::string& z_text,
                    double tol, const std::string& format, const Output& out) {
  auto problem =
      NonresonantProblem::from_rationals(parse_rational_list(alphas_text), parse_rational_list(betas_text));
  const int n = problem.n;
  ComplexMatrix M0 = m0_diag(problem);
  ComplexMatrix M1 = m1_sine(problem);
  ComplexMatrix Minf = m_infinity_formula(problem);
  ComplexMatrix I = identity<cplx>(n);

  auto oracle = frobenius_triple_via_vd(problem);
  double rel = max_abs(M0 * M1 * Minf - I);
  double conj = max_abs(M1 - oracle.M1);
  double inv = max_abs(rank1_inverse(M1) - M1.inverse());
  auto eig = Eigen::ComplexEigenSolver<ComplexMatrix>(Minf).eigenvalues();
  double eig_err = 0.0;
  {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (double alpha : problem.alphas) {
      cplx target = std::exp(cplx(0.0, 2.0 * M_PI * alpha));
      double best = 1e300;
      int arg = -1;
      for (int k = 0; k < n; ++k)
        if (!used[static_cast<std::size_t>(k)] && std::abs(eig(k) - target) < best) {
          best = std::abs(eig(k) - target);
          arg = k;
        }
      used[static_cast<std::size_t>(arg)] = true;
      eig_err = std::max(eig_err, best);
    }
  }
  cplx z = parse_complex(z_text);
  double vd = verify_VD(problem, z).residual;

  struct Check {
    const char* name;
    double value;
    double tol;
  };
  std::vector<Check> checks{{"M0 M1 Minf - I", rel, 1e-10},
                            {"M1 vs (VD)^-1 M1^MB (VD)", conj, 1e-8},
                            {"eigenvalues of Minf vs e^{2 pi i alpha}", eig_err, 1e-9},
                            {"rank-one inverse vs direct inverse", inv, 1e-12},
                            {"I = V D f (relative)", vd, tol}};
  bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.value < c.tol; });

  if (format == "json") {
    json res = json::object();
    for (const auto& c : checks) res[c.name] = c.value;
    out.write(json{{"n", n},
                   {"alphas", problem.alphas},
                   {"betas", problem.betas},
                   {"matrices", {{"M0", to_json(M0)}, {"M1", to_json(M1)}, {"Minf", to_json(Minf)}}},
                   {"residuals", res},
                   {"pass", ok}}
                  .dump(2) + "\n");
    return ok ? kOk : kVerifyFailed;
  }
  std::ostringstream os;
  os << "M0 =\n" << format_matrix(M0) << "M1 =\n" << format_matrix(M1) << "Minf =\n" << format_matrix(Minf);
  for (const auto& c : checks)
    os << std::left << std::setw(42) << c.name << sci(c.value) << "  " << (c.value < c.tol ? "ok" : "FAIL") << "\n";
  os << (ok ? "PASS" : "FAIL") << "\n";
  out.write(os.str());
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy of generalized hypergeometric equations"};
  app.require_subcommand(1);
  app.allow_extras(false);

  std::string alphas, betas, basis = "normalized-frobenius", format = "text", z = "-1/2", out_path;
  double tol = 1e-6;
  int terms = 60, table_n = 4;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "write to a file instead of stdout"); };

  auto* factor = app.add_subcommand("factor", "cyclotomic recognition, quotient form, C and d");
  factor->add_option("--alphas", alphas, "comma separated fractions")->required();
  add_format(factor);
  add_out(factor);

  auto* mono = app.add_subcommand("monodromy", "exact monodromy triple for beta = (1, ..., 1)");
  mono->add_option("--alphas", alphas, "comma separated fractions")->required();
  mono->add_option("--basis", basis, "normalized-frobenius, frobenius or mellin-barnes")
      ->check(CLI::IsMember({"normalized-frobenius", "frobenius", "mellin-barnes"}));
  add_format(mono);
  add_out(mono);

  auto* table = app.add_subcommand("table", "the n = 2, 3, 4 tables");
  table->add_option("--n", table_n, "2, 3 or 4")->check(CLI::IsMember({2, 3, 4}));
  add_format(table);
  add_out(table);

  auto* verify = app.add_subcommand("verify", "numeric check against Mellin-Barnes integrals");
  verify->add_option("--alphas", alphas, "comma separated fractions")->required();
  verify->add_option("--betas", betas, "comma separated fractions; omit for beta = (1, ..., 1)");
  verify->add_option("--z", z, "evaluation point, e.g. -1/2 or 0.3+0.2i");
  verify->add_option("--tol", tol, "residual threshold");
  verify->add_option("--terms", terms, "series terms")->default_val(2000);
  add_out(verify);

  auto* series = app.add_subcommand("series", "integer coefficients of the holomorphic solution at z/C");
  series->add_option("--alphas", alphas, "comma separated fractions")->required();
  series->add_option("--terms", terms, "number of coefficients");
  add_format(series);
  add_out(series);

  auto* nonres = app.add_subcommand("nonresonant", "numeric monodromy for non-resonant parameters");
  nonres->add_option("--alphas", alphas, "comma separated fractions")->required();
  nonres->add_option("--betas", betas, "comma separated fractions")->required();
  nonres->add_option("--z", z, "point for the V D check");
  nonres->add_option("--tol", tol, "threshold for the V D residual");
  add_format(nonres);
  add_out(nonres);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  Output out{out_path};
  try {
    if (*factor) return cmd_factor(alphas, format, out);
    if (*mono) return cmd_monodromy(alphas, basis, format, out);
    if (*table) return cmd_table(table_n, format, out);
    if (*verify) return cmd_verify(alphas, betas, z, tol, terms, out);
    if (*series) return cmd_series(alphas, terms, format, out);
    if (*nonres) return cmd_nonresonant(alphas, betas, z, tol, format, out);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kInvalid;
}
