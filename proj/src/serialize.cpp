#include "hgmono/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "hgmono/errors.hpp"

namespace hgm {

using nlohmann::json;

json to_json(const ZetaElem& x) {
  json out = json::array();
  for (const auto& [mono, c] : x.terms()) {
    json m = json::object();
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] != 0) m[generator_name(static_cast<int>(i))] = mono[i];
    out.push_back({{"coeff", c.str()}, {"mono", m}});
  }
  return out;
}

ZetaElem zeta_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("zeta element must be a JSON array");
  ZetaElem::TermMap terms;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff")) throw InvalidInput("malformed zeta term");
    ZetaElem::Monomial mono;
    if (term.contains("mono")) {
      for (const auto& [name, e] : term.at("mono").items()) {
        auto idx = static_cast<std::size_t>(generator_index(name));
        if (mono.size() <= idx) mono.resize(idx + 1, 0);
        mono[idx] += e.get<int>();
      }
    }
    auto c = BigRational::parse(term.at("coeff").get<std::string>());
    auto [it, inserted] = terms.try_emplace(mono, c);
    if (!inserted) it->second += c;
  }
  return ZetaElem::from_terms(std::move(terms));
}

json to_json(const FieldMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FieldMatrix field_matrix_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("matrix must be a JSON array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
  FieldMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) throw InvalidInput("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = zeta_from_json(row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

json triple_to_json(const MonodromyTriple& t, Basis basis) {
  const int n = static_cast<int>(t.M0.rows());
  json gens = json::array();
  for (int g : problem_generators(n, basis)) gens.push_back(generator_name(g));
  return {{"n", n},
          {"basis", basis_name(basis)},
          {"generators", gens},
          {"matrices", {{"M0", to_json(t.M0)}, {"M1", to_json(t.M1)}, {"Minf", to_json(t.Minf)}}}};
}

MonodromyTriple triple_from_json(const json& j) {
  const auto& m = j.at("matrices");
  return {field_matrix_from_json(m.at("M0")), field_matrix_from_json(m.at("M1")),
          field_matrix_from_json(m.at("Minf"))};
}

json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string format_cells(const std::vector<std::vector<std::string>>& cells, const std::string& indent) {
  std::size_t cols = cells.empty() ? 0 : cells[0].size();
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < cols; ++j) width[j] = std::max(width[j], row[j].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    os << indent << "[";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) os << "  ";
      os << std::setw(static_cast<int>(width[j])) << row[j];
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace

std::string format_matrix(const FieldMatrix& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    cells.emplace_back();
    for (Eigen::Index j = 0; j < m.cols(); ++j) cells.back().push_back(m(i, j).str());
  }
  return format_cells(cells, indent);
}

std::string format_matrix(const ComplexMatrix& m, int precision, const std::string& indent) {
  std::vector<std::vector<std::string>> cells;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    cells.emplace_back();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::ostringstream os;
      // no "-0" in the output
      const double eps = 0.5 * std::pow(10.0, -precision);
      double re = std::abs(m(i, j).real()) < eps ? 0.0 : m(i, j).real();
      double im = std::abs(m(i, j).imag()) < eps ? 0.0 : m(i, j).imag();
      os << std::fixed << std::setprecision(precision) << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
      cells.back().push_back(os.str());
    }
  }
  return format_cells(cells, indent);
}

}  // namespace hgm

namespace hgm {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Fraction "p/q" or decimal.
double parse_real(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw InvalidInput("empty number");
  if (t.find('/') != std::string::npos) return BigRational::parse(t).to_double();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse number '" + t + "'");
  }
  if (used != t.size()) throw InvalidInput("cannot parse number '" + t + "'");
  return v;
}

}  // namespace

std::vector<BigRational> parse_rational_list(const std::string& text) {
  std::vector<BigRational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string piece = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (piece.empty()) throw InvalidInput("empty entry in list '" + text + "'");
    out.push_back(BigRational::parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::complex<double> parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw InvalidInput("empty complex number");
  if (t.back() != 'i') return {parse_real(t), 0.0};
  t.pop_back();
  // split at the last sign that is not the leading one and not an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    if (s.front() == '+') s.erase(0, 1);
    return parse_real(s);
  };
  if (split == std::string::npos) return {0.0, imag_part(t)};
  return {parse_real(t.substr(0, split)), imag_part(t.substr(split))};
}

}  // namespace hgm
