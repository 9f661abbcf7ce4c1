#pragma once

// JSON and aligned-text rendering of exact and numeric results.

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgmono/triple.hpp"
#include "hgmono/unipotent.hpp"
#include "hgmono/levelt_mb.hpp"

namespace hgm {

/// [{"coeff": "p/q", "mono": {"g3": e, ...}}, ...] in monomial order.
nlohmann::json to_json(const ZetaElem& x);
ZetaElem zeta_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FieldMatrix& m);
FieldMatrix field_matrix_from_json(const nlohmann::json& j);

/// {n, basis, generators, matrices: {M0, M1, Minf}}.
nlohmann::json triple_to_json(const MonodromyTriple& t, Basis basis);
MonodromyTriple triple_from_json(const nlohmann::json& j);

/// Complex entries as [re, im].
nlohmann::json to_json(const ComplexMatrix& m);

/// Right-aligned columns, exact fractions.
std::string format_matrix(const FieldMatrix& m, const std::string& indent = "  ");
std::string format_matrix(const ComplexMatrix& m, int precision = 10, const std::string& indent = "  ");

}  // namespace hgm

namespace hgm {

/// "1/5,2/5,3/5" -> reduced rationals. Throws InvalidInput.
std::vector<BigRational> parse_rational_list(const std::string& text);

/// "-1/2", "0.3+0.2i", "0.3-0.2i", "2i". Throws InvalidInput.
std::complex<double> parse_complex(const std::string& text);

}  // namespace hgm
