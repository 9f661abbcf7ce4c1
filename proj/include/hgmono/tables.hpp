#pragma once

// The worked examples for n = 2, 3, 4, recomputed from the exponent lists.

#include <string>
#include <vector>

#include "hgmono/unipotent.hpp"

namespace hgm {

struct TableCase {
  std::string label;  // e.g. "(1/5,2/5,3/5,4/5)"
  std::vector<BigRational> alphas;
};

/// The 4, 4 and 14 cyclotomic exponent sets for n = 2, 3, 4.
std::vector<TableCase> table_cases(int n);

struct TableRow {
  TableCase input;
  QuotientForm q;
  IntPolynomial poly;  // prod (X - e^{-2 pi i alpha_k}) over Z
  BigInt C;
  BigRational d;
  /// n = 3: c_2^+ / 24. n = 4: -M1(1,0) (= -d c_2^+ / 24).
  BigRational b;
  /// n = 4: M1(0,0) - 1 (= d c_3^+ g3); zero otherwise.
  ZetaElem a;
  /// Coefficient of g3 in a, i.e. (2 pi i)^3 a / zeta(3).
  BigRational a_over_g3;
  FieldMatrix M1;
  /// M1 has the closed shape displayed for this n in terms of a, b, d.
  bool shape_matches = false;
};

TableRow table_row(const TableCase& c);
std::vector<TableRow> table_rows(int n);

}  // namespace hgm
