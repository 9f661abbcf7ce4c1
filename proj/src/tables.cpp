#include "hgmono/tables.hpp"

#include <sstream>

#include "hgmono/errors.hpp"

namespace hgm {

namespace {

TableCase make_case(std::initializer_list<const char*> fractions) {
  TableCase c;
  std::ostringstream label;
  label << "(";
  bool first = true;
  for (const char* f : fractions) {
    c.alphas.push_back(BigRational::parse(f));
    label << (first ? "" : ",") << f;
    first = false;
  }
  label << ")";
  c.label = label.str();
  return c;
}

FieldMatrix from_rows(std::initializer_list<std::initializer_list<ZetaElem>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  FieldMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

std::vector<TableCase> table_cases(int n) {
  switch (n) {
    case 2:
      return {make_case({"1/2", "1/2"}), make_case({"1/3", "2/3"}), make_case({"1/4", "3/4"}),
              make_case({"1/6", "5/6"})};
    case 3:
      return {make_case({"1/2", "1/2", "1/2"}), make_case({"1/3", "1/2", "2/3"}), make_case({"1/4", "1/2", "3/4"}),
              make_case({"1/6", "1/2", "5/6"})};
    case 4:
      return {make_case({"1/5", "2/5", "3/5", "4/5"}),     make_case({"1/10", "3/10", "7/10", "9/10"}),
              make_case({"1/2", "1/2", "1/2", "1/2"}),     make_case({"1/3", "1/3", "2/3", "2/3"}),
              make_case({"1/3", "1/2", "1/2", "2/3"}),     make_case({"1/4", "1/2", "1/2", "3/4"}),
              make_case({"1/8", "3/8", "5/8", "7/8"}),     make_case({"1/6", "1/3", "2/3", "5/6"}),
              make_case({"1/12", "5/12", "7/12", "11/12"}), make_case({"1/4", "1/4", "3/4", "3/4"}),
              make_case({"1/4", "1/3", "2/3", "3/4"}),     make_case({"1/6", "1/4", "3/4", "5/6"}),
              make_case({"1/6", "1/6", "5/6", "5/6"}),     make_case({"1/6", "1/2", "1/2", "5/6"})};
    default:
      throw InvalidInput("tables exist for n = 2, 3, 4 only");
  }
}

TableRow table_row(const TableCase& c) {
  TableRow r;
  r.input = c;
  auto cyclo = recognize_cyclotomic(c.alphas);
  r.q = to_quotient_form(cyclo);
  r.poly = cyclotomic_product(cyclo);
  r.C = compute_C(r.q);
  r.d = compute_d(r.q);
  const int n = r.q.degree();
  r.M1 = m1_over_C(r.q, n);
  const ZetaElem d(r.d), one(1);
  switch (n) {
    case 2:
      r.shape_matches = matrices_equal<ZetaElem>(r.M1, from_rows({{one, 0}, {-d, one}}));
      break;
    case 3: {
      r.b = c_pm(r.q, Sign::Plus, 2) / BigRational(24);
      const ZetaElem b(r.b);
      r.shape_matches = matrices_equal<ZetaElem>(
          r.M1, from_rows({{one + b * d, 0, -b * b * d}, {0, one, 0}, {-d, 0, one + b * d}}));
      break;
    }
    case 4: {
      r.a = r.M1(0, 0) - one;
      r.b = *(-r.M1(1, 0)).rational_value();
      r.a_over_g3 = r.a.coeff({0, 1});
      const ZetaElem a = r.a, b(r.b);
      r.shape_matches = matrices_equal<ZetaElem>(r.M1, from_rows({{one + a, 0, a * b / d, a * a / d},
                                                                 {-b, one, -b * b / d, -a * b / d},
                                                                 {0, 0, one, 0},
                                                                 {-d, 0, -b, one - a}}));
      break;
    }
    default:
      break;
  }
  return r;
}

std::vector<TableRow> table_rows(int n) {
  std::vector<TableRow> rows;
  for (const auto& c : table_cases(n)) rows.push_back(table_row(c));
  return rows;
}

}  // namespace hgm
