#pragma once

// Division-free linear algebra for matrices over commutative rings that
// contain Q. Only division by integers and by the determinant is used, so
// these work unchanged for ZetaElem and std::complex<double>.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hgmono/errors.hpp"
#include "hgmono/zeta_field.hpp"

namespace hgm {

template <class Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> m = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <class Scalar>
bool is_zero_matrix(const Matrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero_value(m(i, j))) return false;
  return true;
}

template <class Scalar>
bool matrices_equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class Scalar>
Scalar trace_of(const Matrix<Scalar>& m) {
  Scalar t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

namespace detail {

// Faddeev-LeVerrier. Returns the ascending coefficients of det(X - A) and
// the last auxiliary matrix, from which the adjugate follows.
template <class Scalar>
std::vector<Scalar> faddeev_leverrier(const Matrix<Scalar>& a, Matrix<Scalar>* last) {
  const Eigen::Index n = a.rows();
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Matrix<Scalar> mk = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index k = 1; k <= n; ++k) {
    Matrix<Scalar> next = a * mk;
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    mk = std::move(next);
    Matrix<Scalar> am = a * mk;
    c[static_cast<std::size_t>(n - k)] = -trace_of(am) / Scalar(static_cast<int>(k));
  }
  if (last) *last = std::move(mk);
  return c;
}

}  // namespace detail

/// Ascending coefficients of det(X I - A); the last entry is 1.
template <class Scalar>
std::vector<Scalar> characteristic_polynomial(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  return detail::faddeev_leverrier<Scalar>(a, nullptr);
}

template <class Scalar>
Scalar determinant(const Matrix<Scalar>& a) {
  if (a.rows() == 0) return Scalar(1);
  auto c = characteristic_polynomial(a);
  return (a.rows() % 2 == 0) ? c[0] : -c[0];
}

/// Inverse through the Cayley-Hamilton adjugate. The determinant must be a
/// unit of the coefficient ring (a nonzero rational for ZetaElem).
template <class Scalar>
Matrix<Scalar> matrix_inverse(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_inverse: matrix not square");
  if (a.rows() == 0) return a;
  Matrix<Scalar> last;
  auto c = detail::faddeev_leverrier<Scalar>(a, &last);
  const Scalar& c0 = c[0];
  if (is_zero_value(c0)) throw SingularMatrix("matrix is singular");
  if (!is_unit(c0)) throw NonRationalDeterminant("determinant is not a rational number");
  // A * M_n + c_0 I = 0
  Matrix<Scalar> inv = last;
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j) / c0;
  return inv;
}

/// Rank over the fraction field, from the largest nonvanishing minor.
template <class Scalar>
int matrix_rank(const Matrix<Scalar>& a) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  auto combos = [](int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> sel(static_cast<std::size_t>(k));
    std::iota(sel.begin(), sel.end(), 0);
    if (k > n) return out;
    while (true) {
      out.push_back(sel);
      int i = k - 1;
      while (i >= 0 && sel[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++sel[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
  };
  int rank = 0;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    bool found = false;
    for (const auto& r : combos(rows, k)) {
      for (const auto& c : combos(cols, k)) {
        Matrix<Scalar> sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = a(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
        if (!is_zero_value(determinant(sub))) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    rank = k;
  }
  return rank;
}

/// Rank of M - I; 1 means M is a (pseudo-)reflection.
template <class Scalar>
int matrix_rank_of_difference_from_identity(const Matrix<Scalar>& m) {
  return matrix_rank<Scalar>(m - identity<Scalar>(m.rows()));
}

template <class Scalar>
Matrix<Scalar> outer(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  Matrix<Scalar> m(static_cast<Eigen::Index>(u.size()), static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = u[i] * v[j];
  return m;
}

}  // namespace hgm
