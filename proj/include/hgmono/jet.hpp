#pragma once

// Truncated Taylor data at s = 0 in the scaled variable t = 2 pi i s:
//   jet[k] = f^{(k)}(0) / (k! (2 pi i)^k).
// Templated on the coefficient ring so that the exact (ZetaElem) and
// numeric (std::complex<double>) pipelines share one implementation.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hgmono/errors.hpp"
#include "hgmono/zeta_field.hpp"

namespace hgm {

template <class Scalar>
class Jet {
 public:
  Jet() = default;
  explicit Jet(std::size_t order) : c_(order, Scalar(0)) {}
  explicit Jet(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

  /// (1, 0, ..., 0).
  static Jet one(std::size_t order) {
    Jet j(order);
    if (order) j.c_[0] = Scalar(1);
    return j;
  }

  /// Jet of e^{rate t}: rate^k / k!.
  static Jet exponential(std::size_t order, const Scalar& rate) {
    Jet j(order);
    Scalar term(1);
    for (std::size_t k = 0; k < order; ++k) {
      j.c_[k] = term;
      term = term * rate / Scalar(static_cast<int>(k + 1));
    }
    return j;
  }

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t k) const { return c_[k]; }
  Scalar& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  friend Jet operator+(const Jet& a, const Jet& b) {
    check_same(a, b);
    Jet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    check_same(a, b);
    Jet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    check_same(a, b);
    Jet r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < a.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  friend Jet operator*(const Scalar& s, const Jet& a) {
    Jet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.c_[k] = s * a.c_[k];
    return r;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }

 private:
  static void check_same(const Jet& a, const Jet& b) {
    if (a.size() != b.size()) throw std::invalid_argument("jet orders differ");
  }
  std::vector<Scalar> c_;
};

template <class Scalar>
Jet<Scalar> jet_mul(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  return a * b;
}

/// exp of a jet with zero constant term, via e' = a' e.
template <class Scalar>
Jet<Scalar> jet_exp(const Jet<Scalar>& a) {
  const std::size_t n = a.size();
  if (n && !is_zero_value(a[0])) throw std::invalid_argument("jet_exp: constant term must vanish");
  Jet<Scalar> e(n);
  if (!n) return e;
  e[0] = Scalar(1);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar s(0);
    for (std::size_t j = 1; j <= k; ++j)
      if (!is_zero_value(a[j])) s += Scalar(static_cast<int>(j)) * a[j] * e[k - j];
    e[k] = s / Scalar(static_cast<int>(k));
  }
  return e;
}

/// Reciprocal; the constant term must be a unit of the coefficient ring.
template <class Scalar>
Jet<Scalar> jet_inverse(const Jet<Scalar>& a) {
  const std::size_t n = a.size();
  if (!n) return a;
  if (!is_unit(a[0])) throw NonInvertibleJet("jet constant term is not invertible");
  Jet<Scalar> r(n);
  r[0] = Scalar(1) / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Scalar s(0);
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

/// p(x) for a polynomial with ascending coefficients, by Horner's rule.
template <class Scalar, class Coeff>
Jet<Scalar> jet_polyval(const std::vector<Coeff>& ascending, const Jet<Scalar>& x) {
  Jet<Scalar> r(x.size());
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
    r = r * x;
    if (x.size()) r[0] += Scalar(*it);
  }
  return r;
}

/// Upper-triangular Toeplitz matrix with (k, l) entry jet[l - k].
/// toeplitz(f * g) == toeplitz(f) * toeplitz(g).
template <class Scalar>
Matrix<Scalar> toeplitz(const Jet<Scalar>& j) {
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix<Scalar> m = Matrix<Scalar>::Constant(n, n, Scalar(0));
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = k; l < n; ++l) m(k, l) = j[static_cast<std::size_t>(l - k)];
  return m;
}

}  // namespace hgm
