#pragma once

#include "hgmono/matrix_ops.hpp"

namespace hgm {

/// Local monodromies around 0, 1 (or 1/C) and infinity on a common basis.
template <class Scalar>
struct Triple {
  Matrix<Scalar> M0, M1, Minf;
};

using MonodromyTriple = Triple<ZetaElem>;

/// Simultaneous conjugation X -> S X S^{-1}.
template <class Scalar>
Triple<Scalar> conjugate(const Triple<Scalar>& t, const Matrix<Scalar>& s, const Matrix<Scalar>& s_inv) {
  return {s * t.M0 * s_inv, s * t.M1 * s_inv, s * t.Minf * s_inv};
}

template <class Scalar>
bool relation_holds(const Triple<Scalar>& t) {
  return matrices_equal<Scalar>(t.M0 * t.M1 * t.Minf, identity<Scalar>(t.M0.rows()));
}

}  // namespace hgm
