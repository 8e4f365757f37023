#pragma once

#include "msa/types.hpp"

namespace msa::linalg {

/// Symmetrize an expression: (A + A^T) / 2.
template <typename Derived>
auto sym(const Eigen::MatrixBase<Derived>& a) {
  return (0.5 * (a + a.transpose())).eval();
}

template <typename Derived>
double asymmetry(const Eigen::MatrixBase<Derived>& a) {
  return (a - a.transpose()).cwiseAbs().maxCoeff();
}

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Mat2& m);
double min_eigenvalue(const Mat4& m);

/// Inverse of a symmetric positive-definite matrix.
///
/// Single inversion path for every filter and fusion step: symmetrizes the
/// input, solves via LDLT, symmetrizes the result. Rejects inputs that are
/// visibly asymmetric or whose pivot floor falls below 1e-12 * trace.
/// Throws NumericalError on failure.
Mat2 spd_inverse(const Mat2& m);
Mat4 spd_inverse(const Mat4& m);

/// Expression-friendly dispatch: evaluates fixed-size expressions and routes
/// them to the matching concrete overload.
template <typename Derived>
  requires(Derived::RowsAtCompileTime == Derived::ColsAtCompileTime &&
           (Derived::RowsAtCompileTime == 2 || Derived::RowsAtCompileTime == 4))
auto spd_inverse(const Eigen::MatrixBase<Derived>& m) {
  using M = Eigen::Matrix<double, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime>;
  return spd_inverse(M(m));
}

}  // namespace msa::linalg
