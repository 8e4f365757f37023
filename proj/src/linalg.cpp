#include "msa/linalg.hpp"

namespace msa::linalg {
namespace {

template <int N>
Eigen::Matrix<double, N, N> spd_inverse_impl(const Eigen::Matrix<double, N, N>& m) {
  using M = Eigen::Matrix<double, N, N>;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (!m.allFinite()) throw NumericalError("spd_inverse: non-finite entries");
  if (asymmetry(m) > 1e-6 * scale) throw NumericalError("spd_inverse: matrix is not symmetric");

  const M s = sym(m);
  Eigen::LDLT<M> ldlt(s);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw NumericalError("spd_inverse: matrix is not positive definite");
  if (ldlt.vectorD().minCoeff() <= 1e-12 * s.trace())
    throw NumericalError("spd_inverse: matrix is numerically singular");

  const M inv = ldlt.solve(M::Identity());
  return sym(inv);
}

template <int N>
double min_eigenvalue_impl(const Eigen::Matrix<double, N, N>& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, N, N>> es(sym(m));
  return es.eigenvalues().minCoeff();
}

}  // namespace

double min_eigenvalue(const Mat2& m) { return min_eigenvalue_impl<2>(m); }
double min_eigenvalue(const Mat4& m) { return min_eigenvalue_impl<4>(m); }

Mat2 spd_inverse(const Mat2& m) { return spd_inverse_impl<2>(m); }
Mat4 spd_inverse(const Mat4& m) { return spd_inverse_impl<4>(m); }

}  // namespace msa::linalg
