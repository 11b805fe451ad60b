#pragma once

#include <Eigen/Dense>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>

namespace dvb {

/// Rank by fully pivoted elimination; pivots below `threshold` (relative to
/// the largest pivot) count as zero.
inline Eigen::Index numerical_rank(const Eigen::MatrixXd& m, double threshold = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(threshold);
  return lu.rank();
}

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Max-abs residual scaled by max(1, |reference|_max).
template <class A, class B>
double relative_residual(const Eigen::MatrixBase<A>& value, const Eigen::MatrixBase<B>& reference) {
  return max_abs(value - reference) / std::max(1.0, max_abs(reference));
}

}  // namespace dvb
