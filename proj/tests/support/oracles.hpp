#pragma once

// Independent reference computations for the unit tests. Nothing here uses
// dual numbers: derivatives come from central differences on plain doubles,
// and structural matrices are written out entry by entry.

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace dvb::oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using VecFn = std::function<Vec(const Vec&)>;
using ScalarFn = std::function<double(const Vec&)>;

/// (f(x + h v) - f(x - h v)) / 2h.
inline Vec fd_directional(const VecFn& f, const Vec& x, const Vec& v, double h = 1e-5) {
  return (f(x + h * v) - f(x - h * v)) / (2.0 * h);
}

/// Mixed second derivative d^2/ds dt of f(x + s a + t b + s t c) at 0.
inline Vec fd_mixed(const VecFn& f, const Vec& x, const Vec& a, const Vec& b, const Vec& c, double h = 1e-4) {
  const auto phi = [&](double s, double t) { return f(x + s * a + t * b + (s * t) * c); };
  return (phi(h, h) - phi(h, -h) - phi(-h, h) + phi(-h, -h)) / (4.0 * h * h);
}

inline Vec fd_gradient(const ScalarFn& f, const Vec& x, double h = 1e-5) {
  Vec g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vec e = Vec::Zero(x.size());
    e[i] = h;
    g[i] = (f(x + e) - f(x - e)) / (2.0 * h);
  }
  return g;
}

/// jac(r, i) = d_i f_r.
inline Mat fd_jacobian(const VecFn& f, const Vec& x, double h = 1e-5) {
  const Eigen::Index m = f(x).size();
  Mat jac(m, x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vec e = Vec::Zero(x.size());
    e[i] = h;
    jac.col(i) = (f(x + e) - f(x - e)) / (2.0 * h);
  }
  return jac;
}

/// [[0, -I], [I, 0]]: sum dp_i ^ dx^i on (x; p), written entry by entry.
inline Mat canonical_form(Eigen::Index n) {
  Mat m = Mat::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, n + i) = -1.0;
    m(n + i, i) = 1.0;
  }
  return m;
}

/// Gaussian elimination with partial pivoting; independent of Eigen's LU.
inline Eigen::Index elimination_rank(Mat m, double threshold = 1e-9) {
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = rank;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (std::abs(m(pivot, col)) <= threshold) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) m.row(r) -= (m(r, col) / m(rank, col)) * m.row(rank);
    ++rank;
  }
  return rank;
}

}  // namespace dvb::oracle
