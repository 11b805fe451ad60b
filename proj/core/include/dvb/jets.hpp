#pragma once

/// @file jets.hpp
/// @brief Order-(1,1) jets and the smooth maps that act on them.
///
/// A Jet2 is the 2-jet at (0,0) of the square
///   phi(s,t) = x + s*ds + t*dt + s*t*dsdt,
/// i.e. a point of the second tangent bundle in coordinates. Evaluating a
/// SmoothMap on a Jet2 is the second tangent functor applied to the map.

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

#include "dvb/dual.hpp"
#include "dvb/error.hpp"
#include "dvb/expr.hpp"

namespace dvb {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// R[s,t]/(s^2,t^2): inner eps is the s-slot, outer eps the t-slot.
using Jet2Scalar = Dual<Dual<double>>;

struct Jet2 {
  Vec x;
  Vec ds;
  Vec dt;
  Vec dsdt;

  Jet2() = default;
  Jet2(Vec x_, Vec ds_, Vec dt_, Vec dsdt_);

  /// The jet of the constant square at x.
  static Jet2 constant(const Vec& x);

  Eigen::Index dimension() const { return x.size(); }

  std::vector<Jet2Scalar> to_scalars() const;
  static Jet2 from_scalars(const std::vector<Jet2Scalar>& s);
};

/// A map R^n -> R^m given by one expression per output coordinate.
class SmoothMap {
 public:
  SmoothMap(std::size_t domain_dim, std::vector<Expr> components, std::string name = {});

  static SmoothMap identity(std::size_t n);
  static SmoothMap linear(const Mat& a);
  static SmoothMap constant(std::size_t domain_dim, const Vec& value);

  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t codomain_dim() const { return components_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Expr>& components() const { return components_; }

  template <class T>
  std::vector<T> operator()(const std::vector<T>& y) const {
    require(y.size() == domain_dim_, "SmoothMap: input dimension mismatch");
    std::vector<T> out;
    out.reserve(components_.size());
    for (const Expr& c : components_) out.push_back(c(y));
    return out;
  }

  Vec operator()(const Vec& x) const;

  /// outer after inner.
  friend SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner);

 private:
  std::size_t domain_dim_;
  std::vector<Expr> components_;
  std::string name_;
};

/// T^2 f: the 2-jet of f o phi.
Jet2 eval_jet(const SmoothMap& f, const Jet2& j);

struct TangentVector {
  Vec point;
  Vec velocity;
};

/// Tf in coordinates: (f(x), Df(x)[v]).
TangentVector tangent_map(const SmoothMap& f, const Vec& x, const Vec& v);

/// Central-difference oracle (f(x+hv) - f(x-hv)) / 2h.
Vec fd_jvp(const SmoothMap& f, const Vec& x, const Vec& v, double h);

// ---------------------------------------------------------------------------
// Generic forward-mode helpers. A "field" is any callable taking
// const std::vector<U>& and returning U (scalar field) or std::vector<U>
// (vector field), for every scalar type U the caller nests it at.
// ---------------------------------------------------------------------------

template <class T>
std::vector<Dual<T>> seed(const std::vector<T>& y, const std::vector<T>& direction) {
  std::vector<Dual<T>> out;
  out.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out.emplace_back(y[i], direction[i]);
  return out;
}

/// Derivative of a scalar field along v at y.
template <class T, class F>
T directional(const F& f, const std::vector<T>& y, const std::vector<T>& v) {
  require(y.size() == v.size(), "directional: dimension mismatch");
  return f(seed(y, v)).eps;
}

template <class T, class F>
std::vector<T> gradient(const F& f, const std::vector<T>& y) {
  std::vector<Dual<T>> seeded(y.begin(), y.end());
  std::vector<T> g(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    seeded[i].eps = lift<T>(1.0);
    g[i] = f(seeded).eps;
    seeded[i].eps = lift<T>(0.0);
  }
  return g;
}

/// jac[r][i] = d f_r / d y_i.
template <class T, class F>
std::vector<std::vector<T>> jacobian(const F& f, const std::vector<T>& y) {
  std::vector<Dual<T>> seeded(y.begin(), y.end());
  std::vector<std::vector<T>> jac;
  for (std::size_t i = 0; i < y.size(); ++i) {
    seeded[i].eps = lift<T>(1.0);
    const auto column = f(seeded);
    if (jac.empty()) jac.assign(column.size(), std::vector<T>(y.size()));
    for (std::size_t r = 0; r < column.size(); ++r) jac[r][i] = column[r].eps;
    seeded[i].eps = lift<T>(0.0);
  }
  return jac;
}

std::vector<double> to_std(const Vec& v);
Vec to_eigen(const std::vector<double>& v);
Mat to_eigen(const std::vector<std::vector<double>>& rows);

/// Exterior derivative of a 1-form at y: result(i,j) = d_i theta_j - d_j theta_i.
template <class F>
Mat exterior_derivative(const F& one_form, const Vec& y) {
  const Mat jac = to_eigen(jacobian(one_form, to_std(y)));  // jac(j,i) = d_i theta_j
  return jac.transpose() - jac;
}

}  // namespace dvb
