#include "dvb/jets.hpp"

#include <utility>

namespace dvb {

Jet2::Jet2(Vec x_, Vec ds_, Vec dt_, Vec dsdt_)
    : x(std::move(x_)), ds(std::move(ds_)), dt(std::move(dt_)), dsdt(std::move(dsdt_)) {
  require(ds.size() == x.size() && dt.size() == x.size() && dsdt.size() == x.size(),
          "Jet2: all four components must share one dimension");
}

Jet2 Jet2::constant(const Vec& x) {
  const Vec z = Vec::Zero(x.size());
  return {x, z, z, z};
}

std::vector<Jet2Scalar> Jet2::to_scalars() const {
  std::vector<Jet2Scalar> out;
  out.reserve(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out.push_back(Jet2Scalar{Dual<double>{x[i], ds[i]}, Dual<double>{dt[i], dsdt[i]}});
  }
  return out;
}

Jet2 Jet2::from_scalars(const std::vector<Jet2Scalar>& s) {
  const auto n = static_cast<Eigen::Index>(s.size());
  Vec x(n), ds(n), dt(n), dsdt(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& e = s[static_cast<std::size_t>(i)];
    x[i] = e.value.value;
    ds[i] = e.value.eps;
    dt[i] = e.eps.value;
    dsdt[i] = e.eps.eps;
  }
  return {x, ds, dt, dsdt};
}

SmoothMap::SmoothMap(std::size_t domain_dim, std::vector<Expr> components, std::string name)
    : domain_dim_(domain_dim), components_(std::move(components)), name_(std::move(name)) {
  for (const Expr& c : components_) {
    require(c.arity() <= domain_dim_, "SmoothMap: component references a coordinate outside the domain");
  }
}

SmoothMap SmoothMap::identity(std::size_t n) {
  std::vector<Expr> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Expr::variable(i));
  return {n, std::move(c), "identity"};
}

SmoothMap SmoothMap::linear(const Mat& a) {
  std::vector<Expr> c;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Expr row = 0.0;
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(r, k) != 0.0) row += Expr(a(r, k)) * Expr::variable(static_cast<std::size_t>(k));
    }
    c.push_back(row);
  }
  return {static_cast<std::size_t>(a.cols()), std::move(c), "linear"};
}

SmoothMap SmoothMap::constant(std::size_t domain_dim, const Vec& value) {
  std::vector<Expr> c;
  for (double v : value) c.emplace_back(v);
  return {domain_dim, std::move(c), "constant"};
}

Vec SmoothMap::operator()(const Vec& x) const { return to_eigen((*this)(to_std(x))); }

SmoothMap compose(const SmoothMap& outer, const SmoothMap& inner) {
  require(outer.domain_dim() == inner.codomain_dim(), "compose: codomain of inner must match domain of outer");
  std::vector<Expr> c;
  c.reserve(outer.codomain_dim());
  for (const Expr& e : outer.components()) c.push_back(e.substitute(inner.components()));
  return {inner.domain_dim(), std::move(c), outer.name() + " o " + inner.name()};
}

Jet2 eval_jet(const SmoothMap& f, const Jet2& j) {
  require(static_cast<std::size_t>(j.dimension()) == f.domain_dim(), "eval_jet: jet dimension must match the map's domain");
  return Jet2::from_scalars(f(j.to_scalars()));
}

TangentVector tangent_map(const SmoothMap& f, const Vec& x, const Vec& v) {
  require(x.size() == v.size(), "tangent_map: point and vector dimensions differ");
  const Vec z = Vec::Zero(x.size());
  const Jet2 out = eval_jet(f, Jet2{x, v, z, z});
  return {out.x, out.ds};
}

Vec fd_jvp(const SmoothMap& f, const Vec& x, const Vec& v, double h) {
  require(h > 0.0, "fd_jvp: step must be positive");
  require(x.size() == v.size() && static_cast<std::size_t>(x.size()) == f.domain_dim(), "fd_jvp: dimension mismatch");
  return (f(Vec(x + h * v)) - f(Vec(x - h * v))) / (2.0 * h);
}

std::vector<double> to_std(const Vec& v) { return {v.data(), v.data() + v.size()}; }

Vec to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Mat to_eigen(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return {};
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return m;
}

}  // namespace dvb
