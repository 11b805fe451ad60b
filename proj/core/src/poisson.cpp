#include "dvb/poisson.hpp"

#include <algorithm>

#include "dvb/linalg.hpp"

namespace dvb {

PoissonBivector::PoissonBivector(std::string name, std::size_t dim, std::vector<std::vector<Expr>> upper)
    : name_(std::move(name)), dim_(dim), upper_(std::move(upper)) {
  require(upper_.size() == dim_, "PoissonBivector: upper triangle needs one row per coordinate");
  for (std::size_t i = 0; i < dim_; ++i) {
    require(upper_[i].size() == dim_ - i - 1, "PoissonBivector: upper triangle row has the wrong length");
    for (const Expr& e : upper_[i]) require(e.arity() <= dim_, "PoissonBivector: entry references a coordinate outside the chart");
  }
}

PoissonBivector PoissonBivector::canonical(std::size_t n) {
  const std::size_t m = 2 * n;
  std::vector<std::vector<Expr>> upper(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) upper[i].emplace_back(j == i + n ? 1.0 : 0.0);
  }
  return {"canonical", m, std::move(upper)};
}

PoissonBivector PoissonBivector::so3() {
  const Expr x1 = Expr::variable(0);
  const Expr x2 = Expr::variable(1);
  const Expr x3 = Expr::variable(2);
  // [x]_cross = [[0, -x3, x2], [x3, 0, -x1], [-x2, x1, 0]]
  return {"so3", 3, {{-x3, x2}, {-x1}, {}}};
}

PoissonBivector PoissonBivector::constant(const Mat& m, std::string name) {
  require(m.rows() == m.cols() && m == -m.transpose(), "PoissonBivector::constant: matrix must be antisymmetric");
  const auto dim = static_cast<std::size_t>(m.rows());
  std::vector<std::vector<Expr>> upper(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      upper[i].emplace_back(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }
  return {std::move(name), dim, std::move(upper)};
}

PoissonBivector PoissonBivector::non_poisson_control() {
  const Expr x1 = Expr::variable(0);
  const Expr x3 = Expr::variable(2);
  return {"non-poisson-control", 3, {{x3, x3}, {x1}, {}}};
}

Mat PoissonBivector::matrix(const Vec& y) const {
  const std::vector<double> pt = to_std(y);
  const auto n = static_cast<Eigen::Index>(dim_);
  Mat m(n, n);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry(i, j, pt);
  }
  return m;
}

OneForm OneForm::explicit_components(std::vector<Expr> components) {
  const std::size_t dim = components.size();
  for (const Expr& c : components) require(c.arity() <= dim, "OneForm: component references a coordinate outside the chart");
  return {dim, {Term{Expr(1.0), std::move(components)}}};
}

OneForm OneForm::exact(std::size_t dim, Expr potential) {
  require(potential.arity() <= dim, "OneForm: potential references a coordinate outside the chart");
  return {dim, {Term{Expr(1.0), std::move(potential)}}};
}

OneForm OneForm::zero(std::size_t dim) { return {dim, {}}; }

OneForm OneForm::operator+(const OneForm& other) const {
  require(dim_ == other.dim_, "OneForm: dimension mismatch");
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return {dim_, std::move(terms)};
}

OneForm OneForm::times(const Expr& f) const {
  require(f.arity() <= dim_, "OneForm: factor references a coordinate outside the chart");
  std::vector<Term> terms = terms_;
  for (Term& t : terms) t.factor = f * t.factor;
  return {dim_, std::move(terms)};
}

Vec anchor(const PoissonBivector& pi, const OneForm& alpha, const Vec& x) {
  require(alpha.dimension() == pi.dimension() && static_cast<std::size_t>(x.size()) == pi.dimension(),
          "anchor: dimension mismatch");
  const std::vector<double> pt = to_std(x);
  return to_eigen(pi.apply(pt, alpha(pt)));
}

double jacobiator(const PoissonBivector& pi, const Expr& f, const Expr& g, const Expr& h, const Vec& x) {
  require(static_cast<std::size_t>(x.size()) == pi.dimension(), "jacobiator: dimension mismatch");
  const std::vector<double> pt = to_std(x);
  auto bracket_of = [&pi](const Expr& a, const Expr& b) {
    return [&pi, a, b](const auto& y) { return poisson_bracket(pi, a, b, y); };
  };
  const double fgh = poisson_bracket(pi, f, bracket_of(g, h), pt);
  const double ghf = poisson_bracket(pi, g, bracket_of(h, f), pt);
  const double hfg = poisson_bracket(pi, h, bracket_of(f, g), pt);
  return fgh + ghf + hfg;
}

Vec koszul_bracket(const PoissonBivector& pi, const OneForm& alpha, const OneForm& beta, const Vec& x) {
  require(alpha.dimension() == pi.dimension() && beta.dimension() == pi.dimension() &&
              static_cast<std::size_t>(x.size()) == pi.dimension(),
          "koszul_bracket: dimension mismatch");
  const std::vector<double> pt = to_std(x);
  auto sharp_alpha = [&](const auto& y) { return pi.apply(y, alpha(y)); };
  auto sharp_beta = [&](const auto& y) { return pi.apply(y, beta(y)); };
  auto pairing = [&](const auto& y) { return pi.pair(y, beta(y), alpha(y)); };  // <beta, #alpha>

  const Vec a = alpha(x);
  const Vec b = beta(x);
  const Vec xa = to_eigen(sharp_alpha(pt));
  const Vec xb = to_eigen(sharp_beta(pt));
  const Mat ja = to_eigen(jacobian(alpha, pt));  // ja(i, j) = d_j alpha_i
  const Mat jb = to_eigen(jacobian(beta, pt));
  const Mat jxa = to_eigen(jacobian(sharp_alpha, pt));
  const Mat jxb = to_eigen(jacobian(sharp_beta, pt));
  const Vec dp = to_eigen(gradient(pairing, pt));

  // (L_X beta)_i = X^j d_j beta_i + beta_j d_i X^j
  const Vec lie_a_beta = jb * xa + jxa.transpose() * b;
  const Vec lie_b_alpha = ja * xb + jxb.transpose() * a;
  return lie_a_beta - lie_b_alpha - dp;
}

Vec bracket_differential(const PoissonBivector& pi, const Expr& f, const Expr& g, const Vec& x) {
  auto gf = [&](const auto& y) { return poisson_bracket(pi, g, f, y); };
  return to_eigen(gradient(gf, to_std(x)));
}

double anchor_homomorphism_residual(const PoissonBivector& pi, const OneForm& alpha, const OneForm& beta, const Vec& x) {
  const Vec lhs = pi.matrix(x) * koszul_bracket(pi, alpha, beta, x);
  auto sharp_alpha = [&](const auto& y) { return pi.apply(y, alpha(y)); };
  auto sharp_beta = [&](const auto& y) { return pi.apply(y, beta(y)); };
  const Vec rhs = vector_field_bracket(sharp_alpha, sharp_beta, x);
  return max_abs(lhs - rhs);
}

}  // namespace dvb
