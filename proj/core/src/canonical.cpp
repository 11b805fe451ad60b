#include "dvb/canonical.hpp"

#include <algorithm>

#include "dvb/linalg.hpp"

namespace dvb {

namespace {

bool same(const Vec& u, const Vec& v) { return u.size() == v.size() && u == v; }

Vec concat(std::initializer_list<const Vec*> parts) {
  Eigen::Index size = 0;
  for (const Vec* p : parts) size += p->size();
  Vec out(size);
  Eigen::Index at = 0;
  for (const Vec* p : parts) {
    out.segment(at, p->size()) = *p;
    at += p->size();
  }
  return out;
}

double max_abs_diff(std::initializer_list<std::pair<const Vec*, const Vec*>> pairs) {
  double r = 0.0;
  for (const auto& [u, v] : pairs) {
    require(u->size() == v->size(), "residual: dimension mismatch");
    r = std::max(r, max_abs(*u - *v));
  }
  return r;
}

}  // namespace

// --- ConstantTwoForm -------------------------------------------------------

ConstantTwoForm::ConstantTwoForm(Mat m) : m_(std::move(m)) {
  require(m_.rows() == m_.cols(), "ConstantTwoForm: matrix must be square");
  require(m_ == -m_.transpose(), "ConstantTwoForm: matrix must be antisymmetric");
}

ConstantTwoForm ConstantTwoForm::from_field(const std::vector<std::vector<Expr>>& field) {
  const auto n = static_cast<Eigen::Index>(field.size());
  Mat m(n, n);
  const std::vector<double> origin(field.size(), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = field[static_cast<std::size_t>(i)];
    require(static_cast<Eigen::Index>(row.size()) == n, "ConstantTwoForm: field must be square");
    for (Eigen::Index j = 0; j < n; ++j) {
      const Expr& e = row[static_cast<std::size_t>(j)];
      require(e.is_constant(), "ConstantTwoForm: only constant-coefficient forms are supported");
      m(i, j) = e(origin);
    }
  }
  return ConstantTwoForm(std::move(m));
}

ConstantTwoForm ConstantTwoForm::pullback(const Mat& l) const {
  require(l.rows() == m_.rows(), "pullback: map codomain does not match the form");
  const Mat p = l.transpose() * m_ * l;
  // Congruence preserves antisymmetry only up to rounding; restore it exactly.
  return ConstantTwoForm(0.5 * (p - p.transpose()));
}

Mat ConstantTwoForm::bivector() const {
  Eigen::FullPivLU<Mat> lu(m_);
  require(lu.isInvertible(), "bivector: form is degenerate");
  return lu.inverse();
}

// --- coordinates -----------------------------------------------------------

Vec coords(const T2MElement& e) { return concat({&e.x, &e.v, &e.w, &e.z}); }
Vec coords(const TangentCotangentElement& e) { return concat({&e.x, &e.p, &e.dx, &e.dp}); }
Vec coords(const CotangentTangentElement& e) { return concat({&e.x, &e.v, &e.alpha, &e.beta}); }
Vec coords(const CotangentCotangentElement& e) { return concat({&e.x, &e.p, &e.alpha, &e.beta}); }
Vec coords(const CotangentDualElement& e) { return concat({&e.x, &e.kappa, &e.alpha, &e.a}); }
Vec coords(const CotangentBundleElement& e) { return concat({&e.x, &e.a, &e.alpha, &e.phi}); }

std::array<Vec, 4> split_nknk(const Vec& y, Eigen::Index n, Eigen::Index k) {
  require(y.size() == 2 * (n + k), "split: coordinate vector has the wrong length");
  return {y.segment(0, n), y.segment(n, k), y.segment(n + k, n), y.segment(2 * n + k, k)};
}

std::array<Vec, 4> split4(const Vec& y, Eigen::Index n) { return split_nknk(y, n, n); }

// --- J ---------------------------------------------------------------------

T2MElement canonical_involution(const T2MElement& xi) { return {xi.x, xi.w, xi.v, xi.z}; }

T2MElement second_tangent_map(const SmoothMap& f, const T2MElement& xi) {
  return T2MElement::from_jet(eval_jet(f, xi.to_jet()));
}

double j_naturality_residual(const SmoothMap& f, const T2MElement& xi) {
  require(f.domain_dim() == f.codomain_dim(), "j_naturality_residual: map must send the chart to itself");
  const T2MElement lhs = canonical_involution(second_tangent_map(f, xi));
  const T2MElement rhs = second_tangent_map(f, canonical_involution(xi));
  return max_abs(coords(lhs) - coords(rhs));
}

// --- theta, omega, # -------------------------------------------------------

double liouville_form(const TangentCotangentElement& at) {
  require(at.p.size() == at.dx.size(), "liouville_form: dimension mismatch");
  return at.p.dot(at.dx);
}

ConstantTwoForm canonical_symplectic(Eigen::Index n) {
  require(n >= 1, "canonical_symplectic: dimension must be positive");
  Vec y(2 * n);
  for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = 0.25 + 0.125 * static_cast<double>(i);
  const Mat d_theta = exterior_derivative([](const auto& pt) { return liouville_components(pt); }, y);
  return ConstantTwoForm(d_theta);
}

Mat canonical_symplectic_closed_form(Eigen::Index n) {
  Mat m = Mat::Zero(2 * n, 2 * n);
  m.topRightCorner(n, n) = -Mat::Identity(n, n);
  m.bottomLeftCorner(n, n) = Mat::Identity(n, n);
  return m;
}

TangentCotangentElement poisson_anchor_canonical(const CotangentCotangentElement& w) {
  require(w.x.size() == w.p.size() && w.alpha.size() == w.x.size() && w.beta.size() == w.x.size(),
          "poisson_anchor_canonical: dimension mismatch");
  return {w.x, w.p, w.beta, -w.alpha};
}

// --- Theta -----------------------------------------------------------------

TEElement as_tangent_of_tangent(const T2MElement& eta) { return {eta.x, eta.v, eta.w, eta.z}; }

TEStarElement as_tangent_of_dual(const TangentCotangentElement& xi) { return {xi.x, xi.p, xi.dx, xi.dp}; }

double cotangent_tangent_pairing(const CotangentTangentElement& w, const T2MElement& eta) {
  require(same(w.x, eta.x) && same(w.v, eta.v), "cotangent_tangent_pairing: covector and vector at different points of TM");
  return w.alpha.dot(eta.w) + w.beta.dot(eta.z);
}

CotangentTangentElement tulczyjew(const TangentCotangentElement& xi) {
  const Eigen::Index n = xi.x.size();
  require(xi.p.size() == n && xi.dx.size() == n && xi.dp.size() == n, "tulczyjew: dimension mismatch");
  const TEStarElement target = as_tangent_of_dual(xi);
  const Vec zero = Vec::Zero(n);

  // Admissible eta lie over T(c)(xi) = (x, dx); their fiber is spanned by
  // the unit directions in w and in z.
  CotangentTangentElement out{xi.x, xi.dx, Vec(n), Vec(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec unit = Vec::Unit(n, i);
    const T2MElement along_w{xi.x, xi.dx, unit, zero};
    const T2MElement along_z{xi.x, xi.dx, zero, unit};
    out.alpha[i] = tangent_pairing(as_tangent_of_tangent(canonical_involution(along_w)), target);
    out.beta[i] = tangent_pairing(as_tangent_of_tangent(canonical_involution(along_z)), target);
  }
  return out;
}

CotangentTangentElement tulczyjew_closed_form(const TangentCotangentElement& xi) { return {xi.x, xi.dx, xi.dp, xi.p}; }

double tulczyjew_defining_residual(const TangentCotangentElement& xi, const T2MElement& eta) {
  require(same(eta.x, xi.x) && same(eta.v, xi.dx), "tulczyjew_defining_residual: eta is not admissible for xi");
  const double lhs = cotangent_tangent_pairing(tulczyjew(xi), eta);
  const double rhs = tangent_pairing(as_tangent_of_tangent(canonical_involution(eta)), as_tangent_of_dual(xi));
  return std::abs(lhs - rhs);
}

Mat tulczyjew_matrix(Eigen::Index n) {
  const Eigen::Index dim = 4 * n;
  Mat l(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto [x, p, dx, dp] = split4(Vec::Unit(dim, c), n);
    l.col(c) = coords(tulczyjew(TangentCotangentElement{x, p, dx, dp}));
  }
  return l;
}

ConstantTwoForm tangent_lift_two_form(const std::vector<std::vector<Expr>>& field) {
  const std::size_t dim = field.size();
  for (const auto& row : field) {
    require(row.size() == dim, "tangent_lift_two_form: field must be square");
    for (const Expr& e : row) require(e.is_constant(), "tangent_lift_two_form: only constant-coefficient forms are supported");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  // Any base point and velocity will do for constant coefficients.
  const std::vector<double> y(dim, 0.5);
  const std::vector<double> ydot(dim, 1.0);

  Mat complete(n, n);
  Mat vertical(n, n);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Expr& entry = field[i][j];
      const auto ii = static_cast<Eigen::Index>(i);
      const auto jj = static_cast<Eigen::Index>(j);
      complete(ii, jj) = directional([&](const auto& pt) { return entry(pt); }, y, ydot);
      vertical(ii, jj) = entry(y);
    }
  }
  Mat lifted = Mat::Zero(2 * n, 2 * n);
  lifted.topLeftCorner(n, n) = complete;
  lifted.topRightCorner(n, n) = vertical;
  lifted.bottomLeftCorner(n, n) = vertical;
  return ConstantTwoForm(lifted);
}

ConstantTwoForm tangent_lift_two_form(const ConstantTwoForm& omega) {
  const Eigen::Index n = omega.dimension();
  std::vector<std::vector<Expr>> field(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) field[static_cast<std::size_t>(i)].emplace_back(omega.matrix()(i, j));
  }
  return tangent_lift_two_form(field);
}

double theta_symplectomorphism_residual(Eigen::Index n) {
  const Mat theta = tulczyjew_matrix(n);
  const Mat pulled = theta.transpose() * canonical_symplectic(2 * n).matrix() * theta;
  return max_abs(pulled - tangent_lift_two_form(canonical_symplectic(n)).matrix());
}

double theta_poisson_residual(Eigen::Index n) {
  const Mat theta = tulczyjew_matrix(n);
  const Mat pushed = theta * tangent_lift_two_form(canonical_symplectic(n)).bivector() * theta.transpose();
  return max_abs(pushed - canonical_symplectic(2 * n).bivector());
}

// --- R ---------------------------------------------------------------------

CotangentBundleElement r_map(const BundleShape& s, const CotangentDualElement& w) {
  require(w.x.size() == s.n && w.alpha.size() == s.n && w.kappa.size() == s.k && w.a.size() == s.k,
          "r_map: element does not match the bundle shape");
  return {w.x, w.a, -w.alpha, w.kappa};
}

CotangentBundleElement r_map_from_pairing(const BundleShape& s, const CotangentDualElement& w) {
  // E = A*: w is a point of T*E, the vertical dual of TE.
  const CotangentEElement as_cotangent{w.x, w.kappa, w.alpha, w.a};
  check_conforms(s, as_cotangent);
  const DvbVDualElement phi = to_vertical_dual(as_cotangent);
  const Vec& a = phi.kappa;  // projection to C* = E** = A

  // Probe with elements of T(E*) = T(A) over a: their horizontal-dual images.
  CotangentBundleElement out{w.x, a, Vec(s.n), Vec(s.k)};
  for (Eigen::Index i = 0; i < s.n; ++i) {
    const TEStarElement probe{w.x, a, Vec::Unit(s.n, i), Vec::Zero(s.k)};
    out.alpha[i] = theorem1_pairing_reversed(phi, to_horizontal_dual(probe));
  }
  for (Eigen::Index j = 0; j < s.k; ++j) {
    const TEStarElement probe{w.x, a, Vec::Zero(s.n), Vec::Unit(s.k, j)};
    out.phi[j] = theorem1_pairing_reversed(phi, to_horizontal_dual(probe));
  }
  return out;
}

Mat pin_r_map(const BundleShape& s) {
  const Eigen::Index dim = 2 * (s.n + s.k);
  Mat l(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto [x, kappa, alpha, a] = split_nknk(Vec::Unit(dim, c), s.n, s.k);
    l.col(c) = coords(r_map_from_pairing(s, CotangentDualElement{x, kappa, alpha, a}));
  }
  return l;
}

Mat r_map_matrix(const BundleShape& s) {
  const Eigen::Index dim = 2 * (s.n + s.k);
  Mat l(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const auto [x, kappa, alpha, a] = split_nknk(Vec::Unit(dim, c), s.n, s.k);
    l.col(c) = coords(r_map(s, CotangentDualElement{x, kappa, alpha, a}));
  }
  return l;
}

double r_anti_symplectic_residual(const BundleShape& s) {
  const Mat l = r_map_matrix(s);
  const Mat omega = canonical_symplectic(s.n + s.k).matrix();
  return max_abs(l.transpose() * omega * l + omega);
}

CotangentDualElement as_cotangent_of_dual(const CotangentCotangentElement& w) { return {w.x, w.p, w.alpha, w.beta}; }

double proposition_composite_residual(const CotangentCotangentElement& w) {
  const Eigen::Index n = w.x.size();
  const CotangentTangentElement composite = tulczyjew(poisson_anchor_canonical(w));
  const CotangentBundleElement r = r_map(BundleShape{n, n}, as_cotangent_of_dual(w));
  return max_abs_diff({{&composite.x, &r.x}, {&composite.v, &r.a}, {&composite.alpha, &r.alpha}, {&composite.beta, &r.phi}});
}

}  // namespace dvb
