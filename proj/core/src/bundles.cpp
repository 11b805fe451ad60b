#include "dvb/bundles.hpp"

namespace dvb {

namespace {

bool same(const Vec& u, const Vec& v) { return u.size() == v.size() && u == v; }

}  // namespace

BundleShape::BundleShape(Eigen::Index n_, Eigen::Index k_) : n(n_), k(k_) {
  require(n >= 0, "BundleShape: base dimension must be non-negative");
  require(k >= 1, "BundleShape: fiber dimension must be at least 1");
}

void check_conforms(const BundleShape& s, const TEElement& xi) {
  require(xi.x.size() == s.n && xi.dx.size() == s.n && xi.e.size() == s.k && xi.de.size() == s.k,
          "TEElement does not match the bundle shape");
}

void check_conforms(const BundleShape& s, const TEStarElement& eta) {
  require(eta.x.size() == s.n && eta.dx.size() == s.n && eta.p.size() == s.k && eta.dp.size() == s.k,
          "TEStarElement does not match the bundle shape");
}

void check_conforms(const BundleShape& s, const CotangentEElement& w) {
  require(w.x.size() == s.n && w.mu.size() == s.n && w.e.size() == s.k && w.phi.size() == s.k,
          "CotangentEElement does not match the bundle shape");
}

TEElement vertical_lift(const BundleShape& s, const Vec& e1, const Vec& e2, const Vec& x) {
  require(e1.size() == s.k && e2.size() == s.k && x.size() == s.n, "vertical_lift: dimension mismatch");
  return {x, e1, Vec::Zero(s.n), e2};
}

TEElement zero_section_image(const BundleShape& s, const Vec& x, const Vec& dx) {
  require(x.size() == s.n && dx.size() == s.n, "zero_section_image: dimension mismatch");
  return {x, Vec::Zero(s.k), dx, Vec::Zero(s.k)};
}

TEElement add_over_E(const TEElement& u, const TEElement& v) {
  require(same(u.x, v.x) && same(u.e, v.e), "add_over_E: tangent vectors at different points of E");
  return {u.x, u.e, u.dx + v.dx, u.de + v.de};
}

TEElement add_over_TM(const TEElement& u, const TEElement& v) {
  require(same(u.x, v.x) && same(u.dx, v.dx), "add_over_TM: elements over different points of TM");
  return {u.x, u.e + v.e, u.dx, u.de + v.de};
}

TEElement scale_over_E(const TEElement& u, double t) { return {u.x, u.e, t * u.dx, t * u.de}; }
TEElement scale_over_TM(const TEElement& u, double t) { return {u.x, t * u.e, u.dx, t * u.de}; }

ZeroSectionSplit zero_section_split(const TEElement& xi) {
  require(xi.e.isZero(0.0), "zero_section_split: element is not based on the zero section");
  return {{xi.x, xi.dx}, xi.de};
}

double tangent_pairing(const TEElement& xi, const TEStarElement& eta) {
  require(same(xi.x, eta.x) && same(xi.dx, eta.dx), "tangent_pairing: elements over different points of TM");
  require(xi.e.size() == eta.p.size() && xi.de.size() == eta.dp.size(), "tangent_pairing: fiber dimension mismatch");
  return xi.de.dot(eta.p) + xi.e.dot(eta.dp);
}

Mat tangent_pairing_matrix(const BundleShape& s) {
  const Vec x = Vec::Zero(s.n);
  const Vec dx = Vec::Zero(s.n);
  const Eigen::Index dim = 2 * s.k;
  Mat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Vec u = Vec::Unit(dim, i);
    const TEElement xi{x, u.head(s.k), dx, u.tail(s.k)};
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Vec w = Vec::Unit(dim, j);
      m(i, j) = tangent_pairing(xi, TEStarElement{x, w.head(s.k), dx, w.tail(s.k)});
    }
  }
  return m;
}

DvbShape te_as_dvb(const BundleShape& s) { return {s.n, s.k, s.n, s.k}; }

DvbElement to_dvb(const TEElement& xi) { return {xi.x, xi.e, xi.dx, xi.de}; }
TEElement from_dvb(const DvbElement& d) { return {d.x, d.a, d.b, d.c}; }

DvbHDualElement to_horizontal_dual(const TEStarElement& eta) { return {eta.x, eta.dx, eta.p, eta.dp}; }
TEStarElement from_horizontal_dual(const DvbHDualElement& psi) { return {psi.x, psi.kappa, psi.b, psi.psi}; }

DvbVDualElement to_vertical_dual(const CotangentEElement& w) { return {w.x, w.e, w.phi, w.mu}; }
CotangentEElement from_vertical_dual(const DvbVDualElement& phi) { return {phi.x, phi.a, phi.phi, phi.kappa}; }

double canonical_pairing(const CotangentEElement& w, const TEElement& xi) {
  require(same(w.x, xi.x) && same(w.e, xi.e), "canonical_pairing: covector and vector at different points of E");
  return w.mu.dot(xi.dx) + w.phi.dot(xi.de);
}

}  // namespace dvb
