#include "dvb/double_vector_bundle.hpp"

#include <algorithm>
#include <cmath>

#include "dvb/linalg.hpp"

namespace dvb {

namespace {

bool same(const Vec& u, const Vec& v) { return u.size() == v.size() && u == v; }

void require_same_base(const Vec& x1, const Vec& x2, const char* op) {
  require(same(x1, x2), std::string(op) + ": elements lie over different base points");
}

Vec unit(Eigen::Index size, Eigen::Index i) {
  Vec e = Vec::Zero(size);
  e[i] = 1.0;
  return e;
}

}  // namespace

DvbShape::DvbShape(Eigen::Index n_, Eigen::Index p_, Eigen::Index q_, Eigen::Index r_) : n(n_), p(p_), q(q_), r(r_) {
  require(n >= 0 && p >= 0 && q >= 0 && r >= 0, "DvbShape: dimensions must be non-negative");
  require(p + q + r >= 1, "DvbShape: at least one of the fiber dimensions must be positive");
}

void check_conforms(const DvbShape& s, const DvbElement& d) {
  require(d.x.size() == s.n && d.a.size() == s.p && d.b.size() == s.q && d.c.size() == s.r,
          "DvbElement does not match the shape");
}

void check_conforms(const DvbShape& s, const DvbVDualElement& e) {
  require(e.x.size() == s.n && e.a.size() == s.p && e.kappa.size() == s.r && e.phi.size() == s.q,
          "DvbVDualElement does not match the shape");
}

void check_conforms(const DvbShape& s, const DvbHDualElement& e) {
  require(e.x.size() == s.n && e.b.size() == s.q && e.kappa.size() == s.r && e.psi.size() == s.p,
          "DvbHDualElement does not match the shape");
}

DvbElement add_over_A(const DvbElement& d1, const DvbElement& d2) {
  require_same_base(d1.x, d2.x, "add_over_A");
  require(same(d1.a, d2.a), "add_over_A: elements project to different points of A");
  require(d1.b.size() == d2.b.size() && d1.c.size() == d2.c.size(), "add_over_A: shape mismatch");
  return {d1.x, d1.a, d1.b + d2.b, d1.c + d2.c};
}

DvbElement add_over_B(const DvbElement& d1, const DvbElement& d2) {
  require_same_base(d1.x, d2.x, "add_over_B");
  require(same(d1.b, d2.b), "add_over_B: elements project to different points of B");
  require(d1.a.size() == d2.a.size() && d1.c.size() == d2.c.size(), "add_over_B: shape mismatch");
  return {d1.x, d1.a + d2.a, d1.b, d1.c + d2.c};
}

DvbElement scale_over_A(const DvbElement& d, double t) { return {d.x, d.a, t * d.b, t * d.c}; }
DvbElement scale_over_B(const DvbElement& d, double t) { return {d.x, t * d.a, d.b, t * d.c}; }

DvbElement zero_over_A(const DvbShape& s, const Vec& x, const Vec& a) {
  require(x.size() == s.n && a.size() == s.p, "zero_over_A: dimension mismatch");
  return {x, a, Vec::Zero(s.q), Vec::Zero(s.r)};
}

DvbElement zero_over_B(const DvbShape& s, const Vec& x, const Vec& b) {
  require(x.size() == s.n && b.size() == s.q, "zero_over_B: dimension mismatch");
  return {x, Vec::Zero(s.p), b, Vec::Zero(s.r)};
}

double interchange_check(const DvbElement& d1, const DvbElement& d2, const DvbElement& d3, const DvbElement& d4) {
  require(same(d1.x, d2.x) && same(d1.x, d3.x) && same(d1.x, d4.x), "interchange_check: elements over different base points");
  require(same(d1.b, d2.b) && same(d3.b, d4.b), "interchange_check: inner B-sums undefined (b1 != b2 or b3 != b4)");
  require(same(d1.a, d3.a) && same(d2.a, d4.a), "interchange_check: inner A-sums undefined (a1 != a3 or a2 != a4)");
  const DvbElement lhs = add_over_A(add_over_B(d1, d2), add_over_B(d3, d4));
  const DvbElement rhs = add_over_B(add_over_A(d1, d3), add_over_A(d2, d4));
  return std::max({max_abs(lhs.x - rhs.x), max_abs(lhs.a - rhs.a), max_abs(lhs.b - rhs.b), max_abs(lhs.c - rhs.c)});
}

DvbElement core_inject(const DvbShape& s, const Vec& x, const Vec& c) {
  require(x.size() == s.n && c.size() == s.r, "core_inject: dimension mismatch");
  return {x, Vec::Zero(s.p), Vec::Zero(s.q), c};
}

bool is_core(const DvbElement& d) { return d.a.isZero(0.0) && d.b.isZero(0.0); }

DvbElement lift(const Vec& x, const Vec& a, const Vec& b, const Vec& c) { return {x, a, b, c}; }

double pair_over_A(const DvbVDualElement& phi, const DvbElement& d) {
  require_same_base(phi.x, d.x, "pair_over_A");
  require(same(phi.a, d.a), "pair_over_A: covector and element lie over different points of A");
  require(phi.phi.size() == d.b.size() && phi.kappa.size() == d.c.size(), "pair_over_A: shape mismatch");
  return phi.phi.dot(d.b) + phi.kappa.dot(d.c);
}

double pair_over_B(const DvbHDualElement& psi, const DvbElement& d) {
  require_same_base(psi.x, d.x, "pair_over_B");
  require(same(psi.b, d.b), "pair_over_B: covector and element lie over different points of B");
  require(psi.psi.size() == d.a.size() && psi.kappa.size() == d.c.size(), "pair_over_B: shape mismatch");
  return psi.psi.dot(d.a) + psi.kappa.dot(d.c);
}

double theorem1_pairing(const DvbVDualElement& phi, const DvbHDualElement& psi, const Vec& core) {
  require_same_base(phi.x, psi.x, "theorem1_pairing");
  require(same(phi.kappa, psi.kappa), "theorem1_pairing: elements lie over different points of C*");
  const DvbElement d = lift(phi.x, phi.a, psi.b, core);
  return pair_over_A(phi, d) - pair_over_B(psi, d);
}

double theorem1_pairing(const DvbVDualElement& phi, const DvbHDualElement& psi) {
  return theorem1_pairing(phi, psi, Vec::Zero(phi.kappa.size()));
}

double theorem1_pairing_reversed(const DvbVDualElement& phi, const DvbHDualElement& psi) {
  require_same_base(phi.x, psi.x, "theorem1_pairing_reversed");
  require(same(phi.kappa, psi.kappa), "theorem1_pairing_reversed: elements lie over different points of C*");
  const DvbElement d = lift(phi.x, phi.a, psi.b, Vec::Zero(phi.kappa.size()));
  return pair_over_B(psi, d) - pair_over_A(phi, d);
}

DvbVDualElement add_over_Cstar(const DvbVDualElement& u, const DvbVDualElement& v) {
  require_same_base(u.x, v.x, "add_over_Cstar");
  require(same(u.kappa, v.kappa), "add_over_Cstar: different points of C*");
  return {u.x, u.a + v.a, u.kappa, u.phi + v.phi};
}

DvbHDualElement add_over_Cstar(const DvbHDualElement& u, const DvbHDualElement& v) {
  require_same_base(u.x, v.x, "add_over_Cstar");
  require(same(u.kappa, v.kappa), "add_over_Cstar: different points of C*");
  return {u.x, u.b + v.b, u.kappa, u.psi + v.psi};
}

DvbVDualElement add_over_A(const DvbVDualElement& u, const DvbVDualElement& v) {
  require_same_base(u.x, v.x, "add_over_A");
  require(same(u.a, v.a), "add_over_A: different points of A");
  return {u.x, u.a, u.kappa + v.kappa, u.phi + v.phi};
}

DvbHDualElement add_over_B(const DvbHDualElement& u, const DvbHDualElement& v) {
  require_same_base(u.x, v.x, "add_over_B");
  require(same(u.b, v.b), "add_over_B: different points of B");
  return {u.x, u.b, u.kappa + v.kappa, u.psi + v.psi};
}

DualityIso duality_iso(const DvbShape& s) {
  const Eigen::Index dim_v = s.p + s.q;  // (a; phi)
  const Eigen::Index dim_h = s.q + s.p;  // (b; psi)
  const Vec x = Vec::Zero(s.n);
  const Vec kappa = Vec::Zero(s.r);

  auto vdual_basis = [&](Eigen::Index i) {
    const Vec e = unit(dim_v, i);
    return DvbVDualElement{x, e.head(s.p), kappa, e.tail(s.q)};
  };
  auto hdual_basis = [&](Eigen::Index j) {
    const Vec f = unit(dim_h, j);
    return DvbHDualElement{x, f.head(s.q), kappa, f.tail(s.p)};
  };

  DualityIso iso;
  iso.form = Mat::Zero(dim_v, dim_h);
  for (Eigen::Index i = 0; i < dim_v; ++i) {
    for (Eigen::Index j = 0; j < dim_h; ++j) iso.form(i, j) = theorem1_pairing(vdual_basis(i), hdual_basis(j));
  }
  iso.rank = numerical_rank(iso.form);
  iso.nondegenerate = dim_v == dim_h && iso.rank == dim_v;

  for (Eigen::Index i = 0; i < dim_v; ++i) {
    for (Eigen::Index k = 0; k < dim_v; ++k) {
      for (Eigen::Index j = 0; j < dim_h; ++j) {
        const double lhs = theorem1_pairing(add_over_Cstar(vdual_basis(i), vdual_basis(k)), hdual_basis(j));
        const double rhs = iso.form(i, j) + iso.form(k, j);
        iso.linearity_residual_vdual = std::max(iso.linearity_residual_vdual, std::abs(lhs - rhs));
      }
    }
  }
  for (Eigen::Index j = 0; j < dim_h; ++j) {
    for (Eigen::Index k = 0; k < dim_h; ++k) {
      for (Eigen::Index i = 0; i < dim_v; ++i) {
        const double lhs = theorem1_pairing(vdual_basis(i), add_over_Cstar(hdual_basis(j), hdual_basis(k)));
        const double rhs = iso.form(i, j) + iso.form(i, k);
        iso.linearity_residual_hdual = std::max(iso.linearity_residual_hdual, std::abs(lhs - rhs));
      }
    }
  }
  return iso;
}

}  // namespace dvb
