#pragma once

/// @file double_vector_bundle.hpp
/// @brief Linear-coordinate model of a double vector bundle
///
///        D ----> B
///        |       |
///        v       v
///        A ----> M
///
/// An element is (x; a, b; c): base point x, side projections a and b,
/// and a core coordinate c. Addition over A keeps a fixed and adds (b, c);
/// addition over B keeps b fixed and adds (a, c). The core is the set of
/// elements with a = 0 and b = 0.

#include <Eigen/Dense>

#include "dvb/jets.hpp"

namespace dvb {

struct DvbShape {
  Eigen::Index n = 0;  ///< base
  Eigen::Index p = 0;  ///< side A fiber
  Eigen::Index q = 0;  ///< side B fiber
  Eigen::Index r = 0;  ///< core

  DvbShape() = default;
  DvbShape(Eigen::Index n_, Eigen::Index p_, Eigen::Index q_, Eigen::Index r_);

  friend bool operator==(const DvbShape&, const DvbShape&) = default;
};

struct DvbElement {
  Vec x;
  Vec a;
  Vec b;
  Vec c;
};

/// Element of the vertical dual D^{*V}: sides A and C*, core B*.
struct DvbVDualElement {
  Vec x;
  Vec a;
  Vec kappa;  ///< pairs with c
  Vec phi;    ///< pairs with b
};

/// Element of the horizontal dual D^{*H}: sides C* and B, core A*.
struct DvbHDualElement {
  Vec x;
  Vec b;
  Vec kappa;  ///< pairs with c
  Vec psi;    ///< pairs with a
};

void check_conforms(const DvbShape& shape, const DvbElement& d);
void check_conforms(const DvbShape& shape, const DvbVDualElement& phi);
void check_conforms(const DvbShape& shape, const DvbHDualElement& psi);

DvbElement add_over_A(const DvbElement& d1, const DvbElement& d2);
DvbElement add_over_B(const DvbElement& d1, const DvbElement& d2);
DvbElement scale_over_A(const DvbElement& d, double t);
DvbElement scale_over_B(const DvbElement& d, double t);
DvbElement zero_over_A(const DvbShape& shape, const Vec& x, const Vec& a);
DvbElement zero_over_B(const DvbShape& shape, const Vec& x, const Vec& b);

/// Max-abs difference between
///   (d1 +_B d2) +_A (d3 +_B d4)   and   (d1 +_A d3) +_B (d2 +_A d4).
/// Requires the grid pattern b1 = b2, b3 = b4, a1 = a3, a2 = a4 (shared x),
/// which is exactly what makes both sides defined.
double interchange_check(const DvbElement& d1, const DvbElement& d2, const DvbElement& d3, const DvbElement& d4);

DvbElement core_inject(const DvbShape& shape, const Vec& x, const Vec& c);
bool is_core(const DvbElement& d);

/// Some element over (a, b); the core part defaults to zero.
DvbElement lift(const Vec& x, const Vec& a, const Vec& b, const Vec& c);

/// <Phi, d>_A: pairing in the dual of D -> A.
double pair_over_A(const DvbVDualElement& phi, const DvbElement& d);
/// <Psi, d>_B: pairing in the dual of D -> B.
double pair_over_B(const DvbHDualElement& psi, const DvbElement& d);

/// <Phi, Psi>_{C*} = <Phi, d>_A - <Psi, d>_B for any d over (Phi.a, Psi.b),
/// evaluated with the zero-core lift.
double theorem1_pairing(const DvbVDualElement& phi, const DvbHDualElement& psi);
/// Same pairing through the lift with core part `core`.
double theorem1_pairing(const DvbVDualElement& phi, const DvbHDualElement& psi, const Vec& core);
/// The opposite sign convention <Psi, d>_B - <Phi, d>_A.
double theorem1_pairing_reversed(const DvbVDualElement& phi, const DvbHDualElement& psi);

// Vector bundle structures of the duals.
DvbVDualElement add_over_Cstar(const DvbVDualElement& u, const DvbVDualElement& v);
DvbHDualElement add_over_Cstar(const DvbHDualElement& u, const DvbHDualElement& v);
DvbVDualElement add_over_A(const DvbVDualElement& u, const DvbVDualElement& v);
DvbHDualElement add_over_B(const DvbHDualElement& u, const DvbHDualElement& v);

/// The fiberwise bilinear form between D^{*V} -> C* and D^{*H} -> C* over a
/// point of C*, with certificates.
struct DualityIso {
  /// form(i, j) = <e_i, f_j> with e_i running over the D^{*V} fiber in the
  /// order (a; phi) and f_j over the D^{*H} fiber in the order (b; psi).
  Mat form;
  Eigen::Index rank = 0;
  bool nondegenerate = false;
  /// Additivity defect of the pairing under +_{C*} in each argument,
  /// measured over pairs of basis elements.
  double linearity_residual_vdual = 0.0;
  double linearity_residual_hdual = 0.0;
};

DualityIso duality_iso(const DvbShape& shape);

}  // namespace dvb
