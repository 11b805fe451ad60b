#pragma once

/// @file bundles.hpp
/// @brief A trivialized vector bundle E -> M on one chart and its tangent
/// prolongation TE, with both of its vector bundle structures:
///
///        TE --T(q)--> TM
///        |            |
///       p_E           |
///        v            v
///        E ---------> M
///
/// TE over E adds (dx, de) at fixed (x, e); TE over TM adds (e, de) at
/// fixed (x, dx). Its core is E, sitting inside TE as vertical vectors at
/// the zero section.

#include <Eigen/Dense>

#include "dvb/double_vector_bundle.hpp"
#include "dvb/jets.hpp"

namespace dvb {

struct BundleShape {
  Eigen::Index n = 0;  ///< base dimension
  Eigen::Index k = 1;  ///< fiber dimension

  BundleShape() = default;
  BundleShape(Eigen::Index n_, Eigen::Index k_);
};

/// A point of E.
struct FiberPoint {
  Vec x;
  Vec e;
};

struct TEElement {
  Vec x;
  Vec e;
  Vec dx;
  Vec de;

  FiberPoint vertical_projection() const { return {x, e}; }       ///< p_E
  TangentVector horizontal_projection() const { return {x, dx}; }  ///< T(q)
};

/// Element of T(E*).
struct TEStarElement {
  Vec x;
  Vec p;
  Vec dx;
  Vec dp;

  FiberPoint vertical_projection() const { return {x, p}; }
  TangentVector horizontal_projection() const { return {x, dx}; }
};

/// Element of T*E: a covector (mu, phi) at the point (x, e) of E.
struct CotangentEElement {
  Vec x;
  Vec e;
  Vec mu;   ///< pairs with dx
  Vec phi;  ///< pairs with de

  FiberPoint to_E() const { return {x, e}; }
  FiberPoint to_Estar() const { return {x, phi}; }
};

void check_conforms(const BundleShape& shape, const TEElement& xi);
void check_conforms(const BundleShape& shape, const TEStarElement& eta);
void check_conforms(const BundleShape& shape, const CotangentEElement& w);

/// The vertical tangent vector based at e1, parallel to e2, over x.
TEElement vertical_lift(const BundleShape& shape, const Vec& e1, const Vec& e2, const Vec& x);

/// T(0)(x, dx): the zero section pushed forward.
TEElement zero_section_image(const BundleShape& shape, const Vec& x, const Vec& dx);

TEElement add_over_E(const TEElement& u, const TEElement& v);
TEElement add_over_TM(const TEElement& u, const TEElement& v);
TEElement scale_over_E(const TEElement& u, double t);
TEElement scale_over_TM(const TEElement& u, double t);

struct ZeroSectionSplit {
  TangentVector base;  ///< T(q)(xi)
  Vec core;            ///< the vertical part at 0_x
};

/// Decomposes xi = T(0)(x, dx) +_E (vertical vector at 0_x parallel to de).
/// Rejects xi not based on the zero section.
ZeroSectionSplit zero_section_split(const TEElement& xi);

/// The prolonged pairing TE x_{TM} T(E*) -> R: d/dt <e + t de, p + t dp> at 0.
double tangent_pairing(const TEElement& xi, const TEStarElement& eta);

/// Matrix of the tangent pairing on fibers over a fixed (x, dx):
/// rows (e; de), columns (p; dp). Built by evaluating the pairing on bases.
Mat tangent_pairing_matrix(const BundleShape& shape);

/// TE as a double vector bundle: sides A = E, B = TM, core E.
DvbShape te_as_dvb(const BundleShape& shape);
DvbElement to_dvb(const TEElement& xi);
TEElement from_dvb(const DvbElement& d);

/// T(E*) as the horizontal dual of TE.
DvbHDualElement to_horizontal_dual(const TEStarElement& eta);
TEStarElement from_horizontal_dual(const DvbHDualElement& psi);

/// T*E as the vertical dual of TE: sides E and E*, core T*M.
DvbVDualElement to_vertical_dual(const CotangentEElement& w);
CotangentEElement from_vertical_dual(const DvbVDualElement& phi);

/// The canonical covector/tangent pairing <mu, dx> + <phi, de> of T*E with TE.
double canonical_pairing(const CotangentEElement& w, const TEElement& xi);

}  // namespace dvb
