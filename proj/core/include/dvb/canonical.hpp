#pragma once

/// @file canonical.hpp
/// @brief The canonical maps of iterated tangent and cotangent bundles:
/// the involution J of T^2M, the Liouville form and canonical symplectic
/// structure of T*M, the canonical Poisson anchor T*(T*M) -> T(T*M), the
/// Tulczyjew map T(T*M) -> T*(TM), and R_A: T*(A*) -> T*(A).
///
/// Conventions (all fixed, all checked against each other in tests):
///   theta = sum p_i dx^i,  omega = d theta = sum dp_i ^ dx^i,
///   X_f = (df/dp, -df/dx).

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "dvb/bundles.hpp"
#include "dvb/expr.hpp"
#include "dvb/jets.hpp"

namespace dvb {

/// A point of T^2M = T(TM): the 2-jet of x + s v + t w + s t z.
struct T2MElement {
  Vec x;
  Vec v;  ///< s-velocity; p_TM(xi) = (x, v)
  Vec w;  ///< t-velocity; T(p_M)(xi) = (x, w)
  Vec z;  ///< mixed part

  TangentVector p_TM() const { return {x, v}; }
  TangentVector prolongation_projection() const { return {x, w}; }

  Jet2 to_jet() const { return {x, v, w, z}; }
  static T2MElement from_jet(const Jet2& j) { return {j.x, j.ds, j.dt, j.dsdt}; }
};

/// A point of T*M.
struct CotangentElement {
  Vec x;
  Vec p;
};

/// A point of T(T*M).
struct TangentCotangentElement {
  Vec x;
  Vec p;
  Vec dx;
  Vec dp;
};

/// A point of T*(TM): covector (alpha, beta) at (x, v).
struct CotangentTangentElement {
  Vec x;
  Vec v;
  Vec alpha;  ///< pairs with dx
  Vec beta;   ///< pairs with dv
};

/// A point of T*(T*M): covector (alpha, beta) at (x, p).
struct CotangentCotangentElement {
  Vec x;
  Vec p;
  Vec alpha;  ///< pairs with dx
  Vec beta;   ///< pairs with dp
};

/// A point of T*(A*): covector (alpha, a) at (x, kappa) in A*.
struct CotangentDualElement {
  Vec x;
  Vec kappa;
  Vec alpha;  ///< pairs with dx
  Vec a;      ///< pairs with dkappa
};

/// A point of T*(A): covector (alpha, phi) at (x, a) in A.
struct CotangentBundleElement {
  Vec x;
  Vec a;
  Vec alpha;  ///< pairs with dx
  Vec phi;    ///< pairs with da
};

/// A constant-coefficient 2-form, omega(u, w) = u^T M w.
class ConstantTwoForm {
 public:
  /// Rejects non-square or not exactly antisymmetric matrices.
  explicit ConstantTwoForm(Mat m);

  /// Rejects fields whose entries depend on the coordinates.
  static ConstantTwoForm from_field(const std::vector<std::vector<Expr>>& field);

  const Mat& matrix() const { return m_; }
  Eigen::Index dimension() const { return m_.rows(); }
  double operator()(const Vec& u, const Vec& w) const { return u.dot(m_ * w); }

  /// L^* omega for a linear map with matrix L.
  ConstantTwoForm pullback(const Mat& l) const;

  /// The Poisson bivector omega^{-1} of a nondegenerate form. With it,
  /// X_f = bivector * df satisfies i_{X_f} omega = -df.
  Mat bivector() const;

 private:
  Mat m_;
};

// --- coordinates -----------------------------------------------------------

Vec coords(const T2MElement& e);
Vec coords(const TangentCotangentElement& e);
Vec coords(const CotangentTangentElement& e);
Vec coords(const CotangentCotangentElement& e);
Vec coords(const CotangentDualElement& e);
Vec coords(const CotangentBundleElement& e);

/// Splits a coordinate vector of length 4n into the four blocks.
std::array<Vec, 4> split4(const Vec& y, Eigen::Index n);
/// Splits a coordinate vector into blocks (n, k, n, k).
std::array<Vec, 4> split_nknk(const Vec& y, Eigen::Index n, Eigen::Index k);

// --- J ---------------------------------------------------------------------

/// phi -> phi o sigma, sigma(s,t) = (t,s): swaps v and w.
T2MElement canonical_involution(const T2MElement& xi);

/// T^2 f in coordinates.
T2MElement second_tangent_map(const SmoothMap& f, const T2MElement& xi);

/// max|J(T^2 f(xi)) - T^2 f(J xi)|.
double j_naturality_residual(const SmoothMap& f, const T2MElement& xi);

// --- theta, omega, # -------------------------------------------------------

/// theta(eta) = <p, T(c)(eta)> = <p, dx>.
double liouville_form(const TangentCotangentElement& at);

/// Components of theta at y = (x, p), generic over the scalar type.
template <class T>
std::vector<T> liouville_components(const std::vector<T>& y) {
  const std::size_t n = y.size() / 2;
  std::vector<T> theta(y.size(), lift<T>(0.0));
  for (std::size_t i = 0; i < n; ++i) theta[i] = y[n + i];
  return theta;
}

/// omega = d theta on T*M (dimension 2n), obtained by differentiating the
/// Liouville form with jets. Coordinates ordered (x; p).
ConstantTwoForm canonical_symplectic(Eigen::Index n);

/// The closed form [[0, -I], [I, 0]] used as a cross-check.
Mat canonical_symplectic_closed_form(Eigen::Index n);

/// The canonical anchor T*(T*M) -> T(T*M): (alpha, beta) -> (dx, dp) = (beta, -alpha).
TangentCotangentElement poisson_anchor_canonical(const CotangentCotangentElement& w);

// --- Theta -----------------------------------------------------------------

/// T^2M seen as T(E) for E = TM: e = v, dx = w, de = z.
TEElement as_tangent_of_tangent(const T2MElement& eta);
/// T(T*M) seen as T(E*) for E = TM.
TEStarElement as_tangent_of_dual(const TangentCotangentElement& xi);

/// <w, eta> for w in T*(TM) and eta in T(TM) over the same point of TM.
double cotangent_tangent_pairing(const CotangentTangentElement& w, const T2MElement& eta);

/// Theta, computed from its defining identity
///   <Theta(xi), eta> = <<J eta, xi>>  (tangent pairing)
/// for all eta in T(TM) with p_TM(eta) = T(c)(xi), solved on a basis of
/// admissible eta.
CotangentTangentElement tulczyjew(const TangentCotangentElement& xi);

/// The coordinate shuffle (x, p, dx, dp) -> (x, dx; dp, p).
CotangentTangentElement tulczyjew_closed_form(const TangentCotangentElement& xi);

/// |<Theta xi, eta> - <<J eta, xi>>| for an admissible eta.
double tulczyjew_defining_residual(const TangentCotangentElement& xi, const T2MElement& eta);

/// Matrix of Theta in the coordinates (x, p, dx, dp) -> (x, v, alpha, beta).
Mat tulczyjew_matrix(Eigen::Index n);

/// The tangent lift of a constant 2-form on P to TP, coordinates (y; dy).
/// Computed from omega^T(X^c, Y^c) = omega(X,Y)^c and
/// omega^T(X^c, Y^v) = omega(X,Y)^v on constant fields, with complete lifts
/// taken by jets.
ConstantTwoForm tangent_lift_two_form(const std::vector<std::vector<Expr>>& field);
ConstantTwoForm tangent_lift_two_form(const ConstantTwoForm& omega);

/// max|Theta^* omega_{T*(TM)} - omega^T| as constant matrices.
double theta_symplectomorphism_residual(Eigen::Index n);

/// max|Theta_* (omega^T)^{-1} - omega_{T*(TM)}^{-1}|: Theta maps the
/// bivector of the tangent-lifted structure to the canonical one.
double theta_poisson_residual(Eigen::Index n);

// --- R ---------------------------------------------------------------------

/// R_A: T*(A*) -> T*(A), (x, kappa; alpha, a) -> (x, a; -alpha, kappa).
CotangentBundleElement r_map(const BundleShape& shape, const CotangentDualElement& w);

/// R_A recovered from the double vector bundle duality: T*(A*) is the
/// vertical dual of T(A*), T(A) its horizontal dual, and R(w) is the
/// covector on T(A) given by the reversed pairing of the two duals.
CotangentBundleElement r_map_from_pairing(const BundleShape& shape, const CotangentDualElement& w);

/// Matrix of r_map_from_pairing on the coordinates, pinned on the standard
/// basis; (x, kappa, alpha, a) -> (x, a, alpha', phi').
Mat pin_r_map(const BundleShape& shape);

/// Matrix of the closed form r_map.
Mat r_map_matrix(const BundleShape& shape);

/// max|R^* omega_{T*A} + omega_{T*(A*)}|.
double r_anti_symplectic_residual(const BundleShape& shape);

/// T*(T*M) as T*(A*) for A = TM.
CotangentDualElement as_cotangent_of_dual(const CotangentCotangentElement& w);

/// max|Theta(#(w)) - R_{TM}(w)|.
double proposition_composite_residual(const CotangentCotangentElement& w);

}  // namespace dvb
