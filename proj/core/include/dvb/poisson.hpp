#pragma once

/// @file poisson.hpp
/// @brief Poisson bivector fields on a chart, the bracket of functions, the
/// Koszul bracket of 1-forms and the anchor T*P -> TP.
///
/// Conventions: #alpha = Pi alpha, {f, g} = <df, Pi dg>, and
///   [alpha, beta] = L_{#alpha} beta - L_{#beta} alpha - d <beta, #alpha>,
/// the bracket for which # is a Lie algebra homomorphism. With these
/// conventions [df, dg] = d{g, f}.

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "dvb/expr.hpp"
#include "dvb/jets.hpp"

namespace dvb {

class PoissonBivector {
 public:
  /// `upper[i][j - i - 1]` is the entry Pi^{ij} for i < j; the lower
  /// triangle is its exact negative and the diagonal is zero.
  PoissonBivector(std::string name, std::size_t dim, std::vector<std::vector<Expr>> upper);

  /// Pi = [[0, I], [-I, 0]] on (x; p), dimension 2n.
  static PoissonBivector canonical(std::size_t n);
  /// Lie-Poisson structure of so(3)*: Pi(x) v = x cross v.
  static PoissonBivector so3();
  /// A constant antisymmetric matrix.
  static PoissonBivector constant(const Mat& m, std::string name = "constant");
  /// A bivector on R^3 that fails the Jacobi identity:
  /// Pi^{12} = x3, Pi^{13} = x3, Pi^{23} = x1.
  static PoissonBivector non_poisson_control();

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dim_; }

  template <class T>
  T entry(std::size_t i, std::size_t j, const std::vector<T>& y) const {
    if (i == j) return lift<T>(0.0);
    if (i < j) return upper_[i][j - i - 1](y);
    return -upper_[j][i - j - 1](y);
  }

  /// Pi(y) alpha.
  template <class T>
  std::vector<T> apply(const std::vector<T>& y, const std::vector<T>& alpha) const {
    require(y.size() == dim_ && alpha.size() == dim_, "PoissonBivector: dimension mismatch");
    std::vector<T> out(dim_, lift<T>(0.0));
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i != j) out[i] = out[i] + entry(i, j, y) * alpha[j];
      }
    }
    return out;
  }

  /// a^T Pi(y) b.
  template <class T>
  T pair(const std::vector<T>& y, const std::vector<T>& a, const std::vector<T>& b) const {
    const std::vector<T> pb = apply(y, b);
    T acc = lift<T>(0.0);
    for (std::size_t i = 0; i < dim_; ++i) acc = acc + a[i] * pb[i];
    return acc;
  }

  Mat matrix(const Vec& y) const;

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<std::vector<Expr>> upper_;
};

/// A 1-form on a chart: a finite sum of terms factor * (explicit components)
/// or factor * df. Exact terms are differentiated by jets on evaluation.
class OneForm {
 public:
  static OneForm explicit_components(std::vector<Expr> components);
  static OneForm exact(std::size_t dim, Expr potential);
  static OneForm zero(std::size_t dim);

  std::size_t dimension() const { return dim_; }

  OneForm operator+(const OneForm& other) const;
  /// Pointwise multiplication by a function.
  OneForm times(const Expr& f) const;
  OneForm scaled(double c) const { return times(Expr(c)); }

  template <class T>
  std::vector<T> operator()(const std::vector<T>& y) const {
    require(y.size() == dim_, "OneForm: dimension mismatch");
    std::vector<T> out(dim_, lift<T>(0.0));
    for (const Term& term : terms_) {
      const T factor = term.factor(y);
      std::vector<T> base;
      if (const auto* comps = std::get_if<std::vector<Expr>>(&term.base)) {
        for (const Expr& c : *comps) base.push_back(c(y));
      } else {
        const Expr& f = std::get<Expr>(term.base);
        base = gradient([&](const auto& pt) { return f(pt); }, y);
      }
      for (std::size_t i = 0; i < dim_; ++i) out[i] = out[i] + factor * base[i];
    }
    return out;
  }

  Vec operator()(const Vec& x) const { return to_eigen((*this)(to_std(x))); }

 private:
  struct Term {
    Expr factor;
    std::variant<std::vector<Expr>, Expr> base;
  };
  OneForm(std::size_t dim, std::vector<Term> terms) : dim_(dim), terms_(std::move(terms)) {}

  std::size_t dim_;
  std::vector<Term> terms_;
};

/// #alpha at x: Pi(x) alpha(x).
Vec anchor(const PoissonBivector& pi, const OneForm& alpha, const Vec& x);

/// {f, g}(y) = <df, Pi dg>; f and g are scalar fields (see jets.hpp).
template <class T, class F, class G>
T poisson_bracket(const PoissonBivector& pi, const F& f, const G& g, const std::vector<T>& y) {
  return pi.pair(y, gradient(f, y), gradient(g, y));
}

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} at x.
double jacobiator(const PoissonBivector& pi, const Expr& f, const Expr& g, const Expr& h, const Vec& x);

/// Lie bracket of vector fields, [X, Y]^i = X^j d_j Y^i - Y^j d_j X^i.
template <class F, class G>
Vec vector_field_bracket(const F& x_field, const G& y_field, const Vec& at) {
  const std::vector<double> pt = to_std(at);
  const Vec xv = to_eigen(x_field(pt));
  const Vec yv = to_eigen(y_field(pt));
  const Mat jx = to_eigen(jacobian(x_field, pt));
  const Mat jy = to_eigen(jacobian(y_field, pt));
  return jy * xv - jx * yv;
}

/// The Koszul bracket of 1-forms at x.
Vec koszul_bracket(const PoissonBivector& pi, const OneForm& alpha, const OneForm& beta, const Vec& x);

/// The differential of {g, f} = <dg, Pi df> at x; equals [df, dg].
Vec bracket_differential(const PoissonBivector& pi, const Expr& f, const Expr& g, const Vec& x);

/// max|#[alpha, beta] - [#alpha, #beta]| at x.
double anchor_homomorphism_residual(const PoissonBivector& pi, const OneForm& alpha, const OneForm& beta, const Vec& x);

}  // namespace dvb
