#pragma once

/// @file expr.hpp
/// @brief Immutable scalar expression trees over chart coordinates.
///
/// The closed family of smooth functions used everywhere in the library:
/// constants, coordinates, sums, products, integer powers and sin/cos/exp.
/// An Expr is evaluated generically, so the same tree runs on doubles (for
/// finite differences) and on nested duals (for jets).

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dvb/dual.hpp"
#include "dvb/error.hpp"

namespace dvb {

class Expr {
 public:
  enum class Kind { kConstant, kVariable, kAdd, kSub, kMul, kNeg, kPow, kSin, kCos, kExp };

  Expr(double c);  // NOLINT(google-explicit-constructor)
  Expr() : Expr(0.0) {}

  static Expr variable(std::size_t index);

  Kind kind() const { return node_->kind; }

  /// One past the largest coordinate index referenced; 0 for constants.
  std::size_t arity() const;

  /// True when no coordinate occurs in the tree.
  bool is_constant() const { return arity() == 0; }

  /// Replaces coordinate i by replacements[i]; used for composition.
  Expr substitute(std::span<const Expr> replacements) const;

  std::string to_string() const;

  template <class T>
  T operator()(std::span<const T> y) const {
    return eval<T>(*node_, y);
  }
  template <class T>
  T operator()(const std::vector<T>& y) const {
    return eval<T>(*node_, std::span<const T>(y));
  }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& a, int exponent);
  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);
  friend Expr exp(const Expr& a);

  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }

 private:
  struct Node {
    Kind kind = Kind::kConstant;
    double constant = 0.0;
    std::size_t index = 0;
    int exponent = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Expr(NodePtr n) : node_(std::move(n)) {}
  static Expr unary(Kind k, const Expr& a, int exponent = 0);
  static Expr binary(Kind k, const Expr& a, const Expr& b);

  template <class T>
  static T eval(const Node& n, std::span<const T> y) {
    using std::cos;
    using std::exp;
    using std::sin;
    switch (n.kind) {
      case Kind::kConstant:
        return lift<T>(n.constant);
      case Kind::kVariable:
        require(n.index < y.size(), "expression references a coordinate outside the chart");
        return y[n.index];
      case Kind::kAdd:
        return eval<T>(*n.lhs, y) + eval<T>(*n.rhs, y);
      case Kind::kSub:
        return eval<T>(*n.lhs, y) - eval<T>(*n.rhs, y);
      case Kind::kMul:
        return eval<T>(*n.lhs, y) * eval<T>(*n.rhs, y);
      case Kind::kNeg:
        return -eval<T>(*n.lhs, y);
      case Kind::kPow: {
        const T base = eval<T>(*n.lhs, y);
        T acc = lift<T>(1.0);
        for (int i = 0; i < n.exponent; ++i) acc = acc * base;
        return acc;
      }
      case Kind::kSin:
        return sin(eval<T>(*n.lhs, y));
      case Kind::kCos:
        return cos(eval<T>(*n.lhs, y));
      case Kind::kExp:
        return exp(eval<T>(*n.lhs, y));
    }
    return lift<T>(0.0);
  }

  NodePtr node_;
};

}  // namespace dvb
