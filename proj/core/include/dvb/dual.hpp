#pragma once

/// @file dual.hpp
/// @brief First-order dual numbers over an arbitrary scalar ring.
///
/// Dual<T> models T[eps]/(eps^2). Nesting gives higher jets:
/// Dual<Dual<double>> is the algebra R[s,t]/(s^2, t^2), whose four
/// components (1, s, t, st) are exactly a point of the second tangent bundle.

#include <cmath>
#include <ostream>
#include <type_traits>

namespace dvb {

template <class T>
struct Dual {
  T value{};
  T eps{};

  constexpr Dual() = default;
  constexpr Dual(T v) : value(v) {}  // NOLINT(google-explicit-constructor)
  constexpr Dual(T v, T e) : value(v), eps(e) {}

  constexpr Dual& operator+=(const Dual& o) {
    value += o.value;
    eps += o.eps;
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    value -= o.value;
    eps -= o.eps;
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) {
    eps = value * o.eps + eps * o.value;
    value *= o.value;
    return *this;
  }

  friend constexpr Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend constexpr Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend constexpr Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend constexpr Dual operator-(const Dual& a) { return {-a.value, -a.eps}; }

  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    const T inv = T(1.0) / b.value;
    return {a.value * inv, (a.eps * b.value - a.value * b.eps) * inv * inv};
  }

  friend constexpr bool operator==(const Dual&, const Dual&) = default;
};

/// Embeds a real constant at any nesting depth.
template <class T>
constexpr T lift(double c) {
  if constexpr (std::is_same_v<T, double>) {
    return c;
  } else {
    return T(lift<decltype(T::value)>(c));
  }
}

/// Strips every infinitesimal layer down to the real part.
inline constexpr double primal(double x) { return x; }
template <class T>
constexpr double primal(const Dual<T>& x) {
  return primal(x.value);
}

template <class T>
Dual<T> sin(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {sin(x.value), cos(x.value) * x.eps};
}

template <class T>
Dual<T> cos(const Dual<T>& x) {
  using std::cos;
  using std::sin;
  return {cos(x.value), -(sin(x.value) * x.eps)};
}

template <class T>
Dual<T> exp(const Dual<T>& x) {
  using std::exp;
  const T e = exp(x.value);
  return {e, e * x.eps};
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Dual<T>& x) {
  return os << '(' << x.value << " + " << x.eps << " eps)";
}

/// Seeds a variable: value x with unit tangent.
template <class T>
constexpr Dual<T> make_variable(T x) {
  return {x, T(1.0)};
}

}  // namespace dvb
