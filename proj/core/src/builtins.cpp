#include "dvb/builtins.hpp"

namespace dvb {

namespace {

Expr y(std::size_t i) { return Expr::variable(i); }

template <class Fn>
SmoothMap componentwise(std::size_t n, const char* name, Fn component) {
  std::vector<Expr> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(component(i));
  return {n, std::move(c), name};
}

}  // namespace

std::vector<SmoothMap> builtin_diffeomorphisms(std::size_t n) {
  require(n >= 1, "builtin_diffeomorphisms: dimension must be positive");
  const auto next = [n](std::size_t i) { return (i + 1) % n; };
  std::vector<SmoothMap> maps;
  // y_i + 0.1 y_i^3: strictly increasing in each coordinate.
  maps.push_back(componentwise(n, "cubic", [](std::size_t i) { return y(i) + Expr(0.1) * pow(y(i), 3); }));
  // Triangular: coordinate i is perturbed only by later coordinates.
  maps.push_back(componentwise(n, "shear", [n](std::size_t i) {
    return i + 1 < n ? y(i) + Expr(0.3) * pow(y(i + 1), 2) : y(i) + Expr(0.2) * pow(y(i), 3);
  }));
  maps.push_back(componentwise(n, "exp-shear", [n](std::size_t i) {
    return i + 1 < n ? y(i) + Expr(0.1) * exp(y(i + 1)) : y(i) + Expr(0.1) * exp(Expr(0.5) * y(i));
  }));
  // Perturbations with |Dg| <= 0.2 < 1.
  maps.push_back(componentwise(n, "sine", [&](std::size_t i) { return y(i) + Expr(0.2) * sin(y(next(i))); }));
  maps.push_back(componentwise(n, "cosine-mix", [&](std::size_t i) {
    return y(i) + Expr(0.1) * cos(y(i) + Expr(0.5) * y(next(i)));
  }));
  return maps;
}

std::vector<SmoothMap> builtin_maps(std::size_t n) {
  std::vector<SmoothMap> maps = builtin_diffeomorphisms(n);
  const auto next = [n](std::size_t i) { return (i + 1) % n; };
  maps.push_back(componentwise(n, "polynomial", [&](std::size_t i) {
    return Expr(0.5) * y(i) * y(next(i)) - pow(y(i), 2) + Expr(0.25) * pow(y(next(i)), 3) + Expr(1.0);
  }));
  maps.push_back(componentwise(n, "trig-exp", [&](std::size_t i) {
    return sin(y(i)) * exp(Expr(0.3) * y(next(i))) - cos(Expr(2.0) * y(i));
  }));

  Expr energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) energy += Expr(0.5) * pow(y(i), 2) + Expr(0.1) * sin(y(i) * y(next(i)));
  maps.emplace_back(n, std::vector<Expr>{energy}, "scalar-energy");

  std::vector<Expr> wide;
  for (std::size_t i = 0; i < n + 1; ++i) wide.push_back(exp(Expr(0.2) * y(i % n)) * cos(y(next(i % n))));
  maps.emplace_back(n, std::move(wide), "widening");
  return maps;
}

}  // namespace dvb
