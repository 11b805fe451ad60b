#pragma once

/// @file sampling.hpp
/// @brief Seeded random data for property suites.
///
/// Every case draws from its own stream derived from (seed, case index), so
/// results never depend on evaluation order. Only the fully specified
/// mt19937_64 engine and seed_seq are used, and uniform doubles are formed
/// from the top 53 bits directly, so streams are identical across standard
/// library implementations.

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "dvb/expr.hpp"
#include "dvb/jets.hpp"

namespace dvb {

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t stream);

  /// Uniform in [lo, hi).
  double uniform(double lo = -1.0, double hi = 1.0);
  /// Uniform integer in [lo, hi].
  Eigen::Index index(Eigen::Index lo, Eigen::Index hi);

  Vec vec(Eigen::Index n, double lo = -1.0, double hi = 1.0);
  Mat mat(Eigen::Index rows, Eigen::Index cols, double lo = -1.0, double hi = 1.0);
  Mat antisymmetric(Eigen::Index n);

  /// c + b.y + y^T Q y with coefficients uniform in [-1, 1].
  Expr quadratic(std::size_t dim);
  /// Components are random quadratics.
  std::vector<Expr> quadratic_components(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

}  // namespace dvb
