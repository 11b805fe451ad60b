#pragma once

/// @file builtins.hpp
/// @brief The registry of named smooth maps used by the property suites.

#include <cstddef>
#include <vector>

#include "dvb/jets.hpp"

namespace dvb {

/// Five nonlinear diffeomorphisms of R^n of the form identity plus a small
/// perturbation (componentwise cubic, triangular shears, or perturbations
/// with Lipschitz constant below one). Invertible on all of R^n.
std::vector<SmoothMap> builtin_diffeomorphisms(std::size_t n);

/// The diffeomorphisms plus further maps exercising every expression kind,
/// including maps R^n -> R^m with m != n.
std::vector<SmoothMap> builtin_maps(std::size_t n);

}  // namespace dvb
