// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dvb/builtins.hpp"
#include "dvb/canonical.hpp"
#include "dvb/double_vector_bundle.hpp"
#include "dvb/linalg.hpp"
#include "dvb/poisson.hpp"
#include "dvb/sampling.hpp"
#include "oracles.hpp"
#include "suites.hpp"

namespace {

using namespace dvb;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20261019;

struct Verdict {
  bool pass;
  std::string detail;
};

double elapsed_s(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

T2MElement random_t2m(Sampler& rng, Eigen::Index n) { return {rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n)}; }

DvbShape random_shape(Sampler& rng, Eigen::Index bound) {
  const Eigen::Index n = rng.index(1, bound), p = rng.index(0, bound), q = rng.index(0, bound);
  Eigen::Index r = rng.index(0, bound);
  if (p + q + r == 0) r = 1;
  return {n, p, q, r};
}

Verdict involution() {
  const auto start = Clock::now();
  double residual = 0.0;
  bool exchanged = true;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Sampler rng(kSeed, i);
    const T2MElement xi = random_t2m(rng, rng.index(1, 5));
    const T2MElement j = canonical_involution(xi);
    residual = std::max(residual, max_abs(coords(canonical_involution(j)) - coords(xi)));
    exchanged = exchanged && j.p_TM().velocity == xi.prolongation_projection().velocity &&
                j.prolongation_projection().velocity == xi.p_TM().velocity && j.x == xi.x;
  }
  const double t = elapsed_s(start);
  return {residual == 0.0 && exchanged && t < 0.5,
          fmt("J^2 residual %.1e (bitwise 0 required), projections exchanged=%g, %.3f s", residual, exchanged, t)};
}

Verdict naturality() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Sampler rng(kSeed + 1, i);
    const Eigen::Index n = rng.index(1, 5);
    const T2MElement xi = random_t2m(rng, n);
    for (const SmoothMap& f : builtin_diffeomorphisms(static_cast<std::size_t>(n))) {
      const double scale = std::max(1.0, max_abs(coords(second_tangent_map(f, xi))));
      worst = std::max(worst, j_naturality_residual(f, xi) / scale);
    }
  }
  return {worst <= 1e-12, fmt("max relative residual %.2e over 1000 elements x 5 maps", worst)};
}

Verdict interchange() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Sampler rng(kSeed + 2, i);
    const DvbShape s = random_shape(rng, 5);
    const Vec x = rng.vec(s.n), a1 = rng.vec(s.p), a2 = rng.vec(s.p), b1 = rng.vec(s.q), b2 = rng.vec(s.q);
    worst = std::max(worst, interchange_check({x, a1, b1, rng.vec(s.r)}, {x, a2, b1, rng.vec(s.r)}, {x, a1, b2, rng.vec(s.r)},
                                              {x, a2, b2, rng.vec(s.r)}));
  }
  return {worst <= 1e-12, fmt("max residual %.2e over 10000 quadruples", worst)};
}

Verdict theorem1() {
  double lift = 0.0;
  bool reversal = true;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Sampler rng(kSeed + 3, i);
    const DvbShape s = random_shape(rng, 5);
    const Vec x = rng.vec(s.n), kappa = rng.vec(s.r);
    const DvbVDualElement phi{x, rng.vec(s.p), kappa, rng.vec(s.q)};
    const DvbHDualElement psi{x, rng.vec(s.q), kappa, rng.vec(s.p)};
    const double base = theorem1_pairing(phi, psi);
    lift = std::max(lift, std::abs(theorem1_pairing(phi, psi, rng.vec(s.r)) - base) / std::max(1.0, std::abs(base)));
    reversal = reversal && theorem1_pairing_reversed(phi, psi) == -base;
  }
  bool ranks = true;
  for (Eigen::Index p = 0; p <= 6; ++p) {
    for (Eigen::Index q = 0; q <= 6; ++q) {
      const Mat form = duality_iso(DvbShape(2, p, q, 2)).form;
      ranks = ranks && numerical_rank(form) == p + q && oracle::elimination_rank(form) == p + q;
    }
  }
  return {lift <= 1e-12 && reversal && ranks,
          fmt("lift-independence %.2e, reversal exact=%g, rank p+q for p,q<=6=%g", lift, reversal, ranks)};
}

Verdict tangent_pairing_criterion() {
  bool ranks = true;
  for (Eigen::Index k = 1; k <= 6; ++k) ranks = ranks && numerical_rank(tangent_pairing_matrix(BundleShape(3, k))) == 2 * k;
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Sampler rng(kSeed + 4, i);
    const Eigen::Index n = rng.index(1, 5), k = rng.index(1, 6);
    const Vec x = rng.vec(n), dx = rng.vec(n);
    const TEElement xi{x, rng.vec(k), dx, rng.vec(k)};
    const TEStarElement eta{x, rng.vec(k), dx, rng.vec(k)};
    // Propagate the curves t -> e + t de and t -> p + t dp through the pairing with jets.
    const auto curve = [&](const auto& t) {
      auto acc = t[0] * 0.0;
      for (Eigen::Index j = 0; j < k; ++j) acc = acc + (xi.e[j] + t[0] * xi.de[j]) * (eta.p[j] + t[0] * eta.dp[j]);
      return acc;
    };
    const double jet = directional(curve, std::vector<double>{0.0}, std::vector<double>{1.0});
    worst = std::max(worst, std::abs(tangent_pairing(xi, eta) - jet) / std::max(1.0, std::abs(jet)));
  }
  return {ranks && worst <= 1e-12, fmt("fiber rank 2k for k<=6=%g, jet agreement %.2e", ranks, worst)};
}

Verdict tulczyjew_criterion() {
  double defining = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Sampler rng(kSeed + 5, i);
    const Eigen::Index n = rng.index(1, 5);
    const TangentCotangentElement xi{rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n)};
    for (Eigen::Index j = 0; j < 2 * n; ++j) {
      T2MElement eta{xi.x, xi.dx, Vec::Zero(n), Vec::Zero(n)};
      (j < n ? eta.w : eta.z)[j % n] = 1.0;
      defining = std::max(defining, tulczyjew_defining_residual(xi, eta));
    }
  }
  double sym = 0.0;
  for (Eigen::Index n = 1; n <= 5; ++n) sym = std::max(sym, theta_symplectomorphism_residual(n));
  return {defining <= 1e-12 && sym <= 1e-12, fmt("defining identity %.2e, Theta^* omega - omega^T %.2e", defining, sym)};
}

Verdict proposition() {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Sampler rng(kSeed + 6, i);
    const Eigen::Index n = rng.index(1, 4);
    worst = std::max(worst, proposition_composite_residual({rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n)}));
  }
  return {worst <= 1e-12, fmt("max |Theta(#w) - R(w)| %.2e over 10000 covectors", worst)};
}

Verdict r_properties() {
  double anti = 0.0;
  bool core = true;
  Sampler rng(kSeed + 7, 0);
  for (Eigen::Index n = 1; n <= 4; ++n) {
    for (Eigen::Index k = 1; k <= 4; ++k) {
      const BundleShape s(n, k);
      anti = std::max(anti, r_anti_symplectic_residual(s));
      const Vec x = rng.vec(n), alpha = rng.vec(n);
      const CotangentBundleElement r = r_map_from_pairing(s, {x, Vec::Zero(k), alpha, Vec::Zero(k)});
      core = core && r.alpha == -alpha && r.a == Vec::Zero(k) && r.phi == Vec::Zero(k) && r.x == x;
    }
  }
  return {anti <= 1e-12 && core, fmt("R^* omega + omega %.2e, core restriction = -id exactly=%g", anti, core)};
}

Verdict poisson() {
  double jac = 0.0, hom = 0.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Sampler rng(kSeed + 8, i);
    for (const PoissonBivector& pi :
         {PoissonBivector::canonical(static_cast<std::size_t>(rng.index(1, 2))), PoissonBivector::so3()}) {
      const std::size_t d = pi.dimension();
      const Vec x = rng.vec(static_cast<Eigen::Index>(d));
      jac = std::max(jac, std::abs(jacobiator(pi, rng.quadratic(d), rng.quadratic(d), rng.quadratic(d), x)));
      const OneForm a = OneForm::explicit_components(rng.quadratic_components(d)) + OneForm::exact(d, rng.quadratic(d));
      const OneForm b = OneForm::exact(d, rng.quadratic(d)).times(rng.quadratic(d));
      hom = std::max(hom, anchor_homomorphism_residual(pi, a, b, x));
    }
  }
  const PoissonBivector control = PoissonBivector::non_poisson_control();
  const Vec w = verify::negative_control_witness_point();
  const Expr y0 = Expr::variable(0), y1 = Expr::variable(1), y2 = Expr::variable(2);
  const double control_jac = std::abs(jacobiator(control, y0, y1, y2, w));
  const double control_hom = anchor_homomorphism_residual(control, OneForm::exact(3, y0), OneForm::exact(3, y1), w);
  const bool pass = jac <= 1e-10 && hom <= 1e-8 && control_jac > 1e-3 && control_hom > 1e-3;
  return {pass, fmt("jacobiator %.2e, anchor homomorphism %.2e, control fails with %.2f and %.2f", jac, hom, control_jac,
                    control_hom)};
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string strip_wall_time(const std::string& json) {
  std::istringstream in(json);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find("\"wall_ms\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

Verdict harness() {
  const std::string command = std::string(DVBCHECK_PATH) + " run --suite all --report json";
  const auto start = Clock::now();
  const Captured first = capture(command);
  const double t = elapsed_s(start);
  const Captured second = capture(command);
  const bool parsed = nlohmann::json::accept(first.out);
  const bool identical = strip_wall_time(first.out) == strip_wall_time(second.out) && !first.out.empty();
  const bool pass = first.status == 0 && second.status == 0 && t < 10.0 && identical && parsed;
  return {pass, fmt("exit %g, %.2f s, valid json=%g, byte-identical modulo wall_ms=%g", first.status, t, parsed, identical)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"involution", involution},
      {"naturality", naturality},
      {"interchange-law", interchange},
      {"theorem1-duality", theorem1},
      {"tangent-pairing", tangent_pairing_criterion},
      {"tulczyjew", tulczyjew_criterion},
      {"proposition", proposition},
      {"r-properties", r_properties},
      {"poisson", poisson},
      {"harness", harness},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v{false, "threw"};
    try {
      v = check();
    } catch (const std::exception& e) {
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
