#include "suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "dvb/builtins.hpp"
#include "dvb/bundles.hpp"
#include "dvb/canonical.hpp"
#include "dvb/double_vector_bundle.hpp"
#include "dvb/linalg.hpp"
#include "dvb/poisson.hpp"
#include "dvb/sampling.hpp"

namespace dvb::verify {

using nlohmann::json;

namespace {

/// One named residual of a case, compared against its own tolerance.
struct Check {
  const char* name;
  double residual;
  double tolerance;
  bool primary = true;  ///< contributes to the reported max_residual
};

struct CaseOutcome {
  std::vector<Check> checks;
  json inputs = json::object();
};

struct Context {
  const SuiteConfig& cfg;
  Sampler& rng;
  std::uint64_t index;
};

using CaseFn = std::function<CaseOutcome(Context&)>;

struct SuiteDef {
  std::string id;
  int trials;
  double tolerance;  ///< reported primary tolerance
  CaseFn run_case;
};

json to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::Index dim(Context& c, Eigen::Index cap = std::numeric_limits<Eigen::Index>::max()) {
  return c.rng.index(1, std::min<Eigen::Index>(c.cfg.dim_base, cap));
}

/// Dimension in [0, bound] for fibers that may be trivial.
Eigen::Index fiber_dim(Context& c, Eigen::Index cap = std::numeric_limits<Eigen::Index>::max()) {
  return c.rng.index(0, std::min<Eigen::Index>(c.cfg.dim_base, cap));
}

T2MElement random_t2m(Sampler& rng, Eigen::Index n) {
  return {rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n)};
}

json t2m_json(const T2MElement& e) { return {{"x", to_json(e.x)}, {"v", to_json(e.v)}, {"w", to_json(e.w)}, {"z", to_json(e.z)}}; }

json shape_json(const DvbShape& s) { return {s.n, s.p, s.q, s.r}; }

/// Fiber dimensions in [0, bound]; an all-trivial draw gets a one-dimensional core.
DvbShape random_shape(Context& c, Eigen::Index side_cap = std::numeric_limits<Eigen::Index>::max()) {
  const Eigen::Index n = dim(c), p = fiber_dim(c, side_cap), q = fiber_dim(c, side_cap);
  Eigen::Index r = fiber_dim(c);
  if (p + q + r == 0) r = 1;
  return {n, p, q, r};
}

/// Rank of the duality form, cached per shape.
Eigen::Index duality_rank(const DvbShape& s) {
  static std::map<std::array<Eigen::Index, 4>, Eigen::Index> cache;
  const std::array<Eigen::Index, 4> key{s.n, s.p, s.q, s.r};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, duality_iso(s).rank).first;
  return it->second;
}

// --- suites ----------------------------------------------------------------

CaseOutcome involution_case(Context& c) {
  const T2MElement xi = random_t2m(c.rng, dim(c));
  const T2MElement jxi = canonical_involution(xi);
  const T2MElement jjxi = canonical_involution(jxi);
  const double twice = max_abs(coords(jjxi) - coords(xi));
  // J swaps p_TM and T(p_M).
  const double swap = std::max({max_abs(jxi.p_TM().velocity - xi.w), max_abs(jxi.prolongation_projection().velocity - xi.v),
                                max_abs(jxi.x - xi.x)});
  return {{{"J^2 = id", twice, c.cfg.tol_exact}, {"projections exchanged", swap, c.cfg.tol_exact}},
          {{"xi", t2m_json(xi)}}};
}

CaseOutcome naturality_case(Context& c) {
  const Eigen::Index n = dim(c);
  const auto maps = builtin_diffeomorphisms(static_cast<std::size_t>(n));
  const T2MElement xi = random_t2m(c.rng, n);
  CaseOutcome out{{}, {{"xi", t2m_json(xi)}}};
  double nat = 0.0;
  double fd = 0.0;
  for (const SmoothMap& f : maps) {
    const double scale = std::max(1.0, max_abs(coords(second_tangent_map(f, xi))));
    nat = std::max(nat, j_naturality_residual(f, xi) / scale);
    const TangentVector tv = tangent_map(f, xi.x, xi.v);
    fd = std::max(fd, relative_residual(tv.velocity, fd_jvp(f, xi.x, xi.v, 1e-5)));
  }
  out.checks = {{"J o T^2 f = T^2 f o J", nat, c.cfg.tol_exact}, {"Tf against finite differences", fd, c.cfg.tol_fd, false}};
  return out;
}

CaseOutcome interchange_case(Context& c) {
  const DvbShape s = random_shape(c);
  const Vec x = c.rng.vec(s.n);
  const Vec a1 = c.rng.vec(s.p), a2 = c.rng.vec(s.p);
  const Vec b1 = c.rng.vec(s.q), b2 = c.rng.vec(s.q);
  const DvbElement d1{x, a1, b1, c.rng.vec(s.r)};
  const DvbElement d2{x, a2, b1, c.rng.vec(s.r)};
  const DvbElement d3{x, a1, b2, c.rng.vec(s.r)};
  const DvbElement d4{x, a2, b2, c.rng.vec(s.r)};
  const double r = interchange_check(d1, d2, d3, d4);
  json in = {{"shape", shape_json(s)}, {"x", to_json(x)}, {"a", {to_json(a1), to_json(a2)}}, {"b", {to_json(b1), to_json(b2)}},
             {"c", {to_json(d1.c), to_json(d2.c), to_json(d3.c), to_json(d4.c)}}};
  return {{{"interchange law", r, c.cfg.tol_exact}}, std::move(in)};
}

CaseOutcome theorem1_case(Context& c) {
  const DvbShape s = random_shape(c, 6);
  const Vec x = c.rng.vec(s.n);
  const DvbVDualElement phi{x, c.rng.vec(s.p), c.rng.vec(s.r), c.rng.vec(s.q)};
  const DvbHDualElement psi{x, c.rng.vec(s.q), phi.kappa, c.rng.vec(s.p)};
  const Vec core = c.rng.vec(s.r);
  const double base = theorem1_pairing(phi, psi);
  const double lifted = theorem1_pairing(phi, psi, core);
  const double scale = std::max(1.0, std::abs(base));
  const double reversal = std::abs(theorem1_pairing_reversed(phi, psi) + base);
  const double rank_defect = std::abs(static_cast<double>(duality_rank(s) - (s.p + s.q)));
  json in = {{"shape", shape_json(s)}, {"x", to_json(x)},        {"phi_a", to_json(phi.a)}, {"kappa", to_json(phi.kappa)},
             {"phi", to_json(phi.phi)}, {"psi_b", to_json(psi.b)}, {"psi", to_json(psi.psi)}, {"core", to_json(core)}};
  return {{{"lift independence", std::abs(lifted - base) / scale, c.cfg.tol_exact},
           {"order reversal negates", reversal, c.cfg.tol_exact},
           {"fiber pairing rank p+q", rank_defect, 0.5, false}},
          std::move(in)};
}

CaseOutcome tangent_pairing_case(Context& c) {
  const BundleShape s(dim(c), dim(c, 6));
  const Vec x = c.rng.vec(s.n), dx = c.rng.vec(s.n);
  const TEElement xi{x, c.rng.vec(s.k), dx, c.rng.vec(s.k)};
  const TEStarElement eta{x, c.rng.vec(s.k), dx, c.rng.vec(s.k)};
  // d/dt <e + t de, p + t dp> at t = 0, propagated by jets.
  Vec y(2 * s.k), v(2 * s.k);
  y << xi.e, eta.p;
  v << xi.de, eta.dp;
  const auto k = static_cast<std::size_t>(s.k);
  const double jet = directional(
      [k](const auto& z) {
        auto acc = z[0] * z[k];
        for (std::size_t i = 1; i < k; ++i) acc = acc + z[i] * z[k + i];
        return acc;
      },
      to_std(y), to_std(v));
  const double direct = tangent_pairing(xi, eta);
  const double rank_defect = std::abs(static_cast<double>(numerical_rank(tangent_pairing_matrix(s)) - 2 * s.k));
  json in = {{"n", s.n},          {"k", s.k},          {"x", to_json(x)}, {"dx", to_json(dx)}, {"e", to_json(xi.e)},
             {"de", to_json(xi.de)}, {"p", to_json(eta.p)}, {"dp", to_json(eta.dp)}};
  return {{{"jet-differentiated pairing", std::abs(direct - jet) / std::max(1.0, std::abs(jet)), c.cfg.tol_exact},
           {"fiber rank 2k", rank_defect, 0.5, false}},
          std::move(in)};
}

CaseOutcome tulczyjew_case(Context& c) {
  const Eigen::Index n = dim(c);
  const TangentCotangentElement xi{c.rng.vec(n), c.rng.vec(n), c.rng.vec(n), c.rng.vec(n)};
  double defining = 0.0;
  // Admissible eta lie over T(c)(xi) = (x, dx): w and z are free.
  for (Eigen::Index i = 0; i < 2 * n; ++i) {
    T2MElement eta{xi.x, xi.dx, Vec::Zero(n), Vec::Zero(n)};
    (i < n ? eta.w : eta.z)[i % n] = 1.0;
    defining = std::max(defining, tulczyjew_defining_residual(xi, eta));
  }
  const T2MElement eta{xi.x, xi.dx, c.rng.vec(n), c.rng.vec(n)};
  defining = std::max(defining, tulczyjew_defining_residual(xi, eta));
  const double closed = max_abs(coords(tulczyjew(xi)) - coords(tulczyjew_closed_form(xi)));
  json in = {{"x", to_json(xi.x)}, {"p", to_json(xi.p)}, {"dx", to_json(xi.dx)}, {"dp", to_json(xi.dp)}};
  return {{{"defining identity", defining, c.cfg.tol_exact}, {"closed form", closed, c.cfg.tol_exact}}, std::move(in)};
}

CaseOutcome proposition_case(Context& c) {
  const Eigen::Index n = dim(c, 4);
  const CotangentCotangentElement w{c.rng.vec(n), c.rng.vec(n), c.rng.vec(n), c.rng.vec(n)};
  const double composite = proposition_composite_residual(w);
  const BundleShape s(n, n);
  const CotangentDualElement wd = as_cotangent_of_dual(w);
  const double derived = max_abs(coords(r_map_from_pairing(s, wd)) - coords(r_map(s, wd)));
  json in = {{"x", to_json(w.x)}, {"p", to_json(w.p)}, {"alpha", to_json(w.alpha)}, {"beta", to_json(w.beta)}};
  return {{{"Theta o # = R", composite, c.cfg.tol_exact}, {"R from pairing = closed form", derived, c.cfg.tol_exact}},
          std::move(in)};
}

CaseOutcome symplecto_case(Context& c) {
  const Eigen::Index n = dim(c);
  const BundleShape s(n, dim(c));
  const double theta_sym = theta_symplectomorphism_residual(n);
  const double theta_poisson = theta_poisson_residual(n);
  const double r_anti = r_anti_symplectic_residual(s);
  // Core of T*(A*): kappa = 0 and a = 0; R must act as -id there.
  const Vec alpha = c.rng.vec(n);
  const Vec x = c.rng.vec(n);
  const CotangentBundleElement rc =
      r_map_from_pairing(s, CotangentDualElement{x, Vec::Zero(s.k), alpha, Vec::Zero(s.k)});
  const double core = std::max({max_abs(rc.alpha + alpha), max_abs(rc.a), max_abs(rc.phi), max_abs(rc.x - x)});
  json in = {{"n", n}, {"k", s.k}, {"x", to_json(x)}, {"core_alpha", to_json(alpha)}};
  return {{{"Theta^* omega = omega^T", theta_sym, c.cfg.tol_exact},
           {"Theta maps bivectors", theta_poisson, c.cfg.tol_exact},
           {"R^* omega = -omega", r_anti, c.cfg.tol_exact},
           {"R = -id on cores", core, c.cfg.tol_exact}},
          std::move(in)};
}

/// A registry bivector chosen by case index: canonical, so(3)*, or a
/// random constant structure.
PoissonBivector pick_bivector(Context& c) {
  switch (c.index % 3) {
    case 0:
      return PoissonBivector::canonical(static_cast<std::size_t>(c.rng.index(1, std::max(1, c.cfg.dim_base / 2))));
    case 1:
      return PoissonBivector::so3();
    default:
      return PoissonBivector::constant(c.rng.antisymmetric(dim(c)));
  }
}

Vec witness_point() { return Vec::Ones(3); }

CaseOutcome jacobi_case(Context& c) {
  const bool control = c.cfg.negative_controls;
  const PoissonBivector pi = control ? PoissonBivector::non_poisson_control() : pick_bivector(c);
  const std::size_t d = pi.dimension();
  const bool witness = control && c.index == 0;
  const Expr f = witness ? Expr::variable(0) : c.rng.quadratic(d);
  const Expr g = witness ? Expr::variable(1) : c.rng.quadratic(d);
  const Expr h = witness ? Expr::variable(2) : c.rng.quadratic(d);
  const Vec x = witness ? witness_point() : c.rng.vec(static_cast<Eigen::Index>(d));
  const double r = std::abs(jacobiator(pi, f, g, h, x));
  json in = {{"bivector", pi.name()}, {"f", f.to_string()}, {"g", g.to_string()}, {"h", h.to_string()}, {"x", to_json(x)}};
  if (witness) in["witness"] = true;
  return {{{"Jacobi identity", r, kJacobiTolerance}}, std::move(in)};
}

/// A random 1-form mixing explicit, exact and function-multiplied terms.
OneForm random_one_form(Sampler& rng, std::size_t d) {
  OneForm form = OneForm::explicit_components(rng.quadratic_components(d));
  form = form + OneForm::exact(d, rng.quadratic(d));
  return form + OneForm::exact(d, rng.quadratic(d)).times(rng.quadratic(d));
}

CaseOutcome koszul_case(Context& c) {
  const bool control = c.cfg.negative_controls;
  const PoissonBivector pi = control ? PoissonBivector::non_poisson_control() : pick_bivector(c);
  const std::size_t d = pi.dimension();
  const bool witness = control && c.index == 0;
  const Vec x = witness ? witness_point() : c.rng.vec(static_cast<Eigen::Index>(d));
  json in = {{"bivector", pi.name()}, {"x", to_json(x)}};
  double homomorphism = 0.0;
  double exact = 0.0;
  if (witness) {
    in["alpha"] = "d(y0)";
    in["beta"] = "d(y1)";
    in["witness"] = true;
    homomorphism = anchor_homomorphism_residual(pi, OneForm::exact(d, Expr::variable(0)), OneForm::exact(d, Expr::variable(1)), x);
  } else {
    const OneForm alpha = random_one_form(c.rng, d);
    const OneForm beta = random_one_form(c.rng, d);
    homomorphism = anchor_homomorphism_residual(pi, alpha, beta, x);
    // On exact forms the bracket is the differential of the function bracket.
    const Expr f = c.rng.quadratic(d), g = c.rng.quadratic(d);
    exact = max_abs(koszul_bracket(pi, OneForm::exact(d, f), OneForm::exact(d, g), x) - bracket_differential(pi, f, g, x));
    in["f"] = f.to_string();
    in["g"] = g.to_string();
  }
  return {{{"anchor homomorphism", homomorphism, kAnchorTolerance}, {"[df, dg] = d{g, f}", exact, kAnchorTolerance}},
          std::move(in)};
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"involution", 10000, 0.0, involution_case},
      {"naturality", 1000, 0.0, naturality_case},
      {"interchange", 10000, 0.0, interchange_case},
      {"theorem1", 10000, 0.0, theorem1_case},
      {"tangent-pairing", 1000, 0.0, tangent_pairing_case},
      {"tulczyjew", 1000, 0.0, tulczyjew_case},
      {"proposition-r", 10000, 0.0, proposition_case},
      {"symplecto", 200, 0.0, symplecto_case},
      {"poisson-jacobi", 1000, kJacobiTolerance, jacobi_case},
      {"koszul-anchor", 1000, kAnchorTolerance, koszul_case},
  };
  return defs;
}

const SuiteDef* find_suite(std::string_view id) {
  for (const SuiteDef& s : registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const SuiteDef& s : registry()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

int default_trials(std::string_view suite) {
  const SuiteDef* def = find_suite(suite);
  if (def == nullptr) throw UsageError("unknown suite: " + std::string(suite));
  return def->trials;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.suite != "all" && find_suite(cfg.suite) == nullptr) throw UsageError("unknown suite: " + cfg.suite);
  if (cfg.trials && *cfg.trials < 1) throw UsageError("--trials must be at least 1");
  if (cfg.dim_base < 1) throw UsageError("--dim-base must be at least 1");
  if (!(cfg.tol_exact > 0.0) || !(cfg.tol_fd > 0.0)) throw UsageError("tolerances must be positive");
}

Vec negative_control_witness_point() { return witness_point(); }

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const SuiteDef* def = find_suite(cfg.suite);
  if (def == nullptr) throw UsageError("run_suite needs a single suite, got: " + cfg.suite);

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = def->id;
  report.seed = cfg.seed;
  report.trials = cfg.trials.value_or(def->trials);
  report.tolerance = def->tolerance > 0.0 ? def->tolerance : cfg.tol_exact;

  for (int i = 0; i < report.trials; ++i) {
    Sampler rng(cfg.seed, static_cast<std::uint64_t>(i));
    Context ctx{cfg, rng, static_cast<std::uint64_t>(i)};
    CaseOutcome outcome;
    try {
      outcome = def->run_case(ctx);
    } catch (const std::exception& e) {
      // A rejected precondition inside a suite is a defect of the suite.
      outcome.checks = {{"precondition", std::numeric_limits<double>::infinity(), 0.0}};
      outcome.inputs = {{"case", i}, {"error", e.what()}};
    }
    bool failed = false;
    double worst = 0.0;
    const char* worst_name = nullptr;
    for (const Check& check : outcome.checks) {
      const bool finite = std::isfinite(check.residual);
      if (check.primary) {
        report.max_residual = finite ? std::max(report.max_residual, check.residual) : std::numeric_limits<double>::infinity();
      }
      if (!finite || check.residual > check.tolerance) {
        if (!failed || !finite || check.residual > worst) {
          worst = finite ? check.residual : std::numeric_limits<double>::infinity();
          worst_name = check.name;
        }
        failed = true;
      }
    }
    if (failed) {
      ++report.failure_count;
      if (report.failures.size() < kMaxFailureRecords) {
        outcome.inputs["case"] = i;
        outcome.inputs["check"] = worst_name;
        report.failures.push_back({std::move(outcome.inputs), worst});
      }
    }
  }
  report.pass = report.failure_count == 0 && report.max_residual <= report.tolerance;
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SuiteReport> run(const SuiteConfig& cfg) {
  validate(cfg);
  if (cfg.suite != "all") return {run_suite(cfg)};
  std::vector<SuiteReport> reports;
  for (const std::string& id : suite_ids()) {
    SuiteConfig one = cfg;
    one.suite = id;
    reports.push_back(run_suite(one));
  }
  return reports;
}

namespace {

/// JSON has no infinity; non-finite residuals are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const SuiteReport& r) {
  json failures = json::array();
  for (const FailureRecord& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"residual", number(f.residual)}});
  // nlohmann orders object keys, so the document layout is fixed.
  return {{"suite", r.suite},       {"seed", r.seed},           {"trials", r.trials},
          {"max_residual", number(r.max_residual)}, {"tolerance", r.tolerance}, {"pass", r.pass},
          {"wall_ms", r.wall_ms},   {"failure_count", r.failure_count}, {"failures", std::move(failures)}};
}

std::string emit_report(const std::vector<SuiteReport>& reports, ReportFormat format, std::string_view requested) {
  if (format == ReportFormat::kJson) {
    json doc;
    if (requested == "all") {
      json blocks = json::array();
      double wall = 0.0;
      for (const SuiteReport& r : reports) {
        blocks.push_back(to_json(r));
        wall += r.wall_ms;
      }
      doc = {{"suite", "all"},
             {"seed", reports.empty() ? 0 : reports.front().seed},
             {"pass", exit_code(reports) == 0},
             {"wall_ms", wall},
             {"suites", std::move(blocks)}};
    } else {
      doc = to_json(reports.at(0));
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  char buf[256];
  for (const SuiteReport& r : reports) {
    std::snprintf(buf, sizeof buf, "%s %-16s seed=%llu trials=%d max_residual=%.3e tolerance=%.1e failures=%zu wall_ms=%.1f\n",
                  r.pass ? "PASS" : "FAIL", r.suite.c_str(), static_cast<unsigned long long>(r.seed), r.trials,
                  r.max_residual, r.tolerance, r.failure_count, r.wall_ms);
    out << buf;
    for (const FailureRecord& f : r.failures) {
      std::snprintf(buf, sizeof buf, "  failure residual=%.6e inputs=", f.residual);
      out << buf << f.inputs.dump() << "\n";
    }
  }
  return out.str();
}

int exit_code(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.pass; }) ? 0 : 1;
}

}  // namespace dvb::verify
