#include <gtest/gtest.h>

#include <cmath>

#include "dvb/builtins.hpp"
#include "dvb/dual.hpp"
#include "dvb/jets.hpp"
#include "dvb/linalg.hpp"
#include "dvb/sampling.hpp"
#include "oracles.hpp"

namespace dvb {
namespace {

Expr y(std::size_t i) { return Expr::variable(i); }
Vec v1(double a) { return Vec::Constant(1, a); }

oracle::VecFn as_fn(const SmoothMap& f) {
  return [f](const Vec& x) { return f(x); };
}

// --- Dual ------------------------------------------------------------------

TEST(Dual, ProductRuleInOneSlot) {
  const Dual<double> a{3.0, 1.0};
  const Dual<double> b{2.0, 0.5};
  const Dual<double> p = a * b;
  EXPECT_EQ(p.value, 6.0);
  EXPECT_EQ(p.eps, 1.0 * 2.0 + 3.0 * 0.5);
}

TEST(Dual, QuotientRule) {
  const Dual<double> q = Dual<double>{1.0, 0.0} / Dual<double>{2.0, 1.0};
  EXPECT_DOUBLE_EQ(q.value, 0.5);
  EXPECT_DOUBLE_EQ(q.eps, -0.25);  // d(1/x) = -1/x^2 at x = 2
}

TEST(Dual, TranscendentalDerivatives) {
  const double x = 0.7;
  EXPECT_DOUBLE_EQ(sin(make_variable(x)).eps, std::cos(x));
  EXPECT_DOUBLE_EQ(cos(make_variable(x)).eps, -std::sin(x));
  EXPECT_DOUBLE_EQ(exp(make_variable(x)).eps, std::exp(x));
}

TEST(Dual, NestedSlotsAreIndependent) {
  // (x + s + t)^2 at x = 2 gives 4 + 4s + 4t + 2st.
  const Jet2Scalar x{{2.0, 1.0}, {1.0, 0.0}};
  const Jet2Scalar sq = x * x;
  EXPECT_EQ(sq.value.value, 4.0);
  EXPECT_EQ(sq.value.eps, 4.0);
  EXPECT_EQ(sq.eps.value, 4.0);
  EXPECT_EQ(sq.eps.eps, 2.0);
}

TEST(Dual, LeibnizRuleHoldsSlotwise) {
  Sampler rng(3, 0);
  for (int i = 0; i < 100; ++i) {
    const Jet2Scalar a{{rng.uniform(), rng.uniform()}, {rng.uniform(), rng.uniform()}};
    const Jet2Scalar b{{rng.uniform(), rng.uniform()}, {rng.uniform(), rng.uniform()}};
    const Jet2Scalar p = a * b;
    // Expand (a0 + a_s s + a_t t + a_st st)(b0 + ...) by hand.
    EXPECT_DOUBLE_EQ(p.value.eps, a.value.eps * b.value.value + a.value.value * b.value.eps);
    EXPECT_DOUBLE_EQ(p.eps.value, a.eps.value * b.value.value + a.value.value * b.eps.value);
    EXPECT_NEAR(p.eps.eps,
                a.eps.eps * b.value.value + a.value.value * b.eps.eps + a.value.eps * b.eps.value + a.eps.value * b.value.eps,
                1e-15);
  }
}

// --- Expr ------------------------------------------------------------------

TEST(Expr, EvaluatesEveryKind) {
  const Expr e = sin(y(0)) * exp(y(1)) - cos(y(0)) + pow(y(1), 3) + Expr(2.0);
  const std::vector<double> pt{0.3, -0.4};
  const double ref = std::sin(0.3) * std::exp(-0.4) - std::cos(0.3) + std::pow(-0.4, 3) + 2.0;
  EXPECT_DOUBLE_EQ(e(pt), ref);
  EXPECT_EQ(e.arity(), 2u);
  EXPECT_FALSE(e.is_constant());
  EXPECT_TRUE(Expr(1.5).is_constant());
}

TEST(Expr, RejectsNegativeExponent) { EXPECT_THROW(pow(y(0), -1), PreconditionError); }

TEST(Expr, SubstitutionComposes) {
  const Expr outer = y(0) * y(1);
  const std::vector<Expr> inner{y(0) + Expr(1.0), pow(y(0), 2)};
  const Expr composed = outer.substitute(inner);
  const std::vector<double> pt{2.0};
  EXPECT_DOUBLE_EQ(composed(pt), 3.0 * 4.0);
}

// --- eval_jet --------------------------------------------------------------

TEST(EvalJet, SquareSingleSlot) {
  const SmoothMap f(1, {pow(y(0), 2)});
  const Jet2 out = eval_jet(f, Jet2(v1(2), v1(1), v1(0), v1(0)));
  EXPECT_EQ(out.x[0], 4.0);
  EXPECT_EQ(out.ds[0], 4.0);
  EXPECT_EQ(out.dt[0], 0.0);
  EXPECT_EQ(out.dsdt[0], 0.0);
}

TEST(EvalJet, SquareBothSlots) {
  const SmoothMap f(1, {pow(y(0), 2)});
  const Jet2 out = eval_jet(f, Jet2(v1(2), v1(1), v1(1), v1(0)));
  EXPECT_EQ(out.x[0], 4.0);
  EXPECT_EQ(out.ds[0], 4.0);
  EXPECT_EQ(out.dt[0], 4.0);
  EXPECT_EQ(out.dsdt[0], 2.0);
  // Central differences of (2 + s + t)^2.
  const Vec mixed = oracle::fd_mixed(as_fn(f), v1(2), v1(1), v1(1), v1(0));
  EXPECT_NEAR(mixed[0], 2.0, 1e-6);
}

TEST(EvalJet, IdentityIsIdentity) {
  Sampler rng(5, 0);
  const Jet2 j(rng.vec(3), rng.vec(3), rng.vec(3), rng.vec(3));
  const Jet2 out = eval_jet(SmoothMap::identity(3), j);
  EXPECT_EQ(out.x, j.x);
  EXPECT_EQ(out.ds, j.ds);
  EXPECT_EQ(out.dt, j.dt);
  EXPECT_EQ(out.dsdt, j.dsdt);
}

TEST(EvalJet, RejectsMismatchedDimensions) {
  EXPECT_THROW(Jet2(Vec::Zero(2), Vec::Zero(3), Vec::Zero(2), Vec::Zero(2)), PreconditionError);
  const SmoothMap f(2, {y(0) * y(1)});
  EXPECT_THROW(eval_jet(f, Jet2::constant(Vec::Zero(3))), PreconditionError);
}

TEST(EvalJet, ZeroInfinitesimalsGivePlainEvaluation) {
  Sampler rng(11, 0);
  for (const SmoothMap& f : builtin_maps(3)) {
    const Vec x = rng.vec(3);
    const Jet2 out = eval_jet(f, Jet2::constant(x));
    EXPECT_EQ(out.x, f(x)) << f.name();
    EXPECT_EQ(max_abs(out.ds), 0.0) << f.name();
    EXPECT_EQ(max_abs(out.dsdt), 0.0) << f.name();
  }
}

TEST(EvalJet, AllPartsMatchFiniteDifferences) {
  Sampler rng(12, 0);
  for (const SmoothMap& f : builtin_maps(3)) {
    const Jet2 j(rng.vec(3), rng.vec(3), rng.vec(3), rng.vec(3));
    const Jet2 out = eval_jet(f, j);
    const auto fn = as_fn(f);
    EXPECT_LE(relative_residual(out.ds, oracle::fd_directional(fn, j.x, j.ds)), 1e-8) << f.name();
    EXPECT_LE(relative_residual(out.dt, oracle::fd_directional(fn, j.x, j.dt)), 1e-8) << f.name();
    EXPECT_LE(relative_residual(out.dsdt, oracle::fd_mixed(fn, j.x, j.ds, j.dt, j.dsdt)), 1e-5) << f.name();
  }
}

TEST(EvalJet, Functorial) {
  for (int n = 1; n <= 4; ++n) {
    const auto maps = builtin_diffeomorphisms(static_cast<std::size_t>(n));
    Sampler rng(13, static_cast<std::uint64_t>(n));
    for (const SmoothMap& f : maps) {
      for (const SmoothMap& g : builtin_maps(static_cast<std::size_t>(n))) {
        const Jet2 j(rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n));
        const Jet2 lhs = eval_jet(compose(g, f), j);
        const Jet2 rhs = eval_jet(g, eval_jet(f, j));
        const Vec l = (Vec(4 * lhs.x.size()) << lhs.x, lhs.ds, lhs.dt, lhs.dsdt).finished();
        const Vec r = (Vec(4 * rhs.x.size()) << rhs.x, rhs.ds, rhs.dt, rhs.dsdt).finished();
        EXPECT_LE(relative_residual(l, r), 1e-12) << g.name() << " after " << f.name();
      }
    }
  }
}

// --- tangent_map and fd_jvp ------------------------------------------------

TEST(TangentMap, Cube) {
  const SmoothMap f(1, {pow(y(0), 3)});
  const TangentVector tv = tangent_map(f, v1(1), v1(2));
  EXPECT_EQ(tv.point[0], 1.0);
  EXPECT_EQ(tv.velocity[0], 6.0);
  EXPECT_NEAR(oracle::fd_directional(as_fn(f), v1(1), v1(2))[0], 6.0, 1e-8);
}

TEST(TangentMap, IdentityAndConstant) {
  const Vec x = (Vec(2) << 0.5, -1.0).finished();
  const Vec v = (Vec(2) << 2.0, 3.0).finished();
  const TangentVector id = tangent_map(SmoothMap::identity(2), x, v);
  EXPECT_EQ(id.point, x);
  EXPECT_EQ(id.velocity, v);
  const Vec c = (Vec(3) << 1.0, 2.0, 3.0).finished();
  const TangentVector k = tangent_map(SmoothMap::constant(2, c), x, v);
  EXPECT_EQ(k.point, c);
  EXPECT_EQ(max_abs(k.velocity), 0.0);
}

TEST(FdJvp, Examples) {
  const SmoothMap sq(1, {pow(y(0), 2)});
  EXPECT_NEAR(fd_jvp(sq, v1(3), v1(1), 1e-4)[0], 6.0, 1e-7);
  const SmoothMap s(1, {sin(y(0))});
  EXPECT_NEAR(fd_jvp(s, v1(0), v1(1), 1e-5)[0], 1.0, 1e-9);
  EXPECT_THROW(fd_jvp(s, v1(0), v1(1), 0.0), PreconditionError);
}

TEST(FdJvp, ExactOnLinearMaps) {
  Sampler rng(17, 0);
  const Mat a = rng.mat(3, 2);
  const Vec x = rng.vec(2), v = rng.vec(2);
  for (double h : {1e-3, 0.5, 10.0}) EXPECT_LE(max_abs(fd_jvp(SmoothMap::linear(a), x, v, h) - a * v), 1e-13);
}

TEST(TangentMap, AgreesWithFiniteDifferencesOnBuiltins) {
  for (int n = 1; n <= 3; ++n) {
    Sampler rng(19, static_cast<std::uint64_t>(n));
    for (const SmoothMap& f : builtin_maps(static_cast<std::size_t>(n))) {
      for (int t = 0; t < 100; ++t) {
        const Vec x = rng.vec(n), v = rng.vec(n);
        EXPECT_LE(relative_residual(tangent_map(f, x, v).velocity, fd_jvp(f, x, v, 1e-5)), 1e-6) << f.name();
      }
    }
  }
}

TEST(TangentMap, LinearInVelocityForPolynomials) {
  const SmoothMap f = builtin_maps(3)[5];  // polynomial
  ASSERT_EQ(f.name(), "polynomial");
  Sampler rng(23, 0);
  const Vec x = rng.vec(3), v = rng.vec(3), w = rng.vec(3);
  const Vec lhs = tangent_map(f, x, 2.0 * v + w).velocity;
  const Vec rhs = 2.0 * tangent_map(f, x, v).velocity + tangent_map(f, x, w).velocity;
  EXPECT_LE(max_abs(lhs - rhs), 1e-14);
}

// --- generic helpers -------------------------------------------------------

TEST(Helpers, GradientAndJacobianMatchFiniteDifferences) {
  const SmoothMap f = builtin_maps(3)[6];  // trig-exp
  Sampler rng(29, 0);
  const Vec x = rng.vec(3);
  const Mat jac = to_eigen(jacobian([&](const auto& p) { return f(p); }, to_std(x)));
  EXPECT_LE(max_abs(jac - oracle::fd_jacobian(as_fn(f), x)), 1e-9);
  const Expr g = y(0) * sin(y(1)) + exp(y(2));
  const Vec grad = to_eigen(gradient([&](const auto& p) { return g(p); }, to_std(x)));
  EXPECT_LE(max_abs(grad - oracle::fd_gradient([&](const Vec& p) { return g(to_std(p)); }, x)), 1e-9);
}

TEST(Helpers, ExteriorDerivativeOfExactFormVanishes) {
  const Expr f = y(0) * y(1) * y(1) + sin(y(2));
  const auto df = [&](const auto& p) { return gradient([&](const auto& q) { return f(q); }, p); };
  const Vec x = (Vec(3) << 0.1, 0.2, 0.3).finished();
  EXPECT_LE(max_abs(exterior_derivative(df, x)), 1e-14);
}

}  // namespace
}  // namespace dvb
