#include "support.hpp"

#include <gtest/gtest.h>

using namespace polyef;
using namespace polyef::test;

namespace {

void expect_outcome_invariants(const LinearProgram &lp, const LpOutcome &out) {
  switch (out.status) {
  case LpStatus::optimal:
    ASSERT_TRUE(out.point && out.value);
    EXPECT_TRUE(satisfies(lp.feasible, *out.point));
    EXPECT_EQ(dot(lp.objective, *out.point), *out.value);
    ASSERT_TRUE(out.dual);
    EXPECT_TRUE(certificate_valid(lp, *out.dual, *out.value));
    break;
  case LpStatus::unbounded: {
    ASSERT_TRUE(out.ray);
    EXPECT_TRUE(in_recession_cone(lp.feasible, *out.ray));
    const Rational gain = dot(lp.objective, *out.ray);
    EXPECT_TRUE(lp.sense == Sense::minimize ? gain < 0 : gain > 0);
    break;
  }
  case LpStatus::infeasible:
    EXPECT_FALSE(out.point);
    break;
  }
}

} // namespace

TEST(Solve, Eq10MinimumIsFirstVertex) {
  LinearProgram lp{vec({1, 1, 1}), Sense::minimize,
                   fixture_polyhedron("example1_X_hrep_eq10").h()};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(*out.point, vec({8, 10, 6}));
  EXPECT_EQ(*out.value, 24);
  expect_outcome_invariants(lp, out);
}

TEST(Solve, Eq10MaximumIsSecondVertex) {
  LinearProgram lp{vec({1, 1, 1}), Sense::maximize,
                   fixture_polyhedron("example1_X_hrep_eq10").h()};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(*out.point, vec({12, 15, 9}));
  EXPECT_EQ(*out.value, 36);
  expect_outcome_invariants(lp, out);
}

TEST(Solve, UnboundedOverProjectionOfSlab) {
  HRep U = fixture_polyhedron("example1_U").h();
  HRep proj = project_coords(U, CoordinateSplit::keep_only(4, {1, 2, 3}));
  LinearProgram lp{vec({1, 0, 0}), Sense::minimize, proj};
  LpOutcome out = solve(lp);
  EXPECT_EQ(out.status, LpStatus::unbounded);
  expect_outcome_invariants(lp, out);
}

TEST(Solve, Infeasible) {
  LinearProgram lp{vec({1}), Sense::minimize,
                   HRep{1, {le(vec({1}), 0), le(vec({-1}), -1)}, {}}};
  LpOutcome out = solve(lp);
  EXPECT_EQ(out.status, LpStatus::infeasible);
  expect_outcome_invariants(lp, out);
}

TEST(Solve, ZeroObjectiveOverWholeSpace) {
  LinearProgram lp{vec({0, 0}), Sense::maximize, HRep::universe(2)};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(*out.value, 0);
}

TEST(Solve, RedundantEqualities) {
  HRep h{2, {le(vec({-1, 0}), 0)}, {{vec({1, 1}), q(2)}, {vec({2, 2}), q(4)}}};
  LinearProgram lp{vec({0, 1}), Sense::maximize, h};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(*out.value, 2);
  expect_outcome_invariants(lp, out);
}

// The classic cycling instance: Dantzig's largest-coefficient rule cycles on
// it, Bland's rule terminates at the optimum -5/4.
TEST(Solve, BealeCyclingInstanceTerminates) {
  HRep h{4,
         {{RVector{q(1, 4), q(-8), q(-1), q(9)}, q(0)},
          {RVector{q(1, 2), q(-12), q(-1, 2), q(3)}, q(0)},
          le(vec({0, 0, 1, 0}), 1),
          le(vec({-1, 0, 0, 0}), 0),
          le(vec({0, -1, 0, 0}), 0),
          le(vec({0, 0, -1, 0}), 0),
          le(vec({0, 0, 0, -1}), 0)},
         {}};
  LinearProgram lp{RVector{q(-3, 4), q(20), q(-1, 2), q(6)}, Sense::minimize, h};
  LpOutcome out = solve(lp);
  ASSERT_EQ(out.status, LpStatus::optimal);
  EXPECT_EQ(*out.value, q(-5, 4));
  expect_outcome_invariants(lp, out);
}

TEST(FeasiblePoint, Examples) {
  auto u = feasible_point(fixture_polyhedron("example1_U").h());
  ASSERT_TRUE(u);
  EXPECT_TRUE(satisfies(fixture_polyhedron("example1_U").h(), *u));

  EXPECT_FALSE(feasible_point(HRep{1, {le(vec({1}), 0), le(vec({-1}), -1)}, {}}));

  HRep eq10 = fixture_polyhedron("example1_X_hrep_eq10").h();
  auto x = feasible_point(eq10);
  ASSERT_TRUE(x);
  EXPECT_TRUE(h_contains(eq10, *x));
  EXPECT_TRUE(v_contains(fixture_polyhedron("example1_X_vrep").v(), *x));
}

TEST(Solve, Deterministic) {
  LinearProgram lp{vec({1, 1, 1}), Sense::minimize,
                   fixture_polyhedron("example1_X_hrep_eq10").h()};
  LpOutcome a = solve(lp), b = solve(lp);
  EXPECT_EQ(*a.point, *b.point);
  EXPECT_EQ(a.dual->inequality_multipliers, b.dual->inequality_multipliers);
}

// Properties.

TEST(LpProperty, OptimumMatchesBruteForceVertexMinimum) {
  Rng rng(41);
  int optimal = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 1 + rng.index(3);
    HRep h = rng.hrep(dim, rng.index(3), true);
    RVector c = rng.vector(dim, -5, 5);
    LinearProgram lp{c, Sense::minimize, h};
    LpOutcome out = solve(lp);
    expect_outcome_invariants(lp, out);
    auto ref = brute_min(brute_vertices(h), c);
    if (!ref) {
      EXPECT_EQ(out.status, LpStatus::infeasible);
      continue;
    }
    ASSERT_EQ(out.status, LpStatus::optimal);
    EXPECT_EQ(*out.value, *ref);
    ++optimal;
  }
  EXPECT_GT(optimal, 50);
}

TEST(LpProperty, DualCertificateOnEveryOptimum) {
  Rng rng(42);
  for (int t = 0; t < 150; ++t) {
    const std::size_t dim = 1 + rng.index(4);
    HRep h = rng.hrep(dim, 1 + rng.index(6), rng.coin(50));
    if (rng.coin(30))
      h.equalities.push_back({rng.nonzero_vector(dim, -3, 3), Rational(rng.integer(-3, 3))});
    LinearProgram lp{rng.vector(dim, -4, 4), rng.coin() ? Sense::minimize : Sense::maximize, h};
    expect_outcome_invariants(lp, solve(lp));
  }
}
