#include "support.hpp"

#include "polyef/error.hpp"

#include <gtest/gtest.h>

using namespace polyef;
using namespace polyef::test;

TEST(CoordinateSplit, KeepAndDrop) {
  auto s = CoordinateSplit::keep_only(5, {3, 1});
  EXPECT_EQ(s.keep(), (std::vector<std::size_t>{3, 1}));
  EXPECT_EQ(s.drop(), (std::vector<std::size_t>{0, 2, 4}));
  EXPECT_EQ(s.restrict(vec({10, 11, 12, 13, 14})), vec({13, 11}));
  EXPECT_EQ(s.eraser().matrix, mat({{0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}}));
  EXPECT_THROW(CoordinateSplit::keep_only(3, {3}), std::out_of_range);
  EXPECT_THROW(CoordinateSplit::keep_only(3, {1, 1}), std::invalid_argument);
}

TEST(ProjectCoords, SlabProjectsToWholeSpace) {
  HRep p = project_coords(fixture_polyhedron("example1_U").h(),
                          CoordinateSplit::keep_only(4, {1, 2, 3}));
  EXPECT_EQ(p.dim, 3u);
  EXPECT_TRUE(p.inequalities.empty());
  EXPECT_TRUE(p.equalities.empty());
}

TEST(ProjectCoords, Eq10OntoFirstCoordinate) {
  HRep p = project_coords(fixture_polyhedron("example1_X_hrep_eq10").h(),
                          CoordinateSplit::keep_only(3, {0}));
  EXPECT_EQ(p.inequalities, (std::vector<Constraint>{le(vec({-1}), -8), le(vec({1}), 12)}));
  EXPECT_TRUE(p.equalities.empty());
}

TEST(ProjectCoords, KeepAllIsRedundancyRemoval) {
  HRep eq10 = fixture_polyhedron("example1_X_hrep_eq10").h();
  EXPECT_EQ(project_coords(eq10, CoordinateSplit::keep_only(3, {0, 1, 2})),
            remove_redundancy(eq10));
}

TEST(ProjectCoords, KeepOrderPermutesCoordinates) {
  HRep h{2, {le(vec({1, 0}), 1), le(vec({0, 1}), 5)}, {}};
  HRep p = project_coords(h, CoordinateSplit::keep_only(2, {1, 0}));
  EXPECT_TRUE(h_contains(p, vec({5, 1})));
  EXPECT_FALSE(h_contains(p, vec({1, 5 + 1})));
}

TEST(ProjectCoords, EmptyStaysEmpty) {
  HRep h{2, {le(vec({1, 0}), 0), le(vec({-1, 0}), -1)}, {}};
  EXPECT_EQ(dimension(project_coords(h, CoordinateSplit::keep_only(2, {1}))), -1);
}

TEST(Image, SlabUnderExampleMapIsTheSegment) {
  Polyhedron img = image(fixture_polyhedron("example1_U"), fixture_map("example1_mapA"));
  EXPECT_TRUE(poly_equal(img, fixture_polyhedron("example1_X_vrep")));
  EXPECT_EQ(img.v().points, (std::vector<RVector>{vec({8, 10, 6}), vec({12, 15, 9})}));
  EXPECT_TRUE(img.v().lines.empty());
}

TEST(Image, IdentityAndZeroMaps) {
  Polyhedron X = fixture_polyhedron("example1_X_vrep");
  EXPECT_TRUE(poly_equal(image(X, AffineMap::identity(3)), X));
  AffineMap zero{RMatrix(3, 3), vec({1, 2, 3})};
  Polyhedron pt = image(X, zero);
  EXPECT_EQ(pt.v().points, (std::vector<RVector>{vec({1, 2, 3})}));
  EXPECT_EQ(dimension(pt), 0);
}

TEST(Image, DimensionMismatch) {
  EXPECT_THROW(image(fixture_polyhedron("example1_X_vrep"), fixture_map("example1_mapA")),
               DimensionMismatch);
}

TEST(GraphPolyhedron, IdentityOnInterval) {
  HRep dom{1, {le(vec({-1}), 0), le(vec({1}), 1)}, {}};
  HRep g = graph_polyhedron(AffineMap::identity(1), dom);
  EXPECT_EQ(g.dim, 2u);
  EXPECT_TRUE(h_contains(g, RVector{q(1, 2), q(1, 2)}));
  EXPECT_FALSE(h_contains(g, RVector{q(1, 2), q(1, 3)}));
  EXPECT_FALSE(h_contains(g, vec({2, 2})));
}

TEST(GraphPolyhedron, ExampleMapProjectsToSegment) {
  HRep g = graph_polyhedron(fixture_map("example1_mapA"), fixture_polyhedron("example1_U").h());
  EXPECT_EQ(g.dim, 7u);
  HRep x = project_coords(g, CoordinateSplit::keep_only(7, {4, 5, 6}));
  EXPECT_TRUE(poly_equal(Polyhedron::from_h(x), fixture_polyhedron("example1_X_vrep")));
}

TEST(GraphPolyhedron, ZeroMapGivesOffsetBlock) {
  HRep dom{2, {le(vec({1, 1}), 1)}, {}};
  HRep g = graph_polyhedron(AffineMap{RMatrix(1, 2), vec({7})}, dom);
  HRep out = project_coords(g, CoordinateSplit::keep_only(3, {2}));
  EXPECT_EQ(h_to_v(out).points, (std::vector<RVector>{vec({7})}));
}

TEST(Compose, MatchesSequentialApplication) {
  AffineMap f{mat({{1, 2}, {0, 1}}), vec({1, 0})};
  AffineMap g{mat({{3, 0}}), vec({-1})};
  AffineMap gf = compose(g, f);
  RVector x = vec({2, 5});
  EXPECT_EQ(gf.apply(x), g.apply(f.apply(x)));
}

// Properties.

TEST(ProjectionProperty, FourierMotzkinMatchesGeneratorRoute) {
  Rng rng(51);
  for (int t = 0; t < 60; ++t) {
    const std::size_t dim = 2 + rng.index(4);
    HRep h = rng.hrep(dim, 1 + rng.index(4), rng.coin(70), 3);
    auto split = CoordinateSplit::keep_only(dim, rng.keep_subset(dim));
    HRep fm = project_coords(h, split);
    Polyhedron dd = image(Polyhedron::from_h(h), split.eraser());
    EXPECT_TRUE(poly_equal(Polyhedron::from_h(fm), dd)) << "trial " << t;
  }
}

TEST(ProjectionProperty, NeverCutsPointsAndEveryPointLifts) {
  Rng rng(52);
  for (int t = 0; t < 40; ++t) {
    const std::size_t dim = 2 + rng.index(3);
    HRep h = rng.hrep(dim, 1 + rng.index(3), true, 3);
    auto split = CoordinateSplit::keep_only(dim, rng.keep_subset(dim));
    HRep fm = project_coords(h, split);
    for (const auto &p : h_to_v(h).points)
      EXPECT_TRUE(h_contains(fm, split.restrict(p)));
    for (const auto &x : h_to_v(fm).points)
      EXPECT_TRUE(has_lift(h, split, x));
    for (int k = 0; k < 5; ++k) {
      RVector x = rng.vector(split.keep().size(), -4, 4);
      EXPECT_EQ(h_contains(fm, x), has_lift(h, split, x));
    }
  }
}

TEST(ProjectionProperty, ImageComposition) {
  Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d0 = 1 + rng.index(3), d1 = 1 + rng.index(3), d2 = 1 + rng.index(3);
    Polyhedron p = Polyhedron::from_v(rng.vrep(d0, 4, rng.coin(40)));
    auto random_map = [&](std::size_t out, std::size_t in) {
      RMatrix m(out, in);
      for (std::size_t i = 0; i < out; ++i)
        for (std::size_t j = 0; j < in; ++j)
          m(i, j) = rng.integer(-2, 2);
      return AffineMap{m, rng.vector(out, -2, 2)};
    };
    AffineMap f = random_map(d1, d0), g = random_map(d2, d1);
    EXPECT_TRUE(poly_equal(image(image(p, f), g), image(p, compose(g, f))));
  }
}
