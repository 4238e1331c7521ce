// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include "polyef/error.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace polyef;
using namespace polyef::test;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char *title, double budget_s,
               const std::function<void(Outcome &)> &body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs >= budget_s && o.ok) {
    o.ok = false;
    o.note = "over time budget of " + std::to_string(budget_s) + " s";
  }
  if (!o.ok)
    ++failures;
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              o.note.empty() ? "" : " -- ", o.note.c_str());
  std::fflush(stdout);
}

} // namespace

int main() {
  criterion(1, "map-image EF holds while projection EF fails on the slab and segment", 1.0,
            [](Outcome &o) {
              Polyhedron U = fixture_polyhedron("example1_U");
              Polyhedron X = fixture_polyhedron("example1_X_vrep");
              auto split = CoordinateSplit::keep_only(4, {1, 2, 3});
              o.require(check_ef_map(U, X, fixture_map("example1_mapA")).holds,
                        "check_ef_map(U, X, A) did not hold");
              EfVerdict s = check_ef_standard(U.h(), X, split);
              o.require(!s.holds, "check_ef_standard(U, X) held");
              o.require(witness_certifies(s, U.h(), X, split), "witness not certified");
              const RVector p{q(45, 2), q(-50), q(100)};
              o.require(h_contains(project_coords(U.h(), split), p),
                        "(45/2, -50, 100) not in the projection");
              o.require(!v_contains(X.v(), p), "(45/2, -50, 100) in X");
            });

  criterion(2, "H-description converts to the two segment vertices; 2+2 irredundant", 1.0,
            [](Outcome &o) {
              Polyhedron eq10 = fixture_polyhedron("example1_X_hrep_eq10");
              VRep v = h_to_v(eq10.h());
              o.require(v.points == std::vector<RVector>{vec({8, 10, 6}), vec({12, 15, 9})},
                        "vertex set differs");
              o.require(v.rays.empty() && v.lines.empty(), "unexpected rays/lines");
              o.require(poly_equal(eq10, fixture_polyhedron("example1_X_vrep")),
                        "poly_equal against the V-description failed");
              HRep r = remove_redundancy(eq10.h());
              o.require(r.inequalities.size() == 2 && r.equalities.size() == 2,
                        "irredundant counts differ from 2+2");
            });

  criterion(3, "LP0 = LP1 = LP2 on 100 random objectives in [-9, 9]^3", 10.0, [](Outcome &o) {
    ReductionInstance inst = fixture_instance();
    EquivalenceReport base = verify_equivalence(inst, vec({1, 1, 1}));
    o.require(base.values_equal && base.lp0.value && *base.lp0.value == 24,
              "alpha = (1,1,1) did not give 24 on every leg");
    o.require(base.retrieved_x && *base.retrieved_x == vec({8, 10, 6}),
              "alpha = (1,1,1) did not retrieve (8,10,6)");
    Rng rng(2024);
    const std::vector<RVector> vertices{vec({8, 10, 6}), vec({12, 15, 9})};
    for (int t = 0; t < 100; ++t) {
      RVector alpha = rng.vector(3, -9, 9);
      EquivalenceReport r = verify_equivalence(inst, alpha);
      o.require(r.values_equal, "legs disagree at trial " + std::to_string(t));
      o.require(r.retrieved_optimal, "retrieved x not optimal at trial " + std::to_string(t));
      o.require(r.lp0.value && *r.lp0.value == *brute_min(vertices, alpha),
                "LP0 differs from vertex oracle at trial " + std::to_string(t));
    }
  });

  criterion(4, "standard and biconditional EF checks agree on 200 random triples", 60.0,
            [](Outcome &o) {
              Rng rng(4);
              for (int t = 0; t < 200; ++t) {
                EfTriple tr = random_ef_triple(rng);
                EfVerdict s = check_ef_standard(tr.ext, tr.target, tr.split);
                EfVerdict i = check_ef_iff(tr.ext, tr.target, tr.split);
                o.require(s.holds == i.holds, "disagreement at trial " + std::to_string(t));
                if (!s.holds)
                  o.require(witness_certifies(s, tr.ext, tr.target, tr.split) &&
                                witness_certifies(i, tr.ext, tr.target, tr.split),
                            "uncertified witness at trial " + std::to_string(t));
              }
            });

  criterion(5, "simplex optimum equals brute-force vertex minimum on 100 bounded HReps", 60.0,
            [](Outcome &o) {
              Rng rng(5);
              for (int t = 0; t < 100; ++t) {
                const std::size_t dim = 1 + rng.index(3);
                // Box rows count toward the 8-constraint cap.
                const std::size_t extra = rng.index(8 - 2 * dim + 1);
                HRep h = rng.hrep(dim, extra, true);
                RVector c = rng.vector(dim, -5, 5);
                LpOutcome out = solve({c, Sense::minimize, h});
                auto dd = brute_min(h_to_v(h).points, c);
                auto brute = brute_min(brute_vertices(h), c);
                const std::string at = " at trial " + std::to_string(t);
                o.require(dd == brute, "vertex oracles disagree" + at);
                if (!brute) {
                  o.require(out.status == LpStatus::infeasible, "expected infeasible" + at);
                  continue;
                }
                o.require(out.status == LpStatus::optimal && *out.value == *brute,
                          "optimum differs" + at);
              }
            });

  criterion(6, "Fourier-Motzkin equals the generator route on 100 random HReps", 120.0,
            [](Outcome &o) {
              Rng rng(6);
              for (int t = 0; t < 100; ++t) {
                const std::size_t dim = 1 + rng.index(5);
                HRep h = rng.hrep(dim, 1 + rng.index(4), rng.coin(70), rng.integer(1, 5));
                auto split = CoordinateSplit::keep_only(dim, rng.keep_subset(dim));
                Polyhedron fm = Polyhedron::from_h(project_coords(h, split));
                Polyhedron dd = image(Polyhedron::from_h(h), split.eraser());
                o.require(poly_equal(fm, dd), "mismatch at trial " + std::to_string(t));
              }
            });

  criterion(7, "graph normal form on three fixed cases", 0, [](Outcome &o) {
    AffineGraph ex = normalize_graph(RMatrix::identity(3), RMatrix::column(vec({-4, -5, -3})),
                                     vec({0, 0, 0}));
    o.require(ex.cbar() == RMatrix::column(vec({4, 5, 3})), "example cbar differs");
    o.require(ex.bbar() == vec({0, 0, 0}), "example bbar differs");
    o.require(mat_mul(ex.B(), ex.cbar()) == -ex.C(), "B * cbar != -C");

    AffineGraph constant = normalize_graph(RMatrix::identity(2), RMatrix(2, 1), vec({3, -7}));
    o.require(constant.cbar().is_zero(), "constant cbar nonzero");
    o.require(constant.bbar() == vec({3, -7}), "constant bbar differs");

    bool raised = false;
    try {
      normalize_graph(mat({{1, 1}, {1, 1}, {2, 2}}), mat({{1}, {0}, {0}}), vec({0, 0, 0}));
    } catch (const GramSingular &) {
      raised = true;
    }
    o.require(raised, "singular case did not raise GramSingular");
  });

  criterion(8, "size report: 2 inequalities vs 2+2, ext_ge_target false", 0, [](Outcome &o) {
    SizeReport r = lemma9_size_report(fixture_polyhedron("example1_U").h(),
                                      fixture_polyhedron("example1_X_hrep_eq10").h());
    o.require(r.ext_inequalities == 2 && r.ext_equalities == 0, "ext counts differ");
    o.require(r.target_inequalities == 2 && r.target_equalities == 2, "target counts differ");
    o.require(!r.ext_ge_target, "ext_ge_target is true");
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
