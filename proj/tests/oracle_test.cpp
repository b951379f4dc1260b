#include <random>

#include <gtest/gtest.h>

#include "tvs/bounds.hpp"
#include "tvs/constructors.hpp"
#include "tvs/families.hpp"
#include "tvs/oracle.hpp"
#include "tvs/small_fixtures.hpp"
#include "test_util.hpp"

namespace tvs {
namespace {

Graph family(Family f, std::size_t n) { return generate(FamilySpec::of(f, n)).graph; }

void expect_witness(const Graph& g, const OracleResult& r) {
  ASSERT_EQ(r.status, OracleStatus::exact);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify(g, *r.witness).is_irregular);
  EXPECT_LE(r.witness->max_label(), r.k);
}

TEST(FeasibleAt, Triangle) {
  const Graph g = test::cycle_graph(3);
  const OracleResult one = feasible_at(g, 1);
  EXPECT_EQ(one.status, OracleStatus::infeasible);
  EXPECT_FALSE(one.witness);
  EXPECT_GE(one.nodes, 1u);
  expect_witness(g, feasible_at(g, 2));
}

TEST(FeasibleAt, CompleteFour) { expect_witness(family(Family::complete, 4), feasible_at(family(Family::complete, 4), 2)); }

TEST(FeasibleAt, SingleEdge) {
  const Graph g = family(Family::path, 2);
  EXPECT_EQ(feasible_at(g, 1).status, OracleStatus::infeasible);
  expect_witness(g, feasible_at(g, 2));
}

TEST(FeasibleAt, InvalidArguments) {
  EXPECT_THROW(feasible_at(test::cycle_graph(3), 0), std::invalid_argument);
  EXPECT_THROW(feasible_at(build_graph(3, {{0, 1}}), 2), GraphError);
}

TEST(ExactTvs, Examples) {
  const Graph tri2 = generate(FamilySpec::two_regular({3, 3})).graph;
  OracleResult r = exact_tvs(tri2);
  expect_witness(tri2, r);
  EXPECT_EQ(r.k, 3);

  r = exact_tvs(family(Family::wheel, 5));
  expect_witness(family(Family::wheel, 5), r);
  EXPECT_EQ(r.k, 2);

  r = exact_tvs(family(Family::complete_bipartite, 3));
  EXPECT_EQ(r.k, 3);
}

TEST(ExactTvs, MatchesFormulaOnSmallFamilies) {
  for (Family f : kAllFamilies) {
    if (f == Family::two_regular) continue;
    for (std::size_t n = 1; n <= 6; ++n) {
      const FamilySpec spec = FamilySpec::of(f, n);
      try {
        spec.validate();
      } catch (const SpecError&) {
        continue;
      }
      const Graph g = generate(spec).graph;
      if (g.size() > 16) continue;
      const OracleResult r = exact_tvs(g);
      ASSERT_EQ(r.status, OracleStatus::exact) << spec.describe();
      EXPECT_EQ(r.k, tvs_formula(spec)) << spec.describe();
    }
  }
}

TEST(ExactTvs, SoundAndTightOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const Graph g = test::random_graph(rng, 2, 7);
    const OracleResult r = exact_tvs(g);
    expect_witness(g, r);
    EXPECT_GE(r.k, degree_count_bound(g).value);
    if (r.k > 1) {
      EXPECT_EQ(feasible_at(g, r.k - 1).status, OracleStatus::infeasible);
    }
  }
}

TEST(ExactTvs, Deterministic) {
  const Graph g = family(Family::helm, 4);
  const OracleResult a = exact_tvs(g);
  const OracleResult b = exact_tvs(g);
  EXPECT_EQ(a.k, b.k);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(ExactTvs, ParallelAgrees) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph g = test::random_graph(rng, 3, 7);
    const OracleResult s = exact_tvs(g);
    const OracleResult p = exact_tvs(g, {}, Execution::parallel);
    EXPECT_EQ(s.status, p.status);
    EXPECT_EQ(s.k, p.k);
    ASSERT_TRUE(p.witness);
    EXPECT_TRUE(verify(g, *p.witness).is_irregular);
  }
}

TEST(ExactTvs, BudgetExceeded) {
  const Graph g = family(Family::complete_bipartite, 5);
  const OracleResult r = exact_tvs(g, {10, 0});  // a witness needs at least |E| + 1 = 26 nodes
  EXPECT_EQ(r.status, OracleStatus::budget_exceeded);
  EXPECT_FALSE(r.witness);
  EXPECT_LE(r.nodes, 10u);
  EXPECT_THROW(exact_tvs(g, {0, 0}), std::invalid_argument);
}

TEST(ExactTvs, MaxKCapsTheSearch) {
  const OracleResult r = exact_tvs(family(Family::complete_bipartite, 3), {1'000'000, 2});
  EXPECT_EQ(r.status, OracleStatus::infeasible);
  EXPECT_EQ(r.k, 2);
}

TEST(Fixtures, AreTheOracleFirstWitnesses) {
  const std::pair<Family, std::size_t> cases[] = {{Family::wheel, 3}, {Family::wheel, 4}, {Family::wheel, 5},
                                                  {Family::wheel, 6}, {Family::helm, 3},  {Family::helm, 4}};
  for (const auto& [f, n] : cases) {
    const Graph g = family(f, n);
    const OracleResult r = exact_tvs(g);
    ASSERT_EQ(r.status, OracleStatus::exact);
    EXPECT_EQ(r.witness, fixture_labeling(f, n)) << family_name(f) << n;
  }
  EXPECT_FALSE(fixture_labeling(Family::wheel, 7));
}

}  // namespace
}  // namespace tvs
