#include <gtest/gtest.h>

#include <cmath>

#include "longcycle/error.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/search.hpp"
#include "longcycle/spectral.hpp"

namespace longcycle {
namespace {

TEST(HillClimbTest, SeedReplays) {
  const auto c = CycleConstraint::at_least(5);
  const auto a = hillclimb_search(10, 2, c, 7, 3000);
  const auto b = hillclimb_search(10, 2, c, 7, 3000);
  EXPECT_EQ(a.best.graph6, b.best.graph6);
  EXPECT_EQ(a.best.mu, b.best.mu);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.restarts, b.restarts);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    EXPECT_EQ(a.history[i].u, b.history[i].u);
    EXPECT_EQ(a.history[i].v, b.history[i].v);
    EXPECT_EQ(a.history[i].mu, b.history[i].mu);
  }
}

TEST(HillClimbTest, TenVerticesStaysBelowTarget) {
  const auto c = CycleConstraint::at_least(5);
  const auto r = hillclimb_search(10, 2, c, 1, 10000);
  EXPECT_EQ(r.evaluations, 10000U);
  EXPECT_NEAR(r.mu_target, 4.531128874149274, 1e-12);
  EXPECT_LE(r.best.mu, r.mu_target + 1e-9);
  const Graph best = parse_graph6(r.best.graph6);
  EXPECT_TRUE(c.is_free(best));
  EXPECT_NEAR(spectral_radius(best).mu, r.best.mu, 1e-12);
  EXPECT_EQ(r.best.is_target, is_snk(best, 2));
  EXPECT_EQ(r.skipped, 0U);
  // Golden for this seed: a vertex joined to three triangles, mu = 1 + sqrt(10).
  EXPECT_EQ(r.best.graph6, "Ie?NxCbB_");
  EXPECT_NEAR(r.best.mu, 1 + std::sqrt(10.0), 1e-12);
  EXPECT_EQ(r.restarts, 41);
}

TEST(HillClimbTest, HistoryIsMonotoneWithinEachClimb) {
  const auto r = hillclimb_search(9, 1, CycleConstraint::window(4, 6), 11, 2000);
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    if (r.history[i].restart == r.history[i - 1].restart) {
      EXPECT_GT(r.history[i].mu, r.history[i - 1].mu);
      EXPECT_EQ(r.history[i].step, r.history[i - 1].step + 1);
    } else {
      EXPECT_EQ(r.history[i].step, 0);
    }
  }
}

TEST(HillClimbTest, EdgeCases) {
  const auto zero = hillclimb_search(6, 2, CycleConstraint::at_least(5), 3, 0);
  EXPECT_EQ(zero.evaluations, 0U);
  EXPECT_EQ(parse_graph6(zero.best.graph6).edge_count(), 5);
  // Every addition is free, so each climb ends complete.
  const auto k4 = hillclimb_search(4, 1, CycleConstraint::at_least(5), 3, 100);
  EXPECT_EQ(parse_graph6(k4.best.graph6), complete_graph(4));
  EXPECT_THROW(hillclimb_search(1, 1, CycleConstraint::at_least(3), 0, 10), DomainError);
  EXPECT_THROW(hillclimb_search(63, 2, CycleConstraint::at_least(3), 0, 10), DomainError);
  EXPECT_THROW(hillclimb_search(6, 6, CycleConstraint::at_least(3), 0, 10), DomainError);
}

}  // namespace
}  // namespace longcycle
