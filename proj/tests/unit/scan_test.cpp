#include <gtest/gtest.h>

#include <sstream>

#include "longcycle/error.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/scan.hpp"
#include "longcycle/serialize.hpp"
#include "longcycle/spectral.hpp"

namespace longcycle {
namespace {

TEST(CycleConstraintTest, ParseAndFormat) {
  EXPECT_EQ(CycleConstraint::parse("atleast:5"), CycleConstraint::at_least(5));
  EXPECT_EQ(CycleConstraint::parse("exactly:4"), CycleConstraint::exactly(4));
  EXPECT_EQ(CycleConstraint::parse("window:4:6"), CycleConstraint::window(4, 6));
  EXPECT_EQ(CycleConstraint::window(4, 6).to_string(), "window:4:6");
  EXPECT_EQ(CycleConstraint::at_least(7).to_string(), "atleast:7");
  EXPECT_FALSE(CycleConstraint::at_least(7).hi().has_value());
  for (const char* bad : {"", "atleast", "atleast:2", "atleast:x", "window:5", "window:6:5", "most:4",
                          "atleast:5:6"}) {
    EXPECT_THROW(CycleConstraint::parse(bad), DomainError) << bad;
  }
}

TEST(CycleConstraintTest, IsFree) {
  const Graph c5 = cycle_graph(5);
  EXPECT_FALSE(CycleConstraint::at_least(5).is_free(c5));
  EXPECT_TRUE(CycleConstraint::at_least(6).is_free(c5));
  EXPECT_TRUE(CycleConstraint::exactly(4).is_free(c5));
  EXPECT_FALSE(CycleConstraint::window(3, 5).is_free(c5));
  const Graph k5 = complete_graph(5);
  EXPECT_FALSE(CycleConstraint::exactly(4).is_free(k5));
  EXPECT_TRUE(CycleConstraint::window(6, 9).is_free(k5));
}

TEST(TargetTest, Parse) {
  EXPECT_EQ(parse_target("snk"), TargetKind::Snk);
  EXPECT_EQ(parse_target("snkp"), TargetKind::SnkPlus);
  EXPECT_THROW(parse_target("snk+"), DomainError);
  EXPECT_EQ(target_graph(TargetKind::SnkPlus, 7, 2), construct_snk_plus(7, 2));
}

ScanReport scan_all(int n, int k, const char* constraint, TargetKind target, int jobs) {
  ScanOptions opt;
  opt.jobs = jobs;
  opt.batch_size = 1000;
  return scan_extremal(enumeration_stream(n), n, k, CycleConstraint::parse(constraint), target, opt);
}

// Maximum mu and maximizer counts frozen from a networkx/numpy scan.
TEST(ScanTest, SixVerticesNoLongCycle) {
  const auto r = scan_all(6, 2, "atleast:5", TargetKind::Snk, 2);
  EXPECT_EQ(r.count_scanned, 32768U);
  EXPECT_EQ(r.count_free, 13582U);
  ASSERT_EQ(r.maximizers.size(), 15U);
  EXPECT_NEAR(r.maximizers.front().mu, 3.3722813232690143, 1e-10);
  EXPECT_EQ(r.maximizers[0].graph6, "E?~w");
  EXPECT_EQ(r.maximizers[1].graph6, "EFFw");
  EXPECT_EQ(r.maximizers[2].graph6, "EF{W");
  EXPECT_NEAR(r.mu_target, 3.3722813232690143, 1e-10);
  EXPECT_TRUE(r.target_free);
  EXPECT_EQ(r.verdict, ScanVerdict::TargetIsUniqueMax);
  EXPECT_TRUE(r.complete);
}

TEST(ScanTest, SixVerticesNoHamiltonCycle) {
  const auto r = scan_all(6, 2, "atleast:6", TargetKind::SnkPlus, 3);
  EXPECT_EQ(r.count_free, 22690U);
  ASSERT_EQ(r.maximizers.size(), 30U);
  EXPECT_NEAR(r.maximizers.front().mu, 4.051374241731036, 1e-10);
  EXPECT_EQ(r.maximizers[0].graph6, "EJ^w");
  EXPECT_EQ(r.maximizers[1].graph6, "EJ|w");
  EXPECT_EQ(r.maximizers[2].graph6, "EN\\w");
  EXPECT_EQ(r.verdict, ScanVerdict::TargetBeaten);
}

TEST(ScanTest, FiveVertices) {
  const auto r = scan_all(5, 2, "atleast:5", TargetKind::Snk, 1);
  EXPECT_EQ(r.count_free, 806U);
  EXPECT_EQ(r.maximizers.size(), 20U);
  EXPECT_NEAR(r.maximizers.front().mu, 3.086130197651494, 1e-10);
  EXPECT_NEAR(r.mu_target, 3.0, 1e-12);
  EXPECT_EQ(r.verdict, ScanVerdict::TargetBeaten);
}

TEST(ScanTest, OutputIndependentOfWorkerCount) {
  auto render = [](int jobs) {
    ScanOptions opt;
    opt.jobs = jobs;
    opt.batch_size = 777;
    opt.keep_free_records = true;
    const auto r = scan_extremal(enumeration_stream(6), 6, 2, CycleConstraint::at_least(5),
                                 TargetKind::Snk, opt);
    std::ostringstream out;
    write_scan_jsonl(out, r);
    return out.str();
  };
  const std::string one = render(1);
  EXPECT_EQ(one, render(4));
  EXPECT_EQ(one, render(7));
  EXPECT_EQ(one, render(1));
}

TEST(ScanTest, SingleGraphCorpus) {
  const auto r = scan_extremal(corpus_stream({construct_snk_plus(7, 2)}), 7, 2,
                               CycleConstraint::at_least(6), TargetKind::SnkPlus);
  EXPECT_EQ(r.count_scanned, 1U);
  EXPECT_EQ(r.count_free, 1U);
  ASSERT_EQ(r.maximizers.size(), 1U);
  EXPECT_TRUE(r.maximizers[0].is_target);
  EXPECT_EQ(r.verdict, ScanVerdict::TargetIsUniqueMax);
}

TEST(ScanTest, TargetNotFree) {
  const auto r = scan_extremal(corpus_stream({path_graph(7)}), 7, 2, CycleConstraint::at_least(5),
                               TargetKind::SnkPlus);
  EXPECT_FALSE(r.target_free);
  EXPECT_EQ(r.verdict, ScanVerdict::TargetNotFree);
}

TEST(ScanTest, MixedOrdersRejected) {
  EXPECT_THROW(scan_extremal(corpus_stream({path_graph(6), path_graph(7)}), 6, 2,
                             CycleConstraint::at_least(5), TargetKind::Snk),
               DomainError);
}

TEST(ScanTest, BudgetFailuresAreReported) {
  ScanOptions opt;
  opt.budget.max_expansions = 3;
  const auto r = scan_extremal(corpus_stream({complete_graph(12), path_graph(12)}), 12, 2,
                               CycleConstraint::window(11, 11), TargetKind::Snk, opt);
  EXPECT_FALSE(r.complete);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front().index, 0U);
}

}  // namespace
}  // namespace longcycle

namespace longcycle {
namespace {

TEST(RecheckFreeTest, AgreesAboveAndBelowTableLimit) {
  Rng rng(505);
  for (int i = 0; i < 60; ++i) {
    const int n = uniform_int(rng, 8, 20);
    const Graph g = random_graph(rng, n, 0.12);
    for (const auto& c : {CycleConstraint::at_least(6), CycleConstraint::window(4, 5), CycleConstraint::exactly(7)})
      EXPECT_EQ(recheck_free(g, c), c.is_free(g)) << emit_graph6(g) << " " << c.to_string();
  }
}

}  // namespace
}  // namespace longcycle
