#include <gtest/gtest.h>

#include <random>

#include "flowerfr/repair.hpp"
#include "support/fixtures.hpp"

namespace flowerfr {
namespace {

using testing::sample_code;

// Smallest number of other nodes whose supports cover the failed node's packets.
std::size_t naive_min_cover(const FrCode& c, std::size_t f) {
  const auto need = c.distinct_packets(f);
  const std::size_t n = c.node_count();
  std::size_t best = SIZE_MAX;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (mask & (1u << (f - 1))) continue;
    bool covered = true;
    for (auto j : need) {
      bool any = false;
      for (std::size_t i = 1; i <= n && !any; ++i) any = (mask & (1u << (i - 1))) && c.count(i, j);
      covered = covered && any;
    }
    if (covered) best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

TEST(PlanRepair, SampleNode1) {
  const auto p = plan_repair(sample_code(), 1);
  EXPECT_EQ(p.helpers, (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(p.repair_degree, 3u);
  EXPECT_EQ(p.bandwidth, 3u);
  EXPECT_FALSE(p.approximate);
  ASSERT_EQ(p.assignments.size(), 3u);
  EXPECT_EQ(p.assignments[0].packet, 1u);
  EXPECT_EQ(p.assignments[0].helper, 2u);
  EXPECT_EQ(p.assignments[1].packet, 2u);
  EXPECT_EQ(p.assignments[1].helper, 3u);
  EXPECT_EQ(p.assignments[2].packet, 3u);
  EXPECT_EQ(p.assignments[2].helper, 4u);
}

TEST(PlanRepair, SampleNode3) {
  const auto p = plan_repair(sample_code(), 3);
  EXPECT_EQ(p.repair_degree, naive_min_cover(sample_code(), 3));
  EXPECT_EQ(p.helpers, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(p.bandwidth, 2u);
  ASSERT_EQ(p.assignments.size(), 2u);
  EXPECT_EQ(p.assignments[0].packet, 2u);
  EXPECT_EQ(p.assignments[0].helper, 1u);
  EXPECT_EQ(p.assignments[1].packet, 4u);
  EXPECT_EQ(p.assignments[1].helper, 2u);
}

TEST(PlanRepair, Irreparable) {
  const auto c = FrCode::from_node_lists(2, 2, {{1}, {2}});
  try {
    plan_repair(c, 1);
    FAIL() << "expected IrreparableError";
  } catch (const IrreparableError& e) {
    EXPECT_EQ(e.node(), 1u);
    EXPECT_EQ(e.lost_packets(), (std::vector<std::size_t>{1}));
  }
  EXPECT_THROW(plan_repair(c, 3), RangeError);
}

TEST(PlanRepair, DuplicatesNoted) {
  const auto c = FrCode::from_node_lists(2, 1, {{1, 1}, {1}});
  const auto p = plan_repair(c, 1);
  EXPECT_EQ(p.duplicated_packets, (std::vector<std::size_t>{1}));
  EXPECT_EQ(p.bandwidth, 1u);
}

TEST(PlanRepair, GreedyAboveLimit) {
  const auto p = plan_repair(sample_code(), 1, RepairOptions{2});
  EXPECT_TRUE(p.approximate);
  EXPECT_EQ(p.repair_degree, greedy_cover_size(sample_code(), 1));
  EXPECT_GE(p.repair_degree, 3u);
}

TEST(Repairability, Sample) {
  const auto r = repairability(sample_code());
  EXPECT_TRUE(r.all_repairable);
  EXPECT_EQ(r.max_repair_degree, 3u);
  ASSERT_EQ(r.nodes.size(), 4u);
  const std::size_t expected[] = {3, 3, 2, 2};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r.nodes[i].repair_degree, expected[i]);
}

TEST(Repairability, SingleHolderFlagged) {
  const auto r = repairability(FrCode::from_node_lists(3, 2, {{1, 2}, {1}, {1}}));
  EXPECT_FALSE(r.all_repairable);
  EXPECT_FALSE(r.nodes[0].repairable);
  EXPECT_EQ(r.nodes[0].lost_packets, (std::vector<std::size_t>{2}));
  EXPECT_TRUE(r.nodes[1].repairable);
}

TEST(Repairability, SingleNode) {
  const auto r = repairability(FrCode::from_node_lists(1, 1, {{1}}));
  EXPECT_FALSE(r.all_repairable);
  EXPECT_FALSE(r.nodes[0].repairable);
}

TEST(RepairProperty, ExactCoverIsMinimumAndValid) {
  std::mt19937_64 rng(601);
  for (int iter = 0; iter < 1000; ++iter) {
    const auto c = testing::random_code(rng, 7, 6, 1, 0.5);
    for (std::size_t f = 1; f <= c.node_count(); ++f) {
      const auto best = naive_min_cover(c, f);
      if (best == SIZE_MAX) {
        EXPECT_THROW(plan_repair(c, f), IrreparableError);
        continue;
      }
      const auto p = plan_repair(c, f);
      EXPECT_EQ(p.repair_degree, best);
      EXPECT_EQ(p.bandwidth, c.distinct_packets(f).size());
      EXPECT_GE(greedy_cover_size(c, f), best);
      for (const auto& a : p.assignments) {
        EXPECT_NE(a.helper, f);
        EXPECT_GE(c.count(a.helper, a.packet), 1u);
        EXPECT_TRUE(std::binary_search(p.helpers.begin(), p.helpers.end(), a.helper));
      }
    }
  }
}

}  // namespace
}  // namespace flowerfr
