#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "flowerfr/flower.hpp"
#include "support/fixtures.hpp"

namespace flowerfr {
namespace {

using testing::ring_spec;
using testing::overlap_spec;
using testing::periodic_spec;

// Pairs the k-th ones of x and y directly.
FrCode simulate(const FlowerSpec& s) {
  const auto xs = s.dropping.one_positions();
  const auto ys = s.selection.one_positions();
  std::vector<unsigned> counts(s.nodes * s.packets, 0);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const auto i = (xs[k] - 1) % s.nodes;
    const auto j = (ys[k] - 1) % s.packets;
    ++counts[i * s.packets + j];
  }
  return FrCode::from_counts(s.nodes, s.packets, std::move(counts));
}

std::vector<std::string> rows(const FrCode& c) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= c.node_count(); ++i) {
    std::string r;
    for (std::size_t j = 1; j <= c.packet_count(); ++j) r += static_cast<char>('0' + c.count(i, j));
    out.push_back(r);
  }
  return out;
}

TEST(Validate, OverlapSpecIsValid) {
  const auto s = overlap_spec();
  EXPECT_EQ(s.selection.weight(), 9u);
  EXPECT_EQ(s.dropping.weight(), 9u);
  EXPECT_TRUE(validate(s).empty());
}

TEST(Validate, Violations) {
  const FlowerSpec mismatch{2, 2, parse("111"), parse("11")};
  EXPECT_EQ(validate(mismatch), (std::vector<SpecViolation>{SpecViolation::kWeightMismatch}));
  const FlowerSpec light{2, 3, parse("11"), parse("11")};
  EXPECT_EQ(validate(light), (std::vector<SpecViolation>{SpecViolation::kTooFewForPackets}));
  const FlowerSpec few_nodes{3, 2, parse("11"), parse("11")};
  EXPECT_EQ(validate(few_nodes), (std::vector<SpecViolation>{SpecViolation::kTooFewForNodes}));
  const FlowerSpec empty{0, 0, parse("1"), parse("1")};
  const auto vs = validate(empty);
  EXPECT_NE(std::find(vs.begin(), vs.end(), SpecViolation::kNoNodes), vs.end());
  EXPECT_NE(std::find(vs.begin(), vs.end(), SpecViolation::kNoPackets), vs.end());
  EXPECT_FALSE(describe(SpecViolation::kWeightMismatch, mismatch).empty());
}

TEST(Construct, ThrowsOnInvalid) {
  try {
    construct({2, 2, parse("111"), parse("11")});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().size(), 1u);
  }
}

TEST(Construct, Ring) {
  const auto c = construct(ring_spec());
  EXPECT_EQ(c.code.node_lists(), (NodeLists{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}));
  const std::vector<std::pair<std::size_t, std::size_t>> cycle1 = {{1, 1}, {2, 3}, {3, 4},
                                                                    {4, 2}, {5, 4}, {6, 3}};
  for (std::size_t k = 0; k < cycle1.size(); ++k) {
    EXPECT_EQ(c.trace[k].packet, cycle1[k].first);
    EXPECT_EQ(c.trace[k].node, cycle1[k].second);
    EXPECT_EQ(c.trace[k].step, k + 1);
  }
}

TEST(Construct, OverlapSpec) {
  const auto c = construct(overlap_spec());
  EXPECT_EQ(c.code.node_lists(), (NodeLists{{2, 4}, {1, 3}, {1, 4}, {1, 2, 3}}));
  EXPECT_EQ(rows(c.code), (std::vector<std::string>{"0101", "1010", "1001", "1110"}));
  EXPECT_EQ(c.trace.size(), 9u);
}

TEST(Construct, Trivial) {
  const auto c = construct({1, 1, parse("1"), parse("1")});
  EXPECT_EQ(c.code.node_lists(), (NodeLists{{1}}));
}

TEST(StridedSums, Examples) {
  EXPECT_EQ(replication_from_selection(overlap_spec()), (std::vector<std::size_t>{3, 2, 2, 2}));
  EXPECT_EQ(storage_from_dropping(periodic_spec()), (std::vector<std::size_t>{3, 3, 2, 2}));
  EXPECT_EQ(replication_from_selection(ring_spec()), (std::vector<std::size_t>(6, 2)));
}

TEST(UniformForms, Examples) {
  EXPECT_EQ(uniform_replication(12, 6), (std::vector<std::size_t>(6, 2)));
  const FlowerSpec ones9{4, 4, BitSeq::ones(9), BitSeq::ones(9)};
  EXPECT_EQ(uniform_replication(9, 4), replication_from_selection(ones9));
  EXPECT_EQ(uniform_replication(9, 4), (std::vector<std::size_t>{3, 2, 2, 2}));
  EXPECT_EQ(uniform_replication(5, 5), (std::vector<std::size_t>(5, 1)));
  EXPECT_EQ(uniform_storage(10, 4), (std::vector<std::size_t>{3, 3, 2, 2}));
  EXPECT_THROW(uniform_replication(3, 0), ArgumentError);
}

TEST(IncidenceCounts, Examples) {
  EXPECT_EQ(rows(incidence_counts(overlap_spec())),
            (std::vector<std::string>{"0101", "1010", "1001", "1110"}));
  EXPECT_EQ(rows(incidence_counts({1, 1, parse("1"), parse("1")})), (std::vector<std::string>{"1"}));
  const auto periodic = incidence_counts(periodic_spec());
  EXPECT_EQ(periodic.count(1, 4), simulate(periodic_spec()).count(1, 4));
  EXPECT_EQ(periodic.count(1, 4), 2u);
}

TEST(DuplicatePlacements, PeriodicBlock) {
  const auto d = duplicate_placements(periodic_spec());
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].node, 1u);
  EXPECT_EQ(d[0].packet, 4u);
  EXPECT_EQ(d[0].first.step, 4u);
  EXPECT_EQ(d[0].first.drop_position, 5u);
  EXPECT_EQ(d[0].second.step, 9u);
  EXPECT_EQ(d[0].second.drop_position, 13u);
  EXPECT_EQ((d[0].second.drop_position - d[0].first.drop_position) % 4, 0u);
  EXPECT_EQ((d[0].second.select_position - d[0].first.select_position) % 5, 0u);
  EXPECT_EQ(d[1].node, 2u);
  EXPECT_EQ(d[1].packet, 2u);
  EXPECT_EQ(d[1].first.drop_position, 2u);
  EXPECT_EQ(d[1].second.drop_position, 10u);
  EXPECT_EQ(simulate(periodic_spec()).count(2, 2), 2u);
}

TEST(DuplicatePlacements, OverlapSpecNone) {
  EXPECT_TRUE(duplicate_placements(overlap_spec()).empty());
}

TEST(DuplicatePlacements, TinyRingAllAlign) {
  const auto d = duplicate_placements({2, 2, BitSeq::ones(4), BitSeq::ones(4)});
  ASSERT_EQ(d.size(), 2u);
  for (const auto& dup : d) EXPECT_EQ(dup.second.step - dup.first.step, 2u);
}

TEST(DualSpec, OverlapSpec) {
  const auto d = dual_spec(overlap_spec());
  EXPECT_EQ(d.nodes, 4u);
  EXPECT_EQ(d.packets, 4u);
  EXPECT_EQ(d.dropping.to_string(), "0100100010110101101");
  EXPECT_EQ(d.selection.to_string(), "101101111101");
  EXPECT_EQ(dual_spec(d), overlap_spec());
  EXPECT_EQ(construct(d).code, dual(construct(overlap_spec()).code));
}

TEST(Periodic, PeriodicBlock) {
  const auto p = periodic_construction(4, 5, parse("110"));
  EXPECT_EQ(p.period, 3u);
  EXPECT_EQ(p.length, 15u);
  EXPECT_EQ(p.spec.dropping.to_string(), "110110110110110");
  EXPECT_EQ(p.spec.selection, BitSeq::ones(10));
  ASSERT_TRUE(p.construction.has_value());
  EXPECT_EQ(parameters(p.construction->code).storage, (std::vector<std::size_t>{3, 3, 2, 2}));
  EXPECT_EQ(p.construction->code.count(1, 4), 2u);
  ASSERT_EQ(p.duplicates.size(), 2u);
  EXPECT_EQ(p.duplicates[0].packet, 4u);
  EXPECT_EQ(p.duplicates[0].node, 1u);
  EXPECT_EQ(p.verdict.duplicates.size(), 2u);
  EXPECT_TRUE(p.verdict.universally_good);
}

TEST(Periodic, PlainRing) {
  const auto p = periodic_construction(2, 3, parse("1"));
  EXPECT_EQ(p.length, 6u);
  EXPECT_EQ(p.spec.dropping, BitSeq::ones(6));
  ASSERT_TRUE(p.construction.has_value());
  EXPECT_TRUE(p.violations.empty());
}

TEST(Periodic, HypothesisErrors) {
  EXPECT_THROW(periodic_construction(4, 5, parse("000")), ArgumentError);
  EXPECT_THROW(periodic_construction(4, 5, parse("1101")), ArgumentError);  // tau >= n
  EXPECT_THROW(periodic_construction(5, 4, parse("1")), ArgumentError);     // n >= theta
  EXPECT_THROW(periodic_construction(3, 6, parse("1")), ArgumentError);     // gcd(n, theta) > 1
  EXPECT_THROW(periodic_construction(4, 7, parse("10")), ArgumentError);    // gcd(n, tau) > 1
}

TEST(FromFrcode, RoundTrips) {
  const auto t = testing::sample_code();
  EXPECT_EQ(construct(from_frcode(t)).code, t);
  const auto single = from_frcode(FrCode::from_node_lists(1, 1, {{1}}));
  EXPECT_EQ(single.dropping.to_string(), "1");
  EXPECT_EQ(single.selection.to_string(), "1");
  const auto f2 = testing::overlap_code();
  EXPECT_EQ(rows(construct(from_frcode(f2)).code),
            (std::vector<std::string>{"0101", "1010", "1001", "1110"}));
}

TEST(FromFrcode, Errors) {
  EXPECT_THROW(from_frcode(FrCode(2, 2)), ArgumentError);
  EXPECT_THROW(from_frcode(FrCode::from_node_lists(1, 3, {{1}})), ArgumentError);
}

TEST(FlowerProperty, FormulasMatchSimulation) {
  std::mt19937_64 rng(401);
  for (int iter = 0; iter < 3000; ++iter) {
    const auto s = testing::random_valid_spec(rng);
    const auto sim = simulate(s);
    const auto built = construct(s);
    ASSERT_EQ(built.code, sim);
    ASSERT_EQ(incidence_counts(s), sim);
    const auto p = parameters(sim);
    EXPECT_EQ(storage_from_dropping(s), p.storage);
    EXPECT_EQ(replication_from_selection(s), p.replication);
    EXPECT_EQ(construct(dual_spec(s)).code, dual(sim));
    EXPECT_EQ(duplicate_placements(s).empty(), check_universally_good(sim).duplicates.empty());
  }
}

TEST(FlowerProperty, UniformFormsBalanced) {
  for (std::size_t w = 1; w <= 40; ++w) {
    for (std::size_t t = 1; t <= 12; ++t) {
      const auto r = uniform_replication(w, t);
      EXPECT_EQ(std::accumulate(r.begin(), r.end(), std::size_t{0}), w);
      const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
      EXPECT_LE(*hi - *lo, 1u);
      EXPECT_EQ(r, uniform_storage(w, t));
    }
  }
}

TEST(FlowerProperty, FromFrcodeRoundTrip) {
  std::mt19937_64 rng(402);
  int checked = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    const auto c = testing::random_code(rng, 6, 6, 2, 0.5);
    if (c.total() < std::max(c.node_count(), c.packet_count())) continue;
    ++checked;
    const auto s = from_frcode(c);
    EXPECT_TRUE(validate(s).empty());
    EXPECT_EQ(construct(s).code, c);
  }
  EXPECT_GT(checked, 500);
}

}  // namespace
}  // namespace flowerfr
