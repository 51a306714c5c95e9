#include <gtest/gtest.h>

#include "flowerfr/io.hpp"
#include "support/fixtures.hpp"

namespace flowerfr {
namespace {

TEST(IoCode, RoundTrip) {
  const auto t = testing::sample_code();
  const auto j = io::to_json(t);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["theta"], 5);
  EXPECT_EQ(io::code_from_json(j), t);
}

TEST(IoSpec, RoundTrip) {
  const auto s = testing::overlap_spec();
  EXPECT_EQ(io::spec_from_json(io::to_json(s)), s);
}

TEST(IoSpec, MissingSequenceDefaultsToOnes) {
  const auto s = io::spec_from_json(nlohmann::json::parse(
      R"({"n":4,"theta":6,"x":"1011010100100100100010100101"})"));
  EXPECT_EQ(s.selection, BitSeq::ones(12));
  const auto t = io::spec_from_json(nlohmann::json::parse(R"({"n":2,"theta":2,"y":"0101"})"));
  EXPECT_EQ(t.dropping, BitSeq::ones(2));
}

TEST(IoSpec, AcceptsNotation) {
  const auto s = io::spec_from_json(nlohmann::json::parse(R"({"n":4,"theta":5,"x":"(110)^5"})"));
  EXPECT_EQ(s.dropping.to_string(), "110110110110110");
}

TEST(IoDocument, DetectsKind) {
  const auto a = io::parse_document(R"({"n":4,"theta":5,"nodes":[[1,2,3],[1,4,5],[2,4],[3,5]]})");
  EXPECT_TRUE(std::holds_alternative<FrCode>(a));
  const auto b = io::parse_document(R"({"n":1,"theta":1,"x":"1","y":"1"})");
  EXPECT_TRUE(std::holds_alternative<FlowerSpec>(b));
}

TEST(IoDocument, Errors) {
  EXPECT_THROW(io::parse_document("{"), io::FormatError);
  EXPECT_THROW(io::parse_document("[]"), io::FormatError);
  EXPECT_THROW(io::parse_document(R"({"n":1,"theta":1})"), io::FormatError);
  EXPECT_THROW(io::parse_document(R"({"n":0,"theta":1,"x":"1"})"), io::FormatError);
  EXPECT_THROW(io::parse_document(R"({"n":1,"theta":1,"nodes":[[0]]})"), io::FormatError);
  EXPECT_THROW(io::parse_document(R"({"n":1,"theta":1,"x":"12"})"), ParseError);
}

TEST(IoTrace, TextAndJson) {
  const auto c = construct(testing::overlap_spec());
  const auto text = io::trace_to_text(c.trace);
  EXPECT_EQ(text.rfind("#k\tm\tr\ti\tj\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 10);
  const auto j = io::to_json(c.trace);
  ASSERT_EQ(j.size(), 9u);
}

TEST(IoReports, VerdictAndRepair) {
  const auto v = io::to_json(check_universally_good(testing::overlap_code()));
  EXPECT_EQ(v["universally_good"], false);
  EXPECT_TRUE(v.contains("same_node_duplicates"));
  const auto r = io::to_json(plan_repair(testing::sample_code(), 1));
  EXPECT_EQ(r["repair_degree"], 3);
  EXPECT_EQ(r["bandwidth"], 3);
}

}  // namespace
}  // namespace flowerfr
