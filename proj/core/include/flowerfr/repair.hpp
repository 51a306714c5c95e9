#pragma once

#include <cstddef>
#include <vector>

#include "flowerfr/errors.hpp"
#include "flowerfr/frcode.hpp"

namespace flowerfr {

struct RepairOptions {
  /// Exhaustive minimum set cover up to this many nodes; greedy beyond.
  std::size_t exact_node_limit = 24;
};

struct RepairAssignment {
  std::size_t packet = 0;
  std::size_t helper = 0;
};

/// Repair-by-transfer plan: one packet per transfer, so bandwidth is the
/// number of distinct packets lost with the failed node.
struct RepairPlan {
  std::size_t failed_node = 0;
  std::vector<RepairAssignment> assignments;   // ascending by packet
  std::vector<std::size_t> helpers;            // ascending
  std::size_t repair_degree = 0;               // helpers.size()
  std::size_t bandwidth = 0;
  bool approximate = false;                    // greedy cover was used
  std::vector<std::size_t> duplicated_packets; // held more than once on the failed node
};

class IrreparableError : public Error {
 public:
  IrreparableError(std::size_t node, std::vector<std::size_t> lost);
  std::size_t node() const noexcept { return node_; }
  const std::vector<std::size_t>& lost_packets() const noexcept { return lost_; }

 private:
  std::size_t node_;
  std::vector<std::size_t> lost_;
};

/// Picks the fewest surviving helpers that together hold every distinct packet
/// of the failed node; among minimum covers, the lexicographically smallest
/// helper set wins, and each packet comes from the lowest-indexed helper that
/// holds it. Throws RangeError for a bad node index and IrreparableError when
/// some packet has no other holder.
RepairPlan plan_repair(const FrCode& code, std::size_t failed_node, RepairOptions options = {});

/// Cover size the greedy heuristic reaches (largest uncovered gain, lowest
/// index on ties). Same errors as plan_repair.
std::size_t greedy_cover_size(const FrCode& code, std::size_t failed_node);

struct NodeRepairability {
  std::size_t node = 0;
  bool repairable = false;
  std::size_t repair_degree = 0;
  std::size_t bandwidth = 0;
  std::vector<std::size_t> lost_packets;  // packets with no other holder
};

struct RepairabilityReport {
  std::vector<NodeRepairability> nodes;
  /// d = max d_i over repairable nodes.
  std::size_t max_repair_degree = 0;
  bool all_repairable = true;
};

RepairabilityReport repairability(const FrCode& code, RepairOptions options = {});

}  // namespace flowerfr
