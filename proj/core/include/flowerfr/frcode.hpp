#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace flowerfr {

/// Per-node packet indices, 1-based. Repeats encode multiple copies.
using NodeLists = std::vector<std::vector<std::size_t>>;

/// Fractional repetition code as an n x theta count matrix: count(i, j) is the
/// number of copies of packet P_j held by node U_i. Nodes are multisets, so a
/// count above one is representable (the Flower construction can produce it);
/// anything that talks about distinct packets uses the 0/1 support.
class FrCode {
 public:
  /// All-zero code. Throws ArgumentError unless both dimensions are >= 1.
  FrCode(std::size_t nodes, std::size_t packets);

  /// A_i(j) = multiplicity of j in lists[i-1]. Throws ArgumentError when
  /// lists.size() != nodes and RangeError for an index outside 1..packets.
  static FrCode from_node_lists(std::size_t nodes, std::size_t packets, const NodeLists& lists);

  /// Row-major counts; counts.size() must equal nodes * packets.
  static FrCode from_counts(std::size_t nodes, std::size_t packets, std::vector<unsigned> counts);

  std::size_t node_count() const noexcept { return nodes_; }
  std::size_t packet_count() const noexcept { return packets_; }

  /// 1-based; throws RangeError outside the matrix.
  unsigned count(std::size_t node, std::size_t packet) const;

  /// Canonical lists: ascending, duplicates repeated.
  NodeLists node_lists() const;

  /// Distinct packets on a node, ascending.
  std::vector<std::size_t> distinct_packets(std::size_t node) const;

  /// Total number of stored copies.
  std::size_t total() const noexcept;

  /// Number of packets stored on at least one node.
  std::size_t present_packet_count() const;

  friend bool operator==(const FrCode&, const FrCode&) = default;

 private:
  FrCode(std::size_t nodes, std::size_t packets, std::vector<unsigned> counts)
      : nodes_(nodes), packets_(packets), counts_(std::move(counts)) {}

  std::size_t nodes_;
  std::size_t packets_;
  std::vector<unsigned> counts_;
};

struct CodeParameters {
  std::vector<std::size_t> storage;      // alpha_i, row sums
  std::vector<std::size_t> replication;  // rho_j, column sums
  std::size_t max_storage = 0;           // alpha
  std::size_t max_replication = 0;       // rho
};

CodeParameters parameters(const FrCode& code);

/// sum_j A_i(j) * A_p(j). Throws ArgumentError when i == p and RangeError for
/// an index outside 1..n.
std::size_t pairwise_overlap(const FrCode& code, std::size_t i, std::size_t p);

struct OverlapWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t overlap = 0;
  std::vector<std::size_t> shared_packets;
};

struct DuplicateCopies {
  std::size_t node = 0;
  std::size_t packet = 0;
  unsigned copies = 0;
};

struct GoodnessVerdict {
  bool universally_good = true;
  /// First pair (i < p, row-major scan) whose overlap exceeds one.
  std::optional<OverlapWitness> witness;
  /// Same-node duplicates. Diagnostic only; they do not affect the verdict.
  std::vector<DuplicateCopies> duplicates;
};

/// Pairwise test: universally good iff every pair of distinct nodes has
/// overlap <= 1.
GoodnessVerdict check_universally_good(const FrCode& code);

/// Transpose: nodes and packets swap roles.
FrCode dual(const FrCode& code);

}  // namespace flowerfr
