#include "flowerfr/frcode.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "flowerfr/errors.hpp"

namespace flowerfr {

namespace {

void require_dimensions(std::size_t nodes, std::size_t packets) {
  if (nodes == 0 || packets == 0) {
    throw ArgumentError("an FR code needs at least one node and one packet (got n=" +
                        std::to_string(nodes) + ", theta=" + std::to_string(packets) + ")");
  }
}

void require_node(const FrCode& code, std::size_t node) {
  if (node < 1 || node > code.node_count()) {
    throw RangeError("node index " + std::to_string(node) + " outside 1.." +
                     std::to_string(code.node_count()));
  }
}

}  // namespace

FrCode::FrCode(std::size_t nodes, std::size_t packets) : nodes_(nodes), packets_(packets) {
  require_dimensions(nodes, packets);
  counts_.assign(nodes * packets, 0);
}

FrCode FrCode::from_node_lists(std::size_t nodes, std::size_t packets, const NodeLists& lists) {
  require_dimensions(nodes, packets);
  if (lists.size() != nodes) {
    throw ArgumentError("expected " + std::to_string(nodes) + " node lists, got " +
                        std::to_string(lists.size()));
  }
  std::vector<unsigned> counts(nodes * packets, 0);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j : lists[i]) {
      if (j < 1 || j > packets) {
        throw RangeError("node " + std::to_string(i + 1) + " lists packet " + std::to_string(j) +
                         " outside 1.." + std::to_string(packets));
      }
      ++counts[i * packets + (j - 1)];
    }
  }
  return FrCode(nodes, packets, std::move(counts));
}

FrCode FrCode::from_counts(std::size_t nodes, std::size_t packets, std::vector<unsigned> counts) {
  require_dimensions(nodes, packets);
  if (counts.size() != nodes * packets) {
    throw ArgumentError("count matrix has " + std::to_string(counts.size()) +
                        " entries, expected " + std::to_string(nodes * packets));
  }
  return FrCode(nodes, packets, std::move(counts));
}

unsigned FrCode::count(std::size_t node, std::size_t packet) const {
  require_node(*this, node);
  if (packet < 1 || packet > packets_) {
    throw RangeError("packet index " + std::to_string(packet) + " outside 1.." +
                     std::to_string(packets_));
  }
  return counts_[(node - 1) * packets_ + (packet - 1)];
}

NodeLists FrCode::node_lists() const {
  NodeLists lists(nodes_);
  for (std::size_t i = 0; i < nodes_; ++i) {
    for (std::size_t j = 0; j < packets_; ++j) {
      lists[i].insert(lists[i].end(), counts_[i * packets_ + j], j + 1);
    }
  }
  return lists;
}

std::vector<std::size_t> FrCode::distinct_packets(std::size_t node) const {
  require_node(*this, node);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < packets_; ++j) {
    if (counts_[(node - 1) * packets_ + j] > 0) out.push_back(j + 1);
  }
  return out;
}

std::size_t FrCode::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t FrCode::present_packet_count() const {
  std::size_t present = 0;
  for (std::size_t j = 0; j < packets_; ++j) {
    for (std::size_t i = 0; i < nodes_; ++i) {
      if (counts_[i * packets_ + j] > 0) {
        ++present;
        break;
      }
    }
  }
  return present;
}

CodeParameters parameters(const FrCode& code) {
  CodeParameters params;
  params.storage.assign(code.node_count(), 0);
  params.replication.assign(code.packet_count(), 0);
  for (std::size_t i = 1; i <= code.node_count(); ++i) {
    for (std::size_t j = 1; j <= code.packet_count(); ++j) {
      const unsigned c = code.count(i, j);
      params.storage[i - 1] += c;
      params.replication[j - 1] += c;
    }
  }
  params.max_storage = *std::max_element(params.storage.begin(), params.storage.end());
  params.max_replication = *std::max_element(params.replication.begin(), params.replication.end());
  return params;
}

std::size_t pairwise_overlap(const FrCode& code, std::size_t i, std::size_t p) {
  require_node(code, i);
  require_node(code, p);
  if (i == p) throw ArgumentError("pairwise overlap needs two distinct nodes");
  std::size_t sum = 0;
  for (std::size_t j = 1; j <= code.packet_count(); ++j) {
    sum += std::size_t{code.count(i, j)} * code.count(p, j);
  }
  return sum;
}

GoodnessVerdict check_universally_good(const FrCode& code) {
  GoodnessVerdict verdict;
  const std::size_t n = code.node_count();
  for (std::size_t i = 1; i <= n && !verdict.witness; ++i) {
    for (std::size_t p = i + 1; p <= n; ++p) {
      const std::size_t overlap = pairwise_overlap(code, i, p);
      if (overlap <= 1) continue;
      OverlapWitness w{i, p, overlap, {}};
      for (std::size_t j = 1; j <= code.packet_count(); ++j) {
        if (code.count(i, j) > 0 && code.count(p, j) > 0) w.shared_packets.push_back(j);
      }
      verdict.universally_good = false;
      verdict.witness = std::move(w);
      break;
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= code.packet_count(); ++j) {
      if (const unsigned c = code.count(i, j); c >= 2) verdict.duplicates.push_back({i, j, c});
    }
  }
  return verdict;
}

FrCode dual(const FrCode& code) {
  const std::size_t n = code.node_count();
  const std::size_t theta = code.packet_count();
  std::vector<unsigned> counts(n * theta);
  for (std::size_t j = 1; j <= theta; ++j) {
    for (std::size_t i = 1; i <= n; ++i) counts[(j - 1) * n + (i - 1)] = code.count(i, j);
  }
  return FrCode::from_counts(theta, n, std::move(counts));
}

}  // namespace flowerfr
