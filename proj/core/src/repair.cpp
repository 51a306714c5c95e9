#include "flowerfr/repair.hpp"

#include <algorithm>
#include <string>

namespace flowerfr {

namespace {

std::string list_to_string(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t x : v) out += (out.empty() ? "P" : ", P") + std::to_string(x);
  return out;
}

struct CoverProblem {
  std::vector<std::size_t> needed;                   // distinct packets of the failed node
  std::vector<std::size_t> candidates;               // surviving nodes holding any of them
  std::vector<std::vector<bool>> holds;              // holds[c][q]: candidate c has needed[q]
  std::vector<std::size_t> lost;
};

CoverProblem cover_problem(const FrCode& code, std::size_t failed) {
  if (failed < 1 || failed > code.node_count()) {
    throw RangeError("failed node " + std::to_string(failed) + " outside 1.." +
                     std::to_string(code.node_count()));
  }
  CoverProblem cp;
  cp.needed = code.distinct_packets(failed);
  for (std::size_t u = 1; u <= code.node_count(); ++u) {
    if (u == failed) continue;
    std::vector<bool> row(cp.needed.size());
    bool any = false;
    for (std::size_t q = 0; q < cp.needed.size(); ++q) {
      row[q] = code.count(u, cp.needed[q]) > 0;
      any = any || row[q];
    }
    if (any) {
      cp.candidates.push_back(u);
      cp.holds.push_back(std::move(row));
    }
  }
  for (std::size_t q = 0; q < cp.needed.size(); ++q) {
    const bool held = std::any_of(cp.holds.begin(), cp.holds.end(),
                                  [q](const std::vector<bool>& r) { return r[q]; });
    if (!held) cp.lost.push_back(cp.needed[q]);
  }
  return cp;
}

bool covers(const CoverProblem& cp, const std::vector<std::size_t>& pick) {
  for (std::size_t q = 0; q < cp.needed.size(); ++q) {
    bool hit = false;
    for (std::size_t c : pick) hit = hit || cp.holds[c][q];
    if (!hit) return false;
  }
  return true;
}

// Smallest cover; combinations of each size are visited in lexicographic
// order, so the first hit is also the lexicographically smallest.
std::vector<std::size_t> exact_cover(const CoverProblem& cp) {
  const std::size_t c = cp.candidates.size();
  for (std::size_t size = 0; size <= c; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t s = 0; s < size; ++s) pick[s] = s;
    for (;;) {
      if (covers(cp, pick)) return pick;
      std::size_t s = size;
      while (s > 0 && pick[s - 1] == c - size + (s - 1)) --s;
      if (s == 0) break;
      ++pick[s - 1];
      for (std::size_t t = s; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return {};  // unreachable once lost packets are excluded
}

std::vector<std::size_t> greedy_cover(const CoverProblem& cp) {
  std::vector<bool> done(cp.needed.size(), false);
  std::size_t remaining = cp.needed.size();
  std::vector<std::size_t> pick;
  while (remaining > 0) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < cp.candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t q = 0; q < cp.needed.size(); ++q) gain += (!done[q] && cp.holds[c][q]);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    pick.push_back(best);
    for (std::size_t q = 0; q < cp.needed.size(); ++q) {
      if (!done[q] && cp.holds[best][q]) {
        done[q] = true;
        --remaining;
      }
    }
  }
  std::sort(pick.begin(), pick.end());
  return pick;
}

}  // namespace

IrreparableError::IrreparableError(std::size_t node, std::vector<std::size_t> lost)
    : Error("node U" + std::to_string(node) + " is irreparable; no other node holds " +
            list_to_string(lost)),
      node_(node),
      lost_(std::move(lost)) {}

RepairPlan plan_repair(const FrCode& code, std::size_t failed_node, RepairOptions options) {
  const CoverProblem cp = cover_problem(code, failed_node);
  if (!cp.lost.empty()) throw IrreparableError(failed_node, cp.lost);

  RepairPlan plan;
  plan.failed_node = failed_node;
  plan.approximate = code.node_count() > options.exact_node_limit;
  const auto pick = plan.approximate ? greedy_cover(cp) : exact_cover(cp);

  for (std::size_t c : pick) plan.helpers.push_back(cp.candidates[c]);
  for (std::size_t q = 0; q < cp.needed.size(); ++q) {
    for (std::size_t c : pick) {
      if (cp.holds[c][q]) {
        plan.assignments.push_back({cp.needed[q], cp.candidates[c]});
        break;
      }
    }
    if (code.count(failed_node, cp.needed[q]) > 1) plan.duplicated_packets.push_back(cp.needed[q]);
  }
  plan.repair_degree = plan.helpers.size();
  plan.bandwidth = cp.needed.size();
  return plan;
}

std::size_t greedy_cover_size(const FrCode& code, std::size_t failed_node) {
  const CoverProblem cp = cover_problem(code, failed_node);
  if (!cp.lost.empty()) throw IrreparableError(failed_node, cp.lost);
  return greedy_cover(cp).size();
}

RepairabilityReport repairability(const FrCode& code, RepairOptions options) {
  RepairabilityReport report;
  for (std::size_t u = 1; u <= code.node_count(); ++u) {
    NodeRepairability entry;
    entry.node = u;
    try {
      const auto plan = plan_repair(code, u, options);
      entry.repairable = true;
      entry.repair_degree = plan.repair_degree;
      entry.bandwidth = plan.bandwidth;
      report.max_repair_degree = std::max(report.max_repair_degree, plan.repair_degree);
    } catch (const IrreparableError& e) {
      entry.lost_packets = e.lost_packets();
      report.all_repairable = false;
    }
    report.nodes.push_back(std::move(entry));
  }
  return report;
}

}  // namespace flowerfr
