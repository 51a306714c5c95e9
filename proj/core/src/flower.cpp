#include "flowerfr/flower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace flowerfr {

namespace {

std::string join_violations(const FlowerSpec& spec, const std::vector<SpecViolation>& vs) {
  std::string out = "invalid Flower spec:";
  for (auto v : vs) out += " [" + describe(v, spec) + "]";
  return out;
}

// Appends 0^(gap-1) 1.
void append_gap(std::vector<std::uint8_t>& bits, std::size_t gap) {
  bits.insert(bits.end(), gap - 1, 0);
  bits.push_back(1);
}

std::vector<std::size_t> strided_sums(const BitSeq& seq, std::size_t modulus) {
  std::vector<std::size_t> sums(modulus, 0);
  for (std::size_t slot = 1; slot <= modulus; ++slot) {
    for (std::size_t pos = slot; pos <= seq.length(); pos += modulus) {
      if (seq.at(pos)) ++sums[slot - 1];
    }
  }
  return sums;
}

}  // namespace

std::string describe(SpecViolation v, const FlowerSpec& spec) {
  const auto wx = std::to_string(spec.dropping.weight());
  const auto wy = std::to_string(spec.selection.weight());
  switch (v) {
    case SpecViolation::kNoNodes:
      return "n must be at least 1";
    case SpecViolation::kNoPackets:
      return "theta must be at least 1";
    case SpecViolation::kWeightMismatch:
      return "weights differ: weight(x)=" + wx + " but weight(y)=" + wy;
    case SpecViolation::kTooFewForPackets:
      return "weight(x)=" + wx + " is less than theta=" + std::to_string(spec.packets);
    case SpecViolation::kTooFewForNodes:
      return "weight(y)=" + wy + " is less than n=" + std::to_string(spec.nodes);
  }
  return "unknown violation";
}

std::vector<SpecViolation> validate(const FlowerSpec& spec) {
  std::vector<SpecViolation> out;
  if (spec.nodes < 1) out.push_back(SpecViolation::kNoNodes);
  if (spec.packets < 1) out.push_back(SpecViolation::kNoPackets);
  const std::size_t wx = spec.dropping.weight();
  const std::size_t wy = spec.selection.weight();
  if (wx != wy) out.push_back(SpecViolation::kWeightMismatch);
  if (wx < spec.packets) out.push_back(SpecViolation::kTooFewForPackets);
  if (wy < spec.nodes) out.push_back(SpecViolation::kTooFewForNodes);
  return out;
}

ValidationError::ValidationError(const FlowerSpec& spec, std::vector<SpecViolation> violations)
    : Error(join_violations(spec, violations)), violations_(std::move(violations)) {}

Construction construct(const FlowerSpec& spec) {
  if (auto vs = validate(spec); !vs.empty()) throw ValidationError(spec, std::move(vs));

  const auto drops = spec.dropping.one_positions();
  const auto picks = spec.selection.one_positions();
  std::vector<unsigned> counts(spec.nodes * spec.packets, 0);
  PlacementTrace trace;
  trace.reserve(drops.size());
  for (std::size_t k = 0; k < drops.size(); ++k) {
    const std::size_t m = drops[k];
    const std::size_t r = picks[k];
    PlacementEvent e{k + 1, m, r, (m - 1) % spec.nodes + 1, (r - 1) % spec.packets + 1};
    ++counts[(e.node - 1) * spec.packets + (e.packet - 1)];
    trace.push_back(e);
  }
  return {FrCode::from_counts(spec.nodes, spec.packets, std::move(counts)), std::move(trace)};
}

std::vector<std::size_t> replication_from_selection(const FlowerSpec& spec) {
  if (spec.packets < 1) throw ArgumentError("theta must be at least 1");
  return strided_sums(spec.selection, spec.packets);
}

std::vector<std::size_t> storage_from_dropping(const FlowerSpec& spec) {
  if (spec.nodes < 1) throw ArgumentError("n must be at least 1");
  return strided_sums(spec.dropping, spec.nodes);
}

namespace {

std::vector<std::size_t> balanced_split(std::size_t weight, std::size_t slots) {
  if (slots < 1) throw ArgumentError("slot count must be at least 1");
  const std::size_t base = weight / slots;
  const std::size_t eta = weight - slots * base;
  std::vector<std::size_t> out(slots, base);
  for (std::size_t s = 0; s < eta; ++s) out[s] = base + 1;
  return out;
}

}  // namespace

std::vector<std::size_t> uniform_replication(std::size_t weight, std::size_t packets) {
  return balanced_split(weight, packets);
}

std::vector<std::size_t> uniform_storage(std::size_t weight, std::size_t nodes) {
  return balanced_split(weight, nodes);
}

FrCode incidence_counts(const FlowerSpec& spec) {
  if (auto vs = validate(spec); !vs.empty()) throw ValidationError(spec, std::move(vs));
  const std::size_t n = spec.nodes;
  const std::size_t theta = spec.packets;
  const std::size_t w = spec.dropping.weight();

  // lands_on[i][s] is true when the one of x with prefix weight s sits at a
  // position congruent to i mod n.
  std::vector<std::vector<bool>> lands_on(n, std::vector<bool>(w + 1, false));
  std::size_t running = 0;
  for (std::size_t m = 1; m <= spec.dropping.length(); ++m) {
    if (!spec.dropping.at(m)) continue;
    ++running;
    lands_on[(m - 1) % n][running] = true;
  }

  std::vector<std::size_t> y_prefix(spec.selection.length() + 1, 0);
  for (std::size_t r = 1; r <= spec.selection.length(); ++r) {
    y_prefix[r] = y_prefix[r - 1] + (spec.selection.at(r) ? 1 : 0);
  }

  std::vector<unsigned> counts(n * theta, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= theta; ++j) {
      unsigned total = 0;
      for (std::size_t r = j; r <= spec.selection.length(); r += theta) {
        if (spec.selection.at(r) && lands_on[i - 1][y_prefix[r]]) ++total;
      }
      counts[(i - 1) * theta + (j - 1)] = total;
    }
  }
  return FrCode::from_counts(n, theta, std::move(counts));
}

std::vector<DuplicatePlacement> duplicate_placements(const FlowerSpec& spec) {
  const auto built = construct(spec);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PlacementEvent>> by_cell;
  for (const auto& e : built.trace) by_cell[{e.node, e.packet}].push_back(e);

  std::vector<DuplicatePlacement> out;
  for (const auto& [cell, events] : by_cell) {
    for (std::size_t a = 0; a < events.size(); ++a) {
      for (std::size_t b = a + 1; b < events.size(); ++b) {
        out.push_back({cell.first, cell.second, events[a], events[b]});
      }
    }
  }
  return out;
}

FlowerSpec dual_spec(const FlowerSpec& spec) {
  return {spec.packets, spec.nodes, spec.dropping, spec.selection};
}

PeriodicConstruction periodic_construction(std::size_t nodes, std::size_t packets,
                                           const BitSeq& block) {
  const std::size_t tau = block.length();
  const std::size_t block_weight = block.weight();
  if (tau == 0 || block_weight == 0) {
    throw ArgumentError("periodic block must contain at least one 1");
  }
  if (!(tau < nodes)) {
    throw ArgumentError("hypothesis tau < n failed (tau=" + std::to_string(tau) +
                        ", n=" + std::to_string(nodes) + ")");
  }
  if (!(nodes < packets)) {
    throw ArgumentError("hypothesis n < theta failed (n=" + std::to_string(nodes) +
                        ", theta=" + std::to_string(packets) + ")");
  }
  if (std::gcd(nodes, packets) != 1) {
    throw ArgumentError("hypothesis gcd(n, theta) = 1 failed");
  }
  if (std::gcd(nodes, tau) != 1) {
    throw ArgumentError("hypothesis gcd(n, tau) = 1 failed");
  }

  PeriodicConstruction out{};
  out.period = tau;
  out.length = (2 * packets * tau + block_weight - 1) / block_weight;
  std::vector<std::uint8_t> x(out.length);
  for (std::size_t p = 0; p < out.length; ++p) x[p] = block.bits()[p % tau];
  out.spec = {nodes, packets, BitSeq::ones(2 * packets), BitSeq(std::move(x))};
  out.actual_weight = out.spec.dropping.weight();

  out.violations = validate(out.spec);
  if (out.violations.empty()) {
    out.construction = construct(out.spec);
    out.verdict = check_universally_good(out.construction->code);
    out.duplicates = duplicate_placements(out.spec);
  } else {
    out.verdict.universally_good = false;
  }
  return out;
}

FlowerSpec from_frcode(const FrCode& code) {
  const std::size_t n = code.node_count();
  const std::size_t theta = code.packet_count();
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> y;
  std::size_t prev_node = 0;
  std::size_t prev_packet = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= theta; ++j) {
      for (unsigned c = 0; c < code.count(i, j); ++c) {
        if (x.empty()) {
          append_gap(x, i);
          append_gap(y, j);
        } else {
          const std::size_t dx = (i + n - prev_node) % n;
          const std::size_t dy = (j + theta - prev_packet) % theta;
          append_gap(x, dx == 0 ? n : dx);
          append_gap(y, dy == 0 ? theta : dy);
        }
        prev_node = i;
        prev_packet = j;
      }
    }
  }
  if (x.empty()) throw ArgumentError("code stores no packets; no Flower spec reproduces it");
  if (code.total() < std::max(n, theta)) {
    throw ArgumentError("code stores " + std::to_string(code.total()) +
                        " copies, fewer than max(n, theta); any spec would fail validation");
  }
  return {n, theta, BitSeq(std::move(y)), BitSeq(std::move(x))};
}

}  // namespace flowerfr
