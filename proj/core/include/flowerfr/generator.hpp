#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "flowerfr/errors.hpp"
#include "flowerfr/flower.hpp"
#include "flowerfr/frcode.hpp"

namespace flowerfr {

/// How generate() picks the next (a, b) among the feasible steps.
enum class Strategy {
  kLex,     // smallest feasible (a, b) in lexicographic order
  kRandom,  // uniform over all feasible pairs, seeded
  kRow,     // a = 1 fixed, first feasible b; emits x = 1^z
  kCol,     // b = 1 fixed, first feasible a; emits y = 1^z
};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// Running state of the incremental sequence builder. Both sequences always
/// end in a one and have equal weight; the count matrix mirrors every
/// placement made so far. Starts from x = y = "1" with P_1 on U_1.
class GeneratorState {
 public:
  GeneratorState(std::size_t nodes, std::size_t packets);

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t packets() const noexcept { return packets_; }
  std::size_t drop_end() const noexcept { return dropping_.size(); }     // m
  std::size_t select_end() const noexcept { return selection_.size(); }  // r
  std::size_t weight() const noexcept { return trace_.size(); }

  unsigned count(std::size_t node, std::size_t packet) const {
    return counts_[(node - 1) * packets_ + (packet - 1)];
  }

  /// Node U_i reached by appending 0^(a-1)1 to x: i = ((m + a - 1) mod n) + 1.
  std::size_t node_after(std::size_t a) const noexcept { return (drop_end() + a - 1) % nodes_ + 1; }
  /// Packet P_j selected by appending 0^(b-1)1 to y.
  std::size_t packet_after(std::size_t b) const noexcept {
    return (select_end() + b - 1) % packets_ + 1;
  }

  /// Appends 0^(a-1)1 to x and 0^(b-1)1 to y and records the placement. Does
  /// not check feasibility. Throws RangeError unless 1 <= a <= n, 1 <= b <= theta.
  void apply(std::size_t a, std::size_t b);

  FlowerSpec spec() const;
  FrCode code() const;
  const PlacementTrace& trace() const noexcept { return trace_; }

 private:
  std::size_t nodes_;
  std::size_t packets_;
  std::vector<std::uint8_t> dropping_;
  std::vector<std::uint8_t> selection_;
  std::vector<unsigned> counts_;
  PlacementTrace trace_;
};

/// Whether step (a, b) keeps the code universally good: with i, j the node and
/// packet it would place, A_i(j) must be 0 and, for every p != i,
/// A_p(j) + sum_{s != j} A_i(s) A_p(s) <= 1.
/// Throws RangeError unless 1 <= a <= n and 1 <= b <= theta.
bool step_feasible(const GeneratorState& state, std::size_t a, std::size_t b);

struct GeneratorOptions {
  std::size_t nodes = 0;
  std::size_t packets = 0;
  std::size_t target_weight = 0;  // z, total copies placed including P_1 on U_1
  Strategy strategy = Strategy::kLex;
  std::uint64_t seed = 0;
};

struct GeneratedCode {
  FlowerSpec spec;
  FrCode code;
  PlacementTrace trace;
  std::vector<std::pair<std::size_t, std::size_t>> steps;  // chosen (a, b)
  Strategy strategy = Strategy::kLex;
  std::uint64_t seed = 0;
};

/// No feasible step exists before reaching the target weight.
class GenerationStuck : public Error {
 public:
  GenerationStuck(GeneratorState partial, std::size_t target_weight);
  const GeneratorState& partial() const noexcept { return partial_; }
  std::size_t target_weight() const noexcept { return target_; }
  std::size_t achieved_weight() const noexcept { return partial_.weight(); }

 private:
  GeneratorState partial_;
  std::size_t target_;
};

/// Builds (x, y) of weight z whose Flower code is universally good, one
/// feasible step at a time. Never backtracks; throws GenerationStuck on a
/// dead end and ArgumentError when z < max(n, theta) or n, theta < 1.
GeneratedCode generate(const GeneratorOptions& options);

}  // namespace flowerfr
