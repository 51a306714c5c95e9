#include "flowerfr/generator.hpp"

#include <algorithm>
#include <string>

#include "flowerfr/rng.hpp"

namespace flowerfr {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kLex:
      return "lex";
    case Strategy::kRandom:
      return "random";
    case Strategy::kRow:
      return "row";
    case Strategy::kCol:
      return "col";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (auto s : {Strategy::kLex, Strategy::kRandom, Strategy::kRow, Strategy::kCol}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

GeneratorState::GeneratorState(std::size_t nodes, std::size_t packets)
    : nodes_(nodes), packets_(packets) {
  if (nodes < 1 || packets < 1) throw ArgumentError("n and theta must be at least 1");
  counts_.assign(nodes * packets, 0);
  dropping_.push_back(1);
  selection_.push_back(1);
  counts_[0] = 1;
  trace_.push_back({1, 1, 1, 1, 1});
}

void GeneratorState::apply(std::size_t a, std::size_t b) {
  if (a < 1 || a > nodes_ || b < 1 || b > packets_) {
    throw RangeError("step (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                     ") outside 1.." + std::to_string(nodes_) + " x 1.." + std::to_string(packets_));
  }
  const std::size_t i = node_after(a);
  const std::size_t j = packet_after(b);
  dropping_.insert(dropping_.end(), a - 1, 0);
  dropping_.push_back(1);
  selection_.insert(selection_.end(), b - 1, 0);
  selection_.push_back(1);
  ++counts_[(i - 1) * packets_ + (j - 1)];
  trace_.push_back({trace_.size() + 1, dropping_.size(), selection_.size(), i, j});
}

FlowerSpec GeneratorState::spec() const {
  return {nodes_, packets_, BitSeq(selection_), BitSeq(dropping_)};
}

FrCode GeneratorState::code() const { return FrCode::from_counts(nodes_, packets_, counts_); }

bool step_feasible(const GeneratorState& state, std::size_t a, std::size_t b) {
  if (a < 1 || a > state.nodes() || b < 1 || b > state.packets()) {
    throw RangeError("step (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                     ") outside the allowed ranges");
  }
  const std::size_t i = state.node_after(a);
  const std::size_t j = state.packet_after(b);
  if (state.count(i, j) != 0) return false;
  for (std::size_t p = 1; p <= state.nodes(); ++p) {
    if (p == i) continue;
    std::size_t load = state.count(p, j);
    for (std::size_t s = 1; s <= state.packets(); ++s) {
      if (s != j) load += std::size_t{state.count(i, s)} * state.count(p, s);
    }
    if (load > 1) return false;
  }
  return true;
}

GenerationStuck::GenerationStuck(GeneratorState partial, std::size_t target_weight)
    : Error("generation stuck at weight " + std::to_string(partial.weight()) + " of " +
            std::to_string(target_weight) + ": no feasible step"),
      partial_(std::move(partial)),
      target_(target_weight) {}

namespace {

using Step = std::pair<std::size_t, std::size_t>;

std::optional<Step> choose_step(const GeneratorState& state, Strategy strategy, Rng& rng) {
  const std::size_t n = state.nodes();
  const std::size_t theta = state.packets();
  switch (strategy) {
    case Strategy::kLex:
      for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = 1; b <= theta; ++b) {
          if (step_feasible(state, a, b)) return Step{a, b};
        }
      }
      return std::nullopt;
    case Strategy::kRow:
      for (std::size_t b = 1; b <= theta; ++b) {
        if (step_feasible(state, 1, b)) return Step{1, b};
      }
      return std::nullopt;
    case Strategy::kCol:
      for (std::size_t a = 1; a <= n; ++a) {
        if (step_feasible(state, a, 1)) return Step{a, 1};
      }
      return std::nullopt;
    case Strategy::kRandom: {
      std::vector<Step> feasible;
      for (std::size_t a = 1; a <= n; ++a) {
        for (std::size_t b = 1; b <= theta; ++b) {
          if (step_feasible(state, a, b)) feasible.emplace_back(a, b);
        }
      }
      if (feasible.empty()) return std::nullopt;
      return feasible[rng.uniform_below(feasible.size())];
    }
  }
  return std::nullopt;
}

}  // namespace

GeneratedCode generate(const GeneratorOptions& options) {
  if (options.nodes < 1 || options.packets < 1) {
    throw ArgumentError("n and theta must be at least 1");
  }
  if (options.target_weight < std::max(options.nodes, options.packets)) {
    throw ArgumentError("z=" + std::to_string(options.target_weight) +
                        " is below max(n, theta)=" +
                        std::to_string(std::max(options.nodes, options.packets)));
  }

  GeneratorState state(options.nodes, options.packets);
  Rng rng(options.seed);
  std::vector<Step> steps;
  while (state.weight() < options.target_weight) {
    const auto step = choose_step(state, options.strategy, rng);
    if (!step) throw GenerationStuck(std::move(state), options.target_weight);
    state.apply(step->first, step->second);
    steps.push_back(*step);
  }
  return {state.spec(), state.code(), state.trace(), std::move(steps), options.strategy,
          options.seed};
}

}  // namespace flowerfr
