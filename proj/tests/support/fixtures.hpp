#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "flowerfr/flowerfr.hpp"

namespace flowerfr::testing {

// Worked examples used across suites.

inline FrCode sample_code() {
  return FrCode::from_node_lists(4, 5, {{1, 2, 3}, {1, 4, 5}, {2, 4}, {3, 5}});
}

inline FrCode overlap_code() {
  return FrCode::from_node_lists(4, 4, {{2, 4}, {1, 3}, {1, 4}, {1, 2, 3}});
}

inline FlowerSpec ring_spec() {
  return {4, 6, BitSeq::ones(12), parse("1011010100100100100010100101")};
}

inline FlowerSpec overlap_spec() {
  return {4, 4, parse("0100100010110101101"), parse("101101111101")};
}

inline FlowerSpec periodic_spec() {
  return {4, 5, BitSeq::ones(10), parse("110110110110110")};
}

// Hand-rolled generators for property tests. Deterministic given the seed.

inline BitSeq random_bits(std::mt19937_64& rng, std::size_t length, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<std::uint8_t> bits(length);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return BitSeq(std::move(bits));
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Pads a sequence with trailing ones/zeros until it has the requested weight.
inline BitSeq with_weight(std::mt19937_64& rng, BitSeq s, std::size_t weight) {
  std::vector<std::uint8_t> bits(s.bits().begin(), s.bits().end());
  std::size_t w = s.weight();
  // Drop ones from the back while too heavy.
  for (std::size_t i = bits.size(); i > 0 && w > weight; --i) {
    if (bits[i - 1]) {
      bits[i - 1] = 0;
      --w;
    }
  }
  std::bernoulli_distribution coin(0.5);
  while (w < weight) {
    if (coin(rng)) bits.push_back(0);
    bits.push_back(1);
    ++w;
  }
  return BitSeq(std::move(bits));
}

// Random valid spec with n, theta <= max_dim and both sequences <= max_len.
inline FlowerSpec random_valid_spec(std::mt19937_64& rng, std::size_t max_dim = 8,
                                    std::size_t max_len = 64) {
  for (;;) {
    const std::size_t n = uniform(rng, 1, max_dim);
    const std::size_t theta = uniform(rng, 1, max_dim);
    const std::size_t lo = std::max(n, theta);
    const std::size_t hi = max_len / 2;
    if (lo > hi) continue;
    const std::size_t w = uniform(rng, lo, hi);
    auto x = with_weight(rng, random_bits(rng, uniform(rng, 0, max_len / 2), 0.6), w);
    auto y = with_weight(rng, random_bits(rng, uniform(rng, 0, max_len / 2), 0.6), w);
    if (x.length() > max_len || y.length() > max_len) continue;
    FlowerSpec spec{n, theta, std::move(y), std::move(x)};
    if (validate(spec).empty()) return spec;
  }
}

inline FrCode random_code(std::mt19937_64& rng, std::size_t max_nodes = 7,
                          std::size_t max_packets = 7, unsigned max_count = 1,
                          double density = 0.4) {
  const std::size_t n = uniform(rng, 1, max_nodes);
  const std::size_t theta = uniform(rng, 1, max_packets);
  std::bernoulli_distribution coin(density);
  std::vector<unsigned> counts(n * theta, 0);
  for (auto& c : counts) {
    if (coin(rng)) c = static_cast<unsigned>(uniform(rng, 1, max_count));
  }
  return FrCode::from_counts(n, theta, std::move(counts));
}

}  // namespace flowerfr::testing
