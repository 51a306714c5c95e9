#include "flowerfr/capacity.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

#include "flowerfr/errors.hpp"

namespace flowerfr {

namespace {

// Support of one node as a packed bitset over packets.
using PacketBits = std::vector<std::uint64_t>;

std::vector<PacketBits> support_bits(const FrCode& code) {
  const std::size_t words = (code.packet_count() + 63) / 64;
  std::vector<PacketBits> rows(code.node_count(), PacketBits(words, 0));
  for (std::size_t i = 1; i <= code.node_count(); ++i) {
    for (std::size_t j = 1; j <= code.packet_count(); ++j) {
      if (code.count(i, j) > 0) rows[i - 1][(j - 1) / 64] |= std::uint64_t{1} << ((j - 1) % 64);
    }
  }
  return rows;
}

std::size_t popcount(const PacketBits& bits) {
  std::size_t total = 0;
  for (auto w : bits) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void check_k(const FrCode& code, std::size_t k, SubsetLimits limits) {
  if (k < 1 || k > code.node_count()) {
    throw RangeError("reconstruction degree k=" + std::to_string(k) + " outside 1.." +
                     std::to_string(code.node_count()));
  }
  if (binomial(code.node_count(), k) > limits.max_subsets) {
    throw LimitError("C(" + std::to_string(code.node_count()) + ", " + std::to_string(k) +
                     ") subsets exceeds the ceiling of " + std::to_string(limits.max_subsets));
  }
}

// Depth-first walk over k-combinations of 0..n-1 in lexicographic order.
// `enter(depth, node)` extends the partial subset, `leaf()` fires on every
// complete subset.
template <typename Enter, typename Leaf>
void for_each_combination(std::size_t n, std::size_t k, Enter&& enter, Leaf&& leaf) {
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      leaf();
      return;
    }
    for (std::size_t v = from; v + (k - depth) <= n; ++v) {
      enter(depth, v);
      rec(depth + 1, v + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

std::uint64_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / i;
  }
  return result;
}

std::size_t guaranteed_file_size(const FrCode& code, std::size_t k, SubsetLimits limits) {
  check_k(code, k, limits);
  const auto rows = support_bits(code);
  const std::size_t words = rows.front().size();
  std::vector<PacketBits> partial(k + 1, PacketBits(words, 0));
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_combination(
      code.node_count(), k,
      [&](std::size_t depth, std::size_t node) {
        for (std::size_t w = 0; w < words; ++w) partial[depth + 1][w] = partial[depth][w] | rows[node][w];
      },
      [&] { best = std::min(best, popcount(partial[k])); });
  return best;
}

long long inclusion_exclusion_value(const FrCode& code, std::span<const std::size_t> subset) {
  long long value = 0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    value += static_cast<long long>(code.distinct_packets(subset[a]).size());
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      for (std::size_t j = 1; j <= code.packet_count(); ++j) {
        if (code.count(subset[a], j) > 0 && code.count(subset[b], j) > 0) --value;
      }
    }
  }
  return value;
}

long long best_case_file_size(const FrCode& code, std::size_t k, SubsetLimits limits) {
  check_k(code, k, limits);
  const std::size_t n = code.node_count();
  const auto rows = support_bits(code);
  std::vector<long long> size(n);
  std::vector<long long> shared(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    size[i] = static_cast<long long>(popcount(rows[i]));
    for (std::size_t p = 0; p < n; ++p) {
      PacketBits both(rows[i].size());
      for (std::size_t w = 0; w < both.size(); ++w) both[w] = rows[i][w] & rows[p][w];
      shared[i * n + p] = static_cast<long long>(popcount(both));
    }
  }

  std::vector<std::size_t> chosen(k);
  std::vector<long long> partial(k + 1, 0);
  long long best = std::numeric_limits<long long>::min();
  for_each_combination(
      n, k,
      [&](std::size_t depth, std::size_t node) {
        long long v = partial[depth] + size[node];
        for (std::size_t d = 0; d < depth; ++d) v -= shared[chosen[d] * n + node];
        chosen[depth] = node;
        partial[depth + 1] = v;
      },
      [&] { best = std::max(best, partial[k]); });
  return best;
}

long long mbr_bound(std::size_t k, std::size_t alpha) {
  if (k < 1 || k > alpha) {
    throw ArgumentError("MBR bound is defined for 1 <= k <= alpha (k=" + std::to_string(k) +
                        ", alpha=" + std::to_string(alpha) + ")");
  }
  const auto kk = static_cast<long long>(k);
  return kk * static_cast<long long>(alpha) - kk * (kk - 1) / 2;
}

long long generalized_bound(const FrCode& code, std::size_t k) {
  if (k < 1 || k > code.node_count()) {
    throw RangeError("k=" + std::to_string(k) + " outside 1.." + std::to_string(code.node_count()));
  }
  auto storage = parameters(code).storage;
  std::sort(storage.begin(), storage.end());
  long long sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += static_cast<long long>(storage[i]);
  const auto kk = static_cast<long long>(k);
  return sum - kk * (kk - 1) / 2;
}

CapacityProfile capacity_profile(const FrCode& code, SubsetLimits limits) {
  CapacityProfile profile;
  const auto params = parameters(code);
  profile.uniform_storage = std::all_of(params.storage.begin(), params.storage.end(),
                                        [&](std::size_t a) { return a == params.max_storage; });
  profile.pairwise_condition = check_universally_good(code).universally_good;
  for (std::size_t k = 1; k <= code.node_count(); ++k) {
    CapacityRow row;
    row.k = k;
    row.guaranteed = guaranteed_file_size(code, k, limits);
    row.best_case = best_case_file_size(code, k, limits);
    if (k <= params.max_storage) row.mbr_bound = mbr_bound(k, params.max_storage);
    row.generalized_bound = generalized_bound(code, k);
    profile.rows.push_back(row);
  }
  return profile;
}

}  // namespace flowerfr
