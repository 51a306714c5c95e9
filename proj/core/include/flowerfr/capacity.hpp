#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flowerfr/frcode.hpp"

namespace flowerfr {

/// Ceiling on the number of k-subsets any exhaustive search may visit.
struct SubsetLimits {
  std::uint64_t max_subsets = 10'000'000;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t k) noexcept;

/// M(k): the minimum, over all k-node subsets, of the number of distinct
/// packets in their union. Exact. Throws RangeError unless 1 <= k <= n and
/// LimitError when C(n, k) exceeds the ceiling.
std::size_t guaranteed_file_size(const FrCode& code, std::size_t k, SubsetLimits limits = {});

/// Second-order inclusion-exclusion on the 0/1 support for the given 1-based
/// node subset: sum |U_i| - sum_{i<p} |U_i n U_p|. Equals the union size
/// whenever no packet sits on three or more of the chosen nodes, and is a
/// lower bound on it otherwise.
long long inclusion_exclusion_value(const FrCode& code, std::span<const std::size_t> subset);

/// Maximum of inclusion_exclusion_value over all k-subsets.
long long best_case_file_size(const FrCode& code, std::size_t k, SubsetLimits limits = {});

/// k * alpha - k(k-1)/2. Requires 1 <= k <= alpha (ArgumentError otherwise).
long long mbr_bound(std::size_t k, std::size_t alpha);

/// Sum of the k smallest node capacities minus k(k-1)/2. A valid lower bound
/// on M(k) when no two nodes share more than one packet.
long long generalized_bound(const FrCode& code, std::size_t k);

struct CapacityRow {
  std::size_t k = 0;
  std::size_t guaranteed = 0;
  long long best_case = 0;
  /// Present only for k <= alpha.
  std::optional<long long> mbr_bound;
  long long generalized_bound = 0;
};

struct CapacityProfile {
  std::vector<CapacityRow> rows;  // k = 1..n
  /// Every alpha_i equal; the MBR bound is only claimed for such codes.
  bool uniform_storage = false;
  /// Pairwise overlap <= 1 everywhere; the generalized bound is only claimed
  /// for such codes.
  bool pairwise_condition = false;
};

CapacityProfile capacity_profile(const FrCode& code, SubsetLimits limits = {});

}  // namespace flowerfr
