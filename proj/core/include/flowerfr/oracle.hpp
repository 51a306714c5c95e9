#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flowerfr/capacity.hpp"
#include "flowerfr/flower.hpp"
#include "flowerfr/frcode.hpp"

// Brute-force reference implementations. Nothing here calls into the formula
// paths it is used to check: unions are literal std::set unions, subsets come
// from permutations of a selection mask, and placement walks both sequences
// with explicit cursors around the node circle.
namespace flowerfr::oracle {

enum class FileSizeMode { kMin, kMax };

/// Literal union size of the chosen nodes (1-based indices).
std::size_t union_size(const FrCode& code, std::span<const std::size_t> subset);

/// True when some packet is held by three or more of the chosen nodes.
bool has_triple_shared_packet(const FrCode& code, std::span<const std::size_t> subset);

/// Min or max, over all k-subsets, of the literal union size.
std::size_t file_size(const FrCode& code, std::size_t k, FileSizeMode mode,
                      SubsetLimits limits = {});

/// Placement by scanning x and y with two cursors. Throws ValidationError on an
/// invalid spec.
FrCode scan_construct(const FlowerSpec& spec);

struct Discrepancy {
  std::string check;
  std::string input;
  std::string formula_value;
  std::string oracle_value;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct CheckOptions {
  SubsetLimits limits;
  /// File-size comparisons are skipped for any k whose C(n, k) passes this.
  std::uint64_t max_file_size_subsets = 100'000;
};

/// Cross-checks on a code: parameter sums, dual involution and parameter swap,
/// dual goodness preservation, witness-spec round trip, file sizes against
/// literal unions, and the capacity bounds. Empty when everything agrees.
std::vector<Discrepancy> check_suite(const FrCode& code, const CheckOptions& options = {});

/// Cross-checks on a spec: event loop vs congruence counts vs cursor oracle,
/// strided sums vs simulated row/column sums, closed forms for all-ones
/// companions, zero row/column characterisation, duplicate detection, dual
/// spec vs transpose, then every code-level check on the constructed code.
std::vector<Discrepancy> check_suite(const FlowerSpec& spec, const CheckOptions& options = {});

std::string describe(const FrCode& code);
std::string describe(const FlowerSpec& spec);

}  // namespace flowerfr::oracle
