#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flowerfr/errors.hpp"
#include "flowerfr/frcode.hpp"
#include "flowerfr/sequence.hpp"

namespace flowerfr {

/// Inputs of the Flower construction. Nodes sit on a circle; the k-th one of
/// the selection sequence picks a packet, the k-th one of the dropping
/// sequence picks the node it lands on.
struct FlowerSpec {
  std::size_t nodes = 0;    // n
  std::size_t packets = 0;  // theta
  BitSeq selection;         // y, packet selection sequence
  BitSeq dropping;          // x, packet dropping sequence

  friend bool operator==(const FlowerSpec&, const FlowerSpec&) = default;
};

enum class SpecViolation {
  kNoNodes,
  kNoPackets,
  kWeightMismatch,        // weight(x) != weight(y)
  kTooFewForPackets,      // weight(x) < theta
  kTooFewForNodes,        // weight(y) < n
};

std::string describe(SpecViolation v, const FlowerSpec& spec);

/// Empty when the spec is constructible.
std::vector<SpecViolation> validate(const FlowerSpec& spec);

class ValidationError : public Error {
 public:
  ValidationError(const FlowerSpec& spec, std::vector<SpecViolation> violations);
  const std::vector<SpecViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<SpecViolation> violations_;
};

struct PlacementEvent {
  std::size_t step = 0;              // k, 1-based pair index
  std::size_t drop_position = 0;     // m, position of the k-th one in x
  std::size_t select_position = 0;   // r, position of the k-th one in y
  std::size_t node = 0;              // i = ((m-1) mod n) + 1
  std::size_t packet = 0;            // j = ((r-1) mod theta) + 1

  friend bool operator==(const PlacementEvent&, const PlacementEvent&) = default;
};

using PlacementTrace = std::vector<PlacementEvent>;

struct Construction {
  FrCode code;
  PlacementTrace trace;
};

/// Pairs the k-th one of y with the k-th one of x and drops the selected
/// packet on the selected node. Throws ValidationError on an invalid spec.
Construction construct(const FlowerSpec& spec);

/// rho_j = sum_{p >= 0} y_{p*theta + j}, read straight off the sequence.
std::vector<std::size_t> replication_from_selection(const FlowerSpec& spec);

/// alpha_i = sum_{s >= 0} x_{s*n + i}.
std::vector<std::size_t> storage_from_dropping(const FlowerSpec& spec);

/// Closed form for an all-ones companion sequence of weight w spread over
/// `slots` residues: with eta = w mod slots, the first eta entries are
/// floor(w/slots) + 1 and the rest floor(w/slots).
std::vector<std::size_t> uniform_replication(std::size_t weight, std::size_t packets);
std::vector<std::size_t> uniform_storage(std::size_t weight, std::size_t nodes);

/// Count matrix from the congruence index sets: A_i(j) counts the ones y_r
/// with r = j (mod theta) whose prefix weight equals that of a one x_m with
/// m = i (mod n). Independent of the event loop in construct().
FrCode incidence_counts(const FlowerSpec& spec);

struct DuplicatePlacement {
  std::size_t node = 0;
  std::size_t packet = 0;
  PlacementEvent first;
  PlacementEvent second;
};

/// Every pair of events that lands the same packet on the same node. Empty
/// iff the count matrix is 0/1.
std::vector<DuplicatePlacement> duplicate_placements(const FlowerSpec& spec);

/// Swaps the roles of nodes and packets: (theta, n, y* = x, x* = y).
FlowerSpec dual_spec(const FlowerSpec& spec);

struct PeriodicConstruction {
  FlowerSpec spec;
  std::size_t period = 0;        // tau, the block length
  std::size_t length = 0;        // ceil(2 * theta * tau / weight(block))
  std::size_t actual_weight = 0; // weight of the emitted x
  std::vector<SpecViolation> violations;  // non-empty when the ceiling overshoots 2*theta
  std::optional<Construction> construction;
  GoodnessVerdict verdict;
  std::vector<DuplicatePlacement> duplicates;
};

/// Repeats `block` (its length is the period tau) out to
/// ceil(2 * theta * tau / weight(block)) bits and pairs it with y = 1^(2 theta).
/// Requires gcd(n, theta) = 1, gcd(n, tau) = 1 and tau < n < theta; throws
/// ArgumentError naming the first failed hypothesis. The result is always
/// checked for the pairwise condition rather than assumed good.
PeriodicConstruction periodic_construction(std::size_t nodes, std::size_t packets,
                                           const BitSeq& block);

/// A spec whose construction reproduces `code` exactly. Placements are taken
/// node-major (node, then packet, then copy) and gap-encoded; a zero gap is
/// written as a full turn of n (resp. theta). Throws ArgumentError when the
/// code stores nothing or fewer than max(n, theta) copies, since no such spec
/// can pass validate().
FlowerSpec from_frcode(const FrCode& code);

}  // namespace flowerfr
