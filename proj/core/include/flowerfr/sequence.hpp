#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flowerfr {

inline constexpr std::size_t kDefaultMaxSequenceLength = std::size_t{1} << 20;

/// Finite binary sequence. Every public accessor uses 1-based positions
/// (x_1 .. x_len); position 0 is only meaningful for prefix_weight.
class BitSeq {
 public:
  BitSeq() = default;

  /// Throws ArgumentError if any element is not 0 or 1.
  explicit BitSeq(std::vector<std::uint8_t> bits);

  static BitSeq ones(std::size_t length) { return BitSeq(std::vector<std::uint8_t>(length, 1)); }
  static BitSeq zeros(std::size_t length) { return BitSeq(std::vector<std::uint8_t>(length, 0)); }

  std::size_t length() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// x_pos for 1 <= pos <= length(); throws RangeError otherwise.
  bool at(std::size_t pos) const;

  std::size_t weight() const noexcept;

  /// Number of ones among the first `count` terms; 0 <= count <= length().
  std::size_t prefix_weight(std::size_t count) const;

  /// 1-based positions of the ones, ascending.
  std::vector<std::size_t> one_positions() const;

  bool all_ones() const noexcept;

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  /// Canonical plain bitstring, e.g. "101101".
  std::string to_string() const;

  friend bool operator==(const BitSeq&, const BitSeq&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Expands sequence notation:
///
///   seq  := term+
///   term := atom ['^' exp]
///   atom := '(' bits ')' | '0' | '1'
///   exp  := digit | '{' digit+ '}'
///
/// Whitespace between tokens is ignored. A bare exponent is a single digit,
/// so "(1011)^30^4" reads as (1011)^3 0^4; write "1^{12}" for larger
/// exponents. '^' applies to the immediately preceding atom only,
/// so "10^2" is "100" and "(10)^2" is "1010". An exponent of 0 yields the
/// empty string. Input with no terms at all is rejected.
/// Throws ParseError on malformed input and LimitError when the expansion
/// would exceed `max_length`.
BitSeq parse(std::string_view text, std::size_t max_length = kDefaultMaxSequenceLength);

/// Smallest tau with 1 <= tau < length and x_r == x_{r+tau} for every r.
/// std::nullopt when only the trivial period tau == length works.
/// Throws RangeError on the empty sequence.
std::optional<std::size_t> min_period(const BitSeq& s);

BitSeq concat(const BitSeq& a, const BitSeq& b);

/// `times` back-to-back copies of `a`. Throws LimitError past `max_length`.
BitSeq power(const BitSeq& a, std::size_t times,
             std::size_t max_length = kDefaultMaxSequenceLength);

}  // namespace flowerfr
