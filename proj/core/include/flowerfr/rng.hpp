#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace flowerfr {

/// Seeded generator with a platform-independent stream. The engine is
/// std::mt19937_64, whose output sequence the standard pins down exactly;
/// bounded draws use rejection sampling on top of it instead of
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
/// Any change to the stream bumps kVersion.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64/reject";
  static constexpr int kVersion = 1;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, bound). bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound) {
    // Reject the low 2^64 mod bound values so the remainder is unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t v = engine_();
      if (v >= threshold) return v % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Fresh nondeterministic seed, for callers that were not given one.
inline std::uint64_t draw_seed() {
  std::random_device rd;
  return (std::uint64_t{rd()} << 32) ^ std::uint64_t{rd()};
}

}  // namespace flowerfr
