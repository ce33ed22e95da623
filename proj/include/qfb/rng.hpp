#pragma once

#include <cmath>
#include <cstdint>

namespace qfb {

// Counter-based random stream.  Every draw is a pure function of (stream key,
// counter), so values do not depend on evaluation order, interleaving, or
// thread count.  Streams split into independent child streams by index;
// trajectory workers each own a child of the master stream.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_(mix(seed + kSeedSalt)) {}

  // Independent stream derived from this one; child(i) != child(j) for i != j.
  RngStream child(std::uint64_t index) const {
    return RngStream(raw_tag{}, mix(key_ ^ mix(index + kChildSalt)));
  }

  // 64 random bits for the given counter.
  std::uint64_t bits(std::uint64_t counter) const {
    return mix(key_ ^ mix(counter + kDrawSalt));
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on counters (2c, 2c+1).
  double normal(std::uint64_t counter) const {
    // First uniform mapped to (0, 1] so the log is finite.
    const double u1 =
        (static_cast<double>(bits(2 * counter) >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(bits(2 * counter + 1) >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

  std::uint64_t key() const { return key_; }

 private:
  struct raw_tag {};
  RngStream(raw_tag, std::uint64_t key) : key_(key) {}

  // SplitMix64 finalizer: bijective, well-mixed.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Distinct salts keep the seed, child-index, and draw-counter domains apart.
  static constexpr std::uint64_t kSeedSalt = 0x243f6a8885a308d3ull;
  static constexpr std::uint64_t kChildSalt = 0x13198a2e03707344ull;
  static constexpr std::uint64_t kDrawSalt = 0xa4093822299f31d0ull;

  std::uint64_t key_;
};

}  // namespace qfb
