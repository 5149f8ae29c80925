#pragma once

#include <cstdint>

namespace monohaz {

//! Counter-based uniform stream (SplitMix64). A stream is fully determined
//! by (seed, stream id), so replicate r of a simulation can draw from its
//! own stream and produce identical output whether replicates run serially
//! or in parallel.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
    : state_(mix(seed ^ (0xD1B54A32D192ED03ULL + stream * 0x8CB92BA72F3D8DD7ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  //! Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  //! Uniform double in (0, 1].
  double next_open_above() { return 1.0 - next_double(); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

//! Derives a child seed for sub-tasks (e.g. bootstrap loops inside a
//! Monte Carlo replication) so nested randomness stays keyed and
//! order-independent.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return RngStream::mix(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace monohaz
