#ifndef SKEWTHETA_RNG_HPP
#define SKEWTHETA_RNG_HPP

#include <cstdint>

namespace skewtheta {

// Counter-based stream generator.  Each (seed, index) pair opens an
// independent substream, so samplers produce identical output for a given
// (seed, count) regardless of evaluation order or parallel chunking.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index)
      : state_(mix(mix(seed + 0x9e3779b97f4a7c15ULL) ^
                   mix(index + 0xbf58476d1ce4e5b9ULL))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace skewtheta

#endif
