#pragma once

#include <cstdint>

namespace trigon {

// SplitMix64 stream. split(k) derives an independent child stream, so every
// sample, attempt and draw has a reproducible seed of its own.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  Rng split(std::uint64_t stream) const {
    Rng child(state_ ^ (stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    child.next();
    return child;
  }

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

private:
  std::uint64_t state_;
};

} // namespace trigon
