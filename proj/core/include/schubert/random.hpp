#pragma once

#include <cstdint>
#include <stdexcept>

namespace schubert {

// Deterministic, platform-independent pseudorandom stream (splitmix64 core).
// Identical seeds give identical sequences everywhere; fork() derives an
// independent child stream so parallel consumers never share state.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi], inclusive
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection sampling to kill modulo bias
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  RandomSource fork(std::uint64_t salt) {
    return RandomSource(next() ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  }

private:
  std::uint64_t state_;
};

} // namespace schubert
