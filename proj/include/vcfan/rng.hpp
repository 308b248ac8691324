// Deterministic sampling for tests and the verification harness.

#pragma once

#include "vcfan/classify.hpp"
#include "vcfan/fans.hpp"

#include <cstdint>

namespace vcfan {

// SplitMix64: tiny, seed-stable across platforms.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi] inclusive
  long draw(long lo, long hi) {
    return lo + long(next() % std::uint64_t(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

// Random valid pairs of each type.
VcPair sample_type0(int n, SampleRng& rng, long bound = 5);
VcPair sample_type1(int n, SampleRng& rng, long bound = 3);
VcPair sample_type2(int n, SampleRng& rng);
VcPair sample_type3(int n, SampleRng& rng, long bound = 7);
// any type, weighted evenly
VcPair sample_pair(int n, SampleRng& rng);
// a valid pair conjugated by a random permutation (not in normal form)
VcPair sample_conjugated(const VcPair& p, SampleRng& rng);

}  // namespace vcfan
