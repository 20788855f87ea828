#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace nonsep {

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// Advances a strictly increasing k-subset of {0..n-1} in lexicographic
/// order. Returns false after the last subset.
bool next_combination(std::vector<int>& idx, int n);

/// k-subset of {0..n-1} with lexicographic rank `rank`.
std::vector<int> unrank_combination(std::uint64_t rank, int n, int k);

/// Per-index generator derived from a base seed, so that sample i is the same
/// regardless of how samples are distributed over threads.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return std::mt19937_64(z);
}

}  // namespace nonsep
