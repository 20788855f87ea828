#include "nonsep/combinatorics.hpp"

#include <limits>

namespace nonsep {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  return true;
}

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(k));
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int v = next; v < n; ++v) {
      // Subsets starting with v at this slot.
      const std::uint64_t count = binomial(n - v - 1, k - slot - 1);
      if (rank < count) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= count;
    }
  }
  return out;
}

}  // namespace nonsep
