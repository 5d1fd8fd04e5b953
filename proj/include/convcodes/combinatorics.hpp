#pragma once

#include <cstddef>
#include <vector>

namespace convcodes {

/// First size-`k` subset of {first, ..., last} in lexicographic order.
inline std::vector<std::size_t> first_combination(std::size_t k, std::size_t first = 1) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = first + i;
  return c;
}

/// Advances `c` to the next subset of {first, ..., last} in lexicographic
/// order. Returns false (leaving `c` unspecified) after the last subset.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t last) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] + (k - i) <= last) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace convcodes
