#ifndef SCHMIDT_TESTS_ORACLES_HPP
#define SCHMIDT_TESTS_ORACLES_HPP

// Slow, obviously-correct reference computations. Nothing here calls into the
// library, so agreement with it is independent evidence.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

/// Every partition of n, found by sorting all 2^(n-1) compositions.
inline std::set<Parts> partitions_brute(int n) {
  std::set<Parts> out;
  if (n == 0) {
    out.insert(Parts{});
    return out;
  }
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Parts parts;
    int run = 1;
    for (int bit = 0; bit < n - 1; ++bit) {
      if (mask & (1u << bit)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

/// Coefficients of Π_k 1/(1 - q^k)^{colors(k)} through q^n.
inline std::vector<long long> colored_counts(int n, const std::function<int(int)>& colors) {
  std::vector<long long> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int rep = 0; rep < colors(k); ++rep) {
      for (int v = k; v <= n; ++v) c[static_cast<std::size_t>(v)] += c[static_cast<std::size_t>(v - k)];
    }
  }
  return c;
}

inline long long partition_number(int n) {
  return colored_counts(n, [](int) { return 1; })[static_cast<std::size_t>(n)];
}

/// Cell (r, c) of a Ferrers diagram, 1-based.
inline bool has_cell(const Parts& p, int r, int c) {
  return r >= 1 && r <= static_cast<int>(p.size()) && c >= 1 && c <= p[static_cast<std::size_t>(r - 1)];
}

inline Parts conjugate_by_cells(const Parts& p) {
  Parts out;
  for (int c = 1; has_cell(p, 1, c); ++c) {
    int height = 0;
    while (has_cell(p, height + 1, c)) ++height;
    out.push_back(height);
  }
  return out;
}

inline int hook_length(const Parts& p, int r, int c) {
  int arm = 0, leg = 0;
  while (has_cell(p, r, c + arm + 1)) ++arm;
  while (has_cell(p, r + leg + 1, c)) ++leg;
  return arm + leg + 1;
}

/// Multiplicities as a map value -> count.
inline std::map<int, int> multiset(const Parts& p) {
  std::map<int, int> out;
  for (int v : p) ++out[v];
  return out;
}

}  // namespace oracle

#endif  // SCHMIDT_TESTS_ORACLES_HPP
