#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dpcolor/graph.hpp"

namespace oracle {

using dpcolor::Graph;
using dpcolor::Vertex;

inline bool adjacent(const std::vector<std::pair<int, int>>& edges, int a, int b) {
  for (auto [u, v] : edges) {
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

/// Every k-cycle, found by trying all k-subsets and all vertex orders on each.
/// Cycles are normalized to (smallest first, smaller neighbor second).
inline std::set<std::vector<int>> cycles_by_subsets(int n, const std::vector<std::pair<int, int>>& edges, int k) {
  std::set<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> mask(static_cast<std::size_t>(n), 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask[static_cast<std::size_t>(i)]) subset.push_back(i);
    }
    std::vector<int> perm = subset;
    do {
      if (perm.front() != subset.front()) continue;
      bool closed = true;
      for (int i = 0; i < k && closed; ++i) closed = adjacent(edges, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>((i + 1) % k)]);
      if (!closed) continue;
      std::vector<int> c = perm;
      if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
      out.insert(c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

/// Direct (L,d)*-coloring: choose c(v) in L(v) so that every vertex has at
/// most d neighbors of its own color. Returns the first such coloring in
/// odometer order.
inline std::optional<std::vector<int>> relaxed_list_coloring(int n, const std::vector<std::pair<int, int>>& edges,
                                                             const std::vector<std::vector<int>>& lists, int d) {
  for (const auto& l : lists) {
    if (l.empty()) return std::nullopt;
  }
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> same(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      if (lists[static_cast<std::size_t>(u)][pick[static_cast<std::size_t>(u)]] ==
          lists[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]]) {
        ++same[static_cast<std::size_t>(u)];
        ++same[static_cast<std::size_t>(v)];
      }
    }
    if (std::all_of(same.begin(), same.end(), [d](int s) { return s <= d; })) {
      std::vector<int> colors;
      for (int v = 0; v < n; ++v) colors.push_back(lists[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]]);
      return colors;
    }
    int v = n - 1;
    for (; v >= 0; --v) {
      if (++pick[static_cast<std::size_t>(v)] < lists[static_cast<std::size_t>(v)].size()) break;
      pick[static_cast<std::size_t>(v)] = 0;
    }
    if (v < 0) return std::nullopt;
  }
}

/// Edge subset of K_n selected by the bits of `mask`, in lexicographic pair order.
inline std::vector<std::pair<int, int>> edges_from_mask(int n, std::uint32_t mask) {
  std::vector<std::pair<int, int>> out;
  int bit = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++bit) {
      if (mask & (1u << bit)) out.emplace_back(a, b);
    }
  }
  return out;
}

inline std::vector<std::pair<int, int>> random_edges(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) out.emplace_back(a, b);
    }
  }
  return out;
}

inline const std::vector<std::pair<int, int>>& petersen_edges() {
  static const std::vector<std::pair<int, int>> e = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                                     {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  return e;
}

}  // namespace oracle
