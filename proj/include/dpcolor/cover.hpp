#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

using Color = int;

/// Per-vertex color lists, each kept sorted and duplicate-free.
struct ListAssignment {
  std::vector<std::vector<Color>> lists;

  static ListAssignment uniform(int n, int k) {
    std::vector<Color> base(static_cast<std::size_t>(std::max(k, 0)));
    std::iota(base.begin(), base.end(), 1);
    return ListAssignment{std::vector<std::vector<Color>>(static_cast<std::size_t>(n), base)};
  }

  static ListAssignment from(std::vector<std::vector<Color>> raw) {
    for (auto& l : raw) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return ListAssignment{std::move(raw)};
  }

  const std::vector<Color>& at(Vertex v) const { return lists.at(static_cast<std::size_t>(v)); }
  std::size_t size() const noexcept { return lists.size(); }

  bool allows(Vertex v, Color c) const {
    const auto& l = at(v);
    return std::binary_search(l.begin(), l.end(), c);
  }

  /// Index of c within L(v), or -1.
  int position(Vertex v, Color c) const {
    const auto& l = at(v);
    auto it = std::lower_bound(l.begin(), l.end(), c);
    return (it != l.end() && *it == c) ? static_cast<int>(it - l.begin()) : -1;
  }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

/// Pairs (color at edge.u, color at edge.v) joined in the cover.
using Matching = std::vector<std::pair<Color, Color>>;

/// A cover of `host`: fibers {v} x L(v), an implicit clique on each fiber,
/// and one matching per host edge (indexed by host edge id).
struct Cover {
  Graph host;
  ListAssignment lists;
  std::vector<Matching> matchings;

  static Cover empty_over(Graph g, ListAssignment l) {
    Cover c{std::move(g), std::move(l), {}};
    c.matchings.assign(static_cast<std::size_t>(c.host.edge_count()), {});
    return c;
  }

  /// Sets the matching of edge {a,b}; pairs are given as (color at a, color at b).
  void set_matching(Vertex a, Vertex b, Matching pairs) {
    auto id = host.edge_id(a, b);
    if (!id) throw Error(ErrorKind::IndexOutOfRange, "no edge " + std::to_string(a) + "-" + std::to_string(b));
    if (a != host.edge(*id).u) {
      for (auto& p : pairs) std::swap(p.first, p.second);
    }
    std::sort(pairs.begin(), pairs.end());
    matchings.at(static_cast<std::size_t>(*id)) = std::move(pairs);
  }

  /// Color at `to` matched with color c at `from` across edge {from,to}.
  std::optional<Color> partner(Vertex from, Vertex to, Color c) const {
    auto id = host.edge_id(from, to);
    if (!id) return std::nullopt;
    bool forward = from == host.edge(*id).u;
    for (auto [x, y] : matchings[static_cast<std::size_t>(*id)]) {
      if (forward && x == c) return y;
      if (!forward && y == c) return x;
    }
    return std::nullopt;
  }

  bool joined(Vertex a, Color ca, Vertex b, Color cb) const {
    auto p = partner(a, b, ca);
    return p && *p == cb;
  }

  std::size_t cross_edge_count() const {
    std::size_t total = 0;
    for (const auto& m : matchings) total += m.size();
    return total;
  }

  friend bool operator==(const Cover&, const Cover&) = default;
};

struct CoverViolation {
  int clause = 0;  // 1..4, matching the four cover conditions
  std::string witness;
};

/// nullopt when the cover is valid, else the first violated condition.
inline std::optional<CoverViolation> validate_cover(const Cover& c) {
  const Graph& g = c.host;
  if (static_cast<int>(c.lists.size()) != g.vertex_count()) {
    return CoverViolation{1, "list count " + std::to_string(c.lists.size()) + " != vertex count " +
                                 std::to_string(g.vertex_count())};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& l = c.lists.at(v);
    if (!std::is_sorted(l.begin(), l.end()) || std::adjacent_find(l.begin(), l.end()) != l.end()) {
      return CoverViolation{1, "list of vertex " + std::to_string(v) + " is not a sorted set"};
    }
  }
  if (static_cast<int>(c.matchings.size()) != g.edge_count()) {
    return CoverViolation{4, "matchings present for " + std::to_string(c.matchings.size()) + " pairs, host has " +
                                 std::to_string(g.edge_count()) + " edges"};
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    std::vector<Color> left, right;
    for (auto [x, y] : c.matchings[static_cast<std::size_t>(id)]) {
      if (!c.lists.allows(e.u, x) || !c.lists.allows(e.v, y)) {
        return CoverViolation{1, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} joins (" +
                                     std::to_string(x) + "," + std::to_string(y) + ") outside the fibers"};
      }
      left.push_back(x);
      right.push_back(y);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    auto dl = std::adjacent_find(left.begin(), left.end());
    if (dl != left.end()) {
      return CoverViolation{3, "color " + std::to_string(*dl) + " of vertex " + std::to_string(e.u) +
                                   " matched twice on edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"};
    }
    auto dr = std::adjacent_find(right.begin(), right.end());
    if (dr != right.end()) {
      return CoverViolation{3, "color " + std::to_string(*dr) + " of vertex " + std::to_string(e.v) +
                                   " matched twice on edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"};
    }
  }
  return std::nullopt;
}

/// Joins equal colors across every edge; DP-coloring of this cover is
/// ordinary list coloring.
inline Cover diagonal_cover(const Graph& g, const ListAssignment& l) {
  Cover c = Cover::empty_over(g, l);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const auto& a = l.at(e.u);
    const auto& b = l.at(e.v);
    Matching m;
    std::vector<Color> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    for (Color x : common) m.emplace_back(x, x);
    c.matchings[static_cast<std::size_t>(id)] = std::move(m);
  }
  return c;
}

inline void require_equal_lists(const Graph& g, const ListAssignment& l) {
  for (const Edge& e : g.edges()) {
    if (l.at(e.u).size() != l.at(e.v).size()) {
      throw Error(ErrorKind::UnequalLists, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} joins lists of size " +
                                               std::to_string(l.at(e.u).size()) + " and " + std::to_string(l.at(e.v).size()));
    }
  }
}

/// Random cover, a deterministic function of the seed. With `perfect`, every
/// matching is a bijection; otherwise matchings are random partial injections.
inline Cover random_cover(const Graph& g, const ListAssignment& l, std::uint64_t seed, bool perfect) {
  if (perfect) require_equal_lists(g, l);
  std::mt19937_64 rng(seed);
  Cover c = Cover::empty_over(g, l);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    std::vector<Color> a = l.at(e.u);
    std::vector<Color> b = l.at(e.v);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    std::size_t size = std::min(a.size(), b.size());
    if (!perfect) size = std::uniform_int_distribution<std::size_t>(0, size)(rng);
    Matching m;
    for (std::size_t i = 0; i < size; ++i) m.emplace_back(a[i], b[i]);
    std::sort(m.begin(), m.end());
    c.matchings[static_cast<std::size_t>(id)] = std::move(m);
  }
  return c;
}

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t factorial(std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= k; ++i) r = saturating_mul(r, i);
  return r;
}

}  // namespace detail

/// Product over non-fixed edges of |L(u)|!; saturates at uint64 max.
inline std::uint64_t perfect_cover_count(const Graph& g, const ListAssignment& l, const std::vector<char>& fixed = {}) {
  std::uint64_t total = 1;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (!fixed.empty() && fixed[static_cast<std::size_t>(id)]) continue;
    total = detail::saturating_mul(total, detail::factorial(l.at(g.edge(id).u).size()));
  }
  return total;
}

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Calls visit(cover) for every cover whose matchings are all bijections,
/// each exactly once. Edges flagged in `fixed` keep the order-preserving
/// bijection instead of ranging over all of them. Enumeration stops early
/// when visit returns false. Returns the number of covers visited.
template <class Visitor>
std::uint64_t for_each_perfect_cover(const Graph& g, const ListAssignment& l, std::uint64_t budget, Visitor&& visit,
                                     const std::vector<char>& fixed = {}) {
  require_equal_lists(g, l);
  const std::uint64_t count = perfect_cover_count(g, l, fixed);
  if (count > budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(count) + " perfect covers exceed budget " + std::to_string(budget));
  }
  const int m = g.edge_count();
  std::vector<std::vector<std::size_t>> perm(static_cast<std::size_t>(m));
  for (int id = 0; id < m; ++id) {
    perm[static_cast<std::size_t>(id)].resize(l.at(g.edge(id).u).size());
    std::iota(perm[static_cast<std::size_t>(id)].begin(), perm[static_cast<std::size_t>(id)].end(), 0);
  }
  auto is_fixed = [&](int id) { return !fixed.empty() && fixed[static_cast<std::size_t>(id)]; };

  Cover c = Cover::empty_over(g, l);
  std::uint64_t visited = 0;
  while (true) {
    for (int id = 0; id < m; ++id) {
      const Edge& e = g.edge(id);
      const auto& a = l.at(e.u);
      const auto& b = l.at(e.v);
      Matching mt;
      for (std::size_t i = 0; i < a.size(); ++i) mt.emplace_back(a[i], b[perm[static_cast<std::size_t>(id)][i]]);
      c.matchings[static_cast<std::size_t>(id)] = std::move(mt);
    }
    ++visited;
    if (!visit(static_cast<const Cover&>(c))) return visited;
    // odometer: the last free edge advances fastest
    int id = m - 1;
    for (; id >= 0; --id) {
      if (is_fixed(id)) continue;
      auto& p = perm[static_cast<std::size_t>(id)];
      if (std::next_permutation(p.begin(), p.end())) break;
    }
    if (id < 0) return visited;
  }
}

/// Every cover over the given perfect-matching family, materialized.
inline std::vector<Cover> enumerate_perfect_covers(const Graph& g, const ListAssignment& l,
                                                   std::uint64_t budget = kDefaultBudget) {
  std::vector<Cover> out;
  for_each_perfect_cover(g, l, budget, [&](const Cover& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

/// All partial injections between lists a and b (including the empty one),
/// as (a color, b color) pairs.
inline std::vector<Matching> partial_matchings(const std::vector<Color>& a, const std::vector<Color>& b) {
  std::vector<Matching> out;
  Matching current;
  std::vector<char> used(b.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == a.size()) {
      out.push_back(current);
      return;
    }
    self(self, i + 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      current.emplace_back(a[i], b[j]);
      self(self, i + 1);
      current.pop_back();
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace dpcolor
