#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

/// One chosen color per vertex: the transversal {(v, colors[v])} of the fibers.
struct RepSet {
  std::vector<Color> colors;

  friend bool operator==(const RepSet&, const RepSet&) = default;
};

/// Per-vertex number of cover edges inside the chosen transversal.
struct ImproprietyProfile {
  std::vector<int> counts;

  int max() const { return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()); }
  friend bool operator==(const ImproprietyProfile&, const ImproprietyProfile&) = default;
};

inline ImproprietyProfile impropriety(const Cover& c, const RepSet& s) {
  const Graph& g = c.host;
  if (static_cast<int>(s.colors.size()) != g.vertex_count()) {
    throw Error(ErrorKind::PartialAssignment, "coloring covers " + std::to_string(s.colors.size()) + " of " +
                                                  std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!c.lists.allows(v, s.colors[static_cast<std::size_t>(v)])) {
      throw Error(ErrorKind::NotInList, "color " + std::to_string(s.colors[static_cast<std::size_t>(v)]) +
                                            " not in the list of vertex " + std::to_string(v));
    }
  }
  ImproprietyProfile p;
  p.counts.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    if (c.joined(e.u, s.colors[static_cast<std::size_t>(e.u)], e.v, s.colors[static_cast<std::size_t>(e.v)])) {
      ++p.counts[static_cast<std::size_t>(e.u)];
      ++p.counts[static_cast<std::size_t>(e.v)];
    }
  }
  return p;
}

struct SolveOptions {
  std::uint64_t node_budget = kDefaultBudget;
};

namespace detail {

inline void require_nonempty_lists(const Cover& c) {
  for (Vertex v = 0; v < c.host.vertex_count(); ++v) {
    if (c.lists.at(v).empty()) throw Error(ErrorKind::EmptyList, "vertex " + std::to_string(v) + " has an empty list");
  }
}

// Backtracking search for a transversal with every vertex in at most d
// cover edges. Vertices go in descending-degree order; conflict counters
// are maintained incrementally and every unassigned neighbor of the last
// assigned vertex must keep an option that does not overflow d.
class RepSetSearch {
 public:
  RepSetSearch(const Cover& c, int d, SolveOptions opts) : cover_(c), d_(d), opts_(opts) {
    const Graph& g = c.host;
    const int n = g.vertex_count();
    nbrs_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      const auto& lv = c.lists.at(v);
      for (auto [w, id] : g.incident(v)) {
        Link link{w, std::vector<int>(lv.size(), -1)};
        const Edge& e = g.edge(id);
        for (auto [x, y] : c.matchings[static_cast<std::size_t>(id)]) {
          Color mine = (v == e.u) ? x : y;
          Color theirs = (v == e.u) ? y : x;
          int i = c.lists.position(v, mine);
          int j = c.lists.position(w, theirs);
          if (i >= 0 && j >= 0) link.partner[static_cast<std::size_t>(i)] = j;
        }
        nbrs_[static_cast<std::size_t>(v)].push_back(std::move(link));
      }
    }
    order_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order_[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    chosen_.assign(static_cast<std::size_t>(n), -1);
    conflicts_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<RepSet> run() {
    if (!search(0)) return std::nullopt;
    RepSet s;
    for (Vertex v = 0; v < cover_.host.vertex_count(); ++v) {
      s.colors.push_back(cover_.lists.at(v)[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(v)])]);
    }
    return s;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct Link {
    Vertex to;
    std::vector<int> partner;  // my list index -> neighbor list index or -1
  };

  // Conflicts option i of v would create with assigned neighbors, or -1 if
  // it would push v or one of them past d.
  int cost(Vertex v, int i) const {
    int count = 0;
    for (const Link& link : nbrs_[static_cast<std::size_t>(v)]) {
      int cw = chosen_[static_cast<std::size_t>(link.to)];
      if (cw < 0 || link.partner[static_cast<std::size_t>(i)] != cw) continue;
      if (conflicts_[static_cast<std::size_t>(link.to)] + 1 > d_) return -1;
      ++count;
    }
    return count > d_ ? -1 : count;
  }

  bool has_option(Vertex v) const {
    const int size = static_cast<int>(cover_.lists.at(v).size());
    for (int i = 0; i < size; ++i) {
      if (cost(v, i) >= 0) return true;
    }
    return false;
  }

  void assign(Vertex v, int i, int delta) {
    for (const Link& link : nbrs_[static_cast<std::size_t>(v)]) {
      int cw = chosen_[static_cast<std::size_t>(link.to)];
      if (cw >= 0 && link.partner[static_cast<std::size_t>(i)] == cw) {
        conflicts_[static_cast<std::size_t>(link.to)] += delta;
        conflicts_[static_cast<std::size_t>(v)] += delta;
      }
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    const int size = static_cast<int>(cover_.lists.at(v).size());
    std::vector<std::pair<int, int>> options;
    for (int i = 0; i < size; ++i) {
      int c = cost(v, i);
      if (c >= 0) options.emplace_back(c, i);
    }
    std::sort(options.begin(), options.end());
    for (auto [c, i] : options) {
      if (++nodes_ > opts_.node_budget) {
        throw Error(ErrorKind::BudgetExceeded, "search exceeded " + std::to_string(opts_.node_budget) + " nodes");
      }
      assign(v, i, +1);
      chosen_[static_cast<std::size_t>(v)] = i;
      bool alive = true;
      for (const Link& link : nbrs_[static_cast<std::size_t>(v)]) {
        if (chosen_[static_cast<std::size_t>(link.to)] < 0 && !has_option(link.to)) {
          alive = false;
          break;
        }
      }
      if (alive && search(depth + 1)) return true;
      chosen_[static_cast<std::size_t>(v)] = -1;
      assign(v, i, -1);
    }
    return false;
  }

  const Cover& cover_;
  int d_;
  SolveOptions opts_;
  std::vector<std::vector<Link>> nbrs_;
  std::vector<Vertex> order_;
  std::vector<int> chosen_;
  std::vector<int> conflicts_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// A transversal whose cover-induced subgraph has maximum degree <= d, or
/// nullopt when none exists. Throws EmptyList if some fiber is empty.
inline std::optional<RepSet> find_rep_set(const Cover& c, int d, SolveOptions opts = {}) {
  if (d < 0) throw Error(ErrorKind::ContractViolation, "impropriety bound must be non-negative");
  detail::require_nonempty_lists(c);
  return detail::RepSetSearch(c, d, opts).run();
}

/// Exhaustive reference solver: walks every total assignment in odometer
/// order and tests it directly against the cover.
inline std::optional<RepSet> brute_force_rep_set(const Cover& c, int d, std::uint64_t budget = kDefaultBudget) {
  detail::require_nonempty_lists(c);
  const Graph& g = c.host;
  const int n = g.vertex_count();
  std::uint64_t total = 1;
  for (Vertex v = 0; v < n; ++v) total = detail::saturating_mul(total, c.lists.at(v).size());
  if (total > budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(total) + " assignments exceed budget " + std::to_string(budget));
  }
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  RepSet s;
  s.colors.resize(static_cast<std::size_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n));
  while (true) {
    for (Vertex v = 0; v < n; ++v) s.colors[static_cast<std::size_t>(v)] = c.lists.at(v)[pick[static_cast<std::size_t>(v)]];
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (c.joined(e.u, s.colors[static_cast<std::size_t>(e.u)], e.v, s.colors[static_cast<std::size_t>(e.v)])) {
        if (++deg[static_cast<std::size_t>(e.u)] > d || ++deg[static_cast<std::size_t>(e.v)] > d) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return s;
    int v = n - 1;
    for (; v >= 0; --v) {
      if (++pick[static_cast<std::size_t>(v)] < c.lists.at(v).size()) break;
      pick[static_cast<std::size_t>(v)] = 0;
    }
    if (v < 0) return std::nullopt;
  }
}

struct Exhaustive {};
struct Sampled {
  std::uint64_t count = 100;
  std::uint64_t seed = 0;
};
using QuantifierMode = std::variant<Exhaustive, Sampled>;

struct DpVerdict {
  bool colorable = true;
  std::optional<Cover> witness;  // an uncolorable cover when !colorable
  std::uint64_t covers_checked = 0;
};

/// Edges of a BFS spanning forest, rooted at the smallest vertex of each component.
inline std::vector<char> spanning_forest_mask(const Graph& g) {
  std::vector<char> mask(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto [w, id] : g.incident(queue[head])) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        mask[static_cast<std::size_t>(id)] = 1;
        queue.push_back(w);
      }
    }
  }
  return mask;
}

struct DpOptions {
  std::uint64_t cover_budget = kDefaultBudget;
  SolveOptions solve{};
  // Renaming colors fiber by fiber turns any perfect cover into one that is
  // the identity on a spanning forest, so only the remaining edges range.
  bool fix_spanning_forest = true;
};

/// Whether every perfect cover over the lists {1..k} admits a transversal of
/// impropriety <= d (exhaustive), or whether `count` seeded random perfect
/// covers all do (sampled).
inline DpVerdict is_dp_colorable(const Graph& g, int k, int d, QuantifierMode mode = Exhaustive{}, DpOptions opts = {}) {
  const ListAssignment lists = ListAssignment::uniform(g.vertex_count(), k);
  DpVerdict verdict;
  if (g.vertex_count() > 0 && k <= 0) {
    verdict.colorable = false;
    verdict.witness = Cover::empty_over(g, lists);
    return verdict;
  }
  if (const auto* sampled = std::get_if<Sampled>(&mode)) {
    for (std::uint64_t i = 0; i < sampled->count; ++i) {
      Cover c = random_cover(g, lists, sampled->seed + i, true);
      ++verdict.covers_checked;
      if (!find_rep_set(c, d, opts.solve)) {
        verdict.colorable = false;
        verdict.witness = std::move(c);
        break;
      }
    }
    return verdict;
  }
  const std::vector<char> fixed = opts.fix_spanning_forest ? spanning_forest_mask(g) : std::vector<char>{};
  verdict.covers_checked = for_each_perfect_cover(
      g, lists, opts.cover_budget,
      [&](const Cover& c) {
        if (find_rep_set(c, d, opts.solve)) return true;
        verdict.colorable = false;
        verdict.witness = c;
        return false;
      },
      fixed);
  return verdict;
}

/// Least k such that every perfect k-cover admits an independent transversal.
inline int dp_chromatic(const Graph& g, DpOptions opts = {}) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k) {
    if (is_dp_colorable(g, k, 0, Exhaustive{}, opts).colorable) return k;
  }
}

/// (L,d)*-coloring: a choice from each list such that every color class
/// induces maximum degree <= d. Solved through the diagonal cover.
inline std::optional<RepSet> list_relaxed_colorable(const Graph& g, const ListAssignment& l, int d, SolveOptions opts = {}) {
  return find_rep_set(diagonal_cover(g, l), d, opts);
}

}  // namespace dpcolor
