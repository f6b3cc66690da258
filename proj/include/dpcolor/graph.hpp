#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"

namespace dpcolor {

using Vertex = int;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are kept sorted and
/// every adjacency list is sorted, so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  static Graph build(int n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
    if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "edge {" + std::to_string(a) + "," + std::to_string(b) + "} with n=" + std::to_string(n));
      }
      if (a == b) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
      g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} listed twice");
    }
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t id = 0; id < g.edges_.size(); ++id) {
      const Edge& e = g.edges_[id];
      g.adj_[e.u].push_back({e.v, static_cast<int>(id)});
      g.adj_[e.v].push_back({e.u, static_cast<int>(id)});
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
  }

  static Graph build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
    return build(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(adj_.at(static_cast<std::size_t>(v)).size());
    for (auto [w, id] : adj_[static_cast<std::size_t>(v)]) out.push_back(w);
    return out;
  }

  /// (neighbor, edge id) pairs sorted by neighbor.
  const std::vector<std::pair<Vertex, int>>& incident(Vertex v) const {
    return adj_.at(static_cast<std::size_t>(v));
  }

  std::optional<int> edge_id(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return std::nullopt;
    const auto& list = adj_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(list.begin(), list.end(), std::pair<Vertex, int>{b, -1});
    if (it == list.end() || it->first != b) return std::nullopt;
    return it->second;
  }

  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  bool connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (auto [w, id] : adj_[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == n_;
  }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<Vertex, int>>> adj_;
};

/// Sorted, duplicate-free set of vertices of some host graph.
class VertexSet {
 public:
  VertexSet() = default;

  static VertexSet of(const Graph& host, std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Vertex v : members) {
      if (!host.contains(v)) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    }
    VertexSet s;
    s.members_ = std::move(members);
    return s;
  }

  static VertexSet all(const Graph& host) {
    VertexSet s;
    s.members_.resize(static_cast<std::size_t>(host.vertex_count()));
    for (Vertex v = 0; v < host.vertex_count(); ++v) s.members_[static_cast<std::size_t>(v)] = v;
    return s;
  }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Complement within 0..n-1.
  VertexSet complement(const Graph& host) const {
    VertexSet s;
    for (Vertex v = 0; v < host.vertex_count(); ++v) {
      if (!contains(v)) s.members_.push_back(v);
    }
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Induced subgraph together with the map from its indices back to the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // local index -> host vertex
  std::vector<int> from_host;     // host vertex -> local index or -1
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  InducedSubgraph out;
  out.from_host.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  for (Vertex v : subset) {
    if (!g.contains(v)) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
    out.from_host[static_cast<std::size_t>(v)] = static_cast<int>(out.to_host.size());
    out.to_host.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const Edge& e : g.edges()) {
    int a = out.from_host[static_cast<std::size_t>(e.u)];
    int b = out.from_host[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.emplace_back(a, b);
  }
  out.graph = Graph::build(static_cast<int>(out.to_host.size()), kept);
  return out;
}

/// Edges with one endpoint in `x` and the other in `y`, in host edge order.
inline std::vector<Edge> cross_edges(const Graph& g, const VertexSet& x, const VertexSet& y) {
  for (Vertex v : x) {
    if (y.contains(v)) throw Error(ErrorKind::OverlappingSets, "vertex " + std::to_string(v) + " in both sets");
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((x.contains(e.u) && y.contains(e.v)) || (x.contains(e.v) && y.contains(e.u))) out.push_back(e);
  }
  return out;
}

/// Cycle as a vertex sequence in canonical form: starts at its smallest
/// vertex, and the second vertex is smaller than the last.
using Cycle = std::vector<Vertex>;

namespace detail {

// Visits every cycle of length k once, in canonical form. Stops early when
// the visitor returns false.
inline void for_each_cycle(const Graph& g, int k, const std::function<bool(const Cycle&)>& visit) {
  if (k < 3) throw Error(ErrorKind::BadLength, "cycle length must be at least 3, got " + std::to_string(k));
  const int n = g.vertex_count();
  if (k > n) return;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  Cycle path;
  path.reserve(static_cast<std::size_t>(k));
  bool stop = false;

  std::function<void(Vertex)> extend = [&](Vertex start) {
    Vertex tail = path.back();
    if (static_cast<int>(path.size()) == k) {
      if (g.adjacent(tail, start) && path[1] < path.back()) {
        if (!visit(path)) stop = true;
      }
      return;
    }
    for (auto [w, id] : g.incident(tail)) {
      if (stop) return;
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };

  for (Vertex s = 0; s < n && !stop; ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
}

}  // namespace detail

inline std::vector<Cycle> list_cycles(const Graph& g, int k) {
  std::vector<Cycle> out;
  detail::for_each_cycle(g, k, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

inline bool has_cycle_of_length(const Graph& g, int k) {
  bool found = false;
  detail::for_each_cycle(g, k, [&](const Cycle&) {
    found = true;
    return false;
  });
  return found;
}

/// True when the graph has neither a 4-cycle nor a 6-cycle.
inline bool is_no46(const Graph& g) { return !has_cycle_of_length(g, 4) && !has_cycle_of_length(g, 6); }

inline void require_no46(const Graph& g) {
  for (int k : {4, 6}) {
    detail::for_each_cycle(g, k, [&](const Cycle& c) -> bool {
      std::string text;
      for (Vertex v : c) text += (text.empty() ? "" : "-") + std::to_string(v);
      throw Error(ErrorKind::ForbiddenCyclePresent, std::to_string(k) + "-cycle " + text);
    });
  }
}

}  // namespace dpcolor
