#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/plane.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

/// Colors chosen so far, indexed by host vertex.
using PartialColoring = std::vector<std::optional<Color>>;

/// A cover restricted to a vertex subset, with index maps to the host.
struct SubCover {
  Cover cover;
  std::vector<Vertex> to_host;
  std::vector<int> from_host;
};

inline SubCover restrict_to(const Cover& c, const VertexSet& keep) {
  InducedSubgraph sub = induced_subgraph(c.host, keep);
  ListAssignment lists;
  for (Vertex h : sub.to_host) lists.lists.push_back(c.lists.at(h));
  Cover out = Cover::empty_over(sub.graph, std::move(lists));
  for (int id = 0; id < out.host.edge_count(); ++id) {
    const Edge& e = out.host.edge(id);
    Vertex hu = sub.to_host[static_cast<std::size_t>(e.u)];
    Vertex hv = sub.to_host[static_cast<std::size_t>(e.v)];
    int hid = *c.host.edge_id(hu, hv);
    Matching m = c.matchings[static_cast<std::size_t>(hid)];
    // local endpoints keep the host order because to_host is increasing
    out.matchings[static_cast<std::size_t>(id)] = std::move(m);
  }
  return SubCover{std::move(out), std::move(sub.to_host), std::move(sub.from_host)};
}

/// The cover on G - F: lists and matchings limited to the remaining vertices.
inline SubCover restrict(const Cover& c, const VertexSet& excised) {
  for (Vertex v : excised) {
    if (!c.host.contains(v)) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  return restrict_to(c, excised.complement(c.host));
}

/// Lists and cover left on an excised set F once G - F is colored.
struct ResidualInstance {
  VertexSet excised;
  std::vector<Vertex> to_host;  // local index in `cover` -> host vertex
  Cover cover;                  // cover.lists is the residual list assignment
};

/// Removes from each L(x), x in F, every color joined to the color chosen at
/// a neighbor of x outside F, then restricts the cover to what survives.
inline ResidualInstance residual(const Cover& c, const PartialColoring& outside, const VertexSet& excised) {
  const Graph& g = c.host;
  if (static_cast<int>(outside.size()) != g.vertex_count()) {
    throw Error(ErrorKind::PartialAssignment, "partial coloring has wrong length");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (excised.contains(v)) continue;
    const auto& col = outside[static_cast<std::size_t>(v)];
    if (!col) throw Error(ErrorKind::PartialAssignment, "vertex " + std::to_string(v) + " outside F is uncolored");
    if (!c.lists.allows(v, *col)) {
      throw Error(ErrorKind::NotInList, "color " + std::to_string(*col) + " not in the list of vertex " + std::to_string(v));
    }
  }
  SubCover sub = restrict_to(c, excised);
  ResidualInstance out{excised, sub.to_host, {}};
  ListAssignment lists;
  for (Vertex h : sub.to_host) {
    std::vector<Color> kept;
    for (Color col : c.lists.at(h)) {
      bool removed = false;
      for (auto [u, id] : g.incident(h)) {
        if (excised.contains(u)) continue;
        if (c.joined(h, col, u, *outside[static_cast<std::size_t>(u)])) {
          removed = true;
          break;
        }
      }
      if (!removed) kept.push_back(col);
    }
    lists.lists.push_back(std::move(kept));
  }
  out.cover = Cover::empty_over(sub.cover.host, lists);
  for (int id = 0; id < sub.cover.host.edge_count(); ++id) {
    const Edge& e = sub.cover.host.edge(id);
    Matching m;
    for (auto [x, y] : sub.cover.matchings[static_cast<std::size_t>(id)]) {
      if (lists.allows(e.u, x) && lists.allows(e.v, y)) m.emplace_back(x, y);
    }
    out.cover.matchings[static_cast<std::size_t>(id)] = std::move(m);
  }
  return out;
}

/// Combines a coloring of G - F with a coloring of the residual instance.
/// The absence of cover edges between the two parts and the final
/// impropriety bound are both checked; either failure is a ContractViolation.
inline RepSet merge(const Cover& c, const PartialColoring& outside, const ResidualInstance& inst, const RepSet& inner,
                    int d = 1) {
  const Graph& g = c.host;
  if (inner.colors.size() != inst.to_host.size()) {
    throw Error(ErrorKind::ContractViolation, "inner coloring does not cover F");
  }
  RepSet merged;
  merged.colors.resize(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (inst.excised.contains(v)) continue;
    if (!outside.at(static_cast<std::size_t>(v))) throw Error(ErrorKind::ContractViolation, "vertex " + std::to_string(v) + " uncolored");
    merged.colors[static_cast<std::size_t>(v)] = *outside[static_cast<std::size_t>(v)];
  }
  for (std::size_t i = 0; i < inst.to_host.size(); ++i) {
    Vertex x = inst.to_host[i];
    Color col = inner.colors[i];
    if (!inst.cover.lists.allows(static_cast<Vertex>(i), col)) {
      throw Error(ErrorKind::ContractViolation, "vertex " + std::to_string(x) + " uses color " + std::to_string(col) +
                                                    " outside its residual list");
    }
    merged.colors[static_cast<std::size_t>(x)] = col;
  }
  for (Vertex x : inst.excised) {
    for (auto [u, id] : g.incident(x)) {
      if (inst.excised.contains(u)) continue;
      if (c.joined(x, merged.colors[static_cast<std::size_t>(x)], u, merged.colors[static_cast<std::size_t>(u)])) {
        throw Error(ErrorKind::ContractViolation, "cover edge between F vertex " + std::to_string(x) + " and outside vertex " +
                                                      std::to_string(u));
      }
    }
  }
  const int worst = impropriety(c, merged).max();
  if (worst > d) {
    throw Error(ErrorKind::ContractViolation, "merged impropriety " + std::to_string(worst) + " exceeds " + std::to_string(d));
  }
  return merged;
}

enum class ConfigKind { LowVertex, AdjacentThrees, FourWithThreeThrees };

constexpr std::string_view to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::LowVertex: return "LowVertex";
    case ConfigKind::AdjacentThrees: return "AdjacentThrees";
    case ConfigKind::FourWithThreeThrees: return "FourWithThreeThrees";
  }
  return "Unknown";
}

inline std::optional<ConfigKind> parse_config_kind(std::string_view text) {
  for (ConfigKind k : {ConfigKind::LowVertex, ConfigKind::AdjacentThrees, ConfigKind::FourWithThreeThrees}) {
    if (text == to_string(k)) return k;
  }
  if (text == "low-vertex") return ConfigKind::LowVertex;
  if (text == "adjacent-threes") return ConfigKind::AdjacentThrees;
  if (text == "four-with-three-threes") return ConfigKind::FourWithThreeThrees;
  return std::nullopt;
}

/// An excisable configuration. For FourWithThreeThrees the first vertex is
/// the 4-vertex and the rest are three of its 3-neighbors.
struct ReducibleConfig {
  ConfigKind kind;
  std::vector<Vertex> vertices;

  friend bool operator==(const ReducibleConfig&, const ReducibleConfig&) = default;
};

/// First configuration by priority LowVertex > AdjacentThrees >
/// FourWithThreeThrees, smallest vertex indices first.
inline std::optional<ReducibleConfig> find_reducible_config(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) <= 2) return ReducibleConfig{ConfigKind::LowVertex, {v}};
  }
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 3 && g.degree(e.v) == 3) return ReducibleConfig{ConfigKind::AdjacentThrees, {e.u, e.v}};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 4) continue;
    std::vector<Vertex> threes;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) == 3) threes.push_back(w);
    }
    if (threes.size() >= 3) {
      // no two 3-vertices are adjacent here, so the three leaves are independent
      return ReducibleConfig{ConfigKind::FourWithThreeThrees, {v, threes[0], threes[1], threes[2]}};
    }
  }
  return std::nullopt;
}

/// Structure left on F after excision: the configuration graph alone.
inline Graph config_graph(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::LowVertex: return Graph::build(1, {});
    case ConfigKind::AdjacentThrees: return Graph::build(2, {{0, 1}});
    case ConfigKind::FourWithThreeThrees: return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
  }
  return Graph{};
}

/// Residual list sizes guaranteed when every list has size 3.
inline std::vector<int> config_floor_sizes(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::LowVertex: return {1};
    case ConfigKind::AdjacentThrees: return {1, 1};
    case ConfigKind::FourWithThreeThrees: return {2, 1, 1, 1};
  }
  return {};
}

struct LemmaCheck {
  ConfigKind kind;
  std::vector<int> sizes;
  std::uint64_t covers = 0;
  std::uint64_t colorable = 0;
  std::optional<Cover> counterexample;

  bool ok() const { return !counterexample && covers == colorable; }
};

/// Enumerates every cover (all partial matchings on every edge) of the
/// configuration graph with lists {1..size} and brute-forces a
/// 1-representative set for each.
inline LemmaCheck verify_config_reducible(ConfigKind kind, std::vector<int> sizes = {}) {
  if (sizes.empty()) sizes = config_floor_sizes(kind);
  const Graph g = config_graph(kind);
  if (static_cast<int>(sizes.size()) != g.vertex_count()) {
    throw Error(ErrorKind::ContractViolation, "expected " + std::to_string(g.vertex_count()) + " list sizes");
  }
  ListAssignment lists;
  for (int s : sizes) lists.lists.push_back(ListAssignment::uniform(1, s).lists[0]);

  std::vector<std::vector<Matching>> options;
  for (const Edge& e : g.edges()) options.push_back(partial_matchings(lists.at(e.u), lists.at(e.v)));

  LemmaCheck check{kind, sizes, 0, 0, std::nullopt};
  std::vector<std::size_t> pick(options.size(), 0);
  Cover c = Cover::empty_over(g, lists);
  while (true) {
    for (std::size_t id = 0; id < options.size(); ++id) {
      Matching m = options[id][pick[id]];
      std::sort(m.begin(), m.end());
      c.matchings[id] = std::move(m);
    }
    ++check.covers;
    bool colorable = false;
    try {
      colorable = brute_force_rep_set(c, 1).has_value();
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::EmptyList) throw;
    }
    if (colorable) {
      ++check.colorable;
    } else if (!check.counterexample) {
      check.counterexample = c;
    }
    std::size_t id = options.size();
    while (id > 0) {
      --id;
      if (++pick[id] < options[id].size()) break;
      pick[id] = 0;
      if (id == 0) return check;
    }
    if (options.empty()) return check;
  }
}

struct TraceStep {
  ConfigKind kind;
  std::vector<Vertex> excised;      // host indices, in configuration order
  std::vector<int> residual_sizes;  // |L*| per excised vertex
  std::vector<Color> chosen;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct PipelineResult {
  RepSet coloring;
  std::vector<TraceStep> trace;  // in excision order; colored in reverse
};

namespace detail {

inline std::string describe_graph(const Graph& g) {
  std::string text = "n=" + std::to_string(g.vertex_count()) + " edges:";
  for (const Edge& e : g.edges()) text += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return text;
}

// Colors the residual instance of one configuration by the rule its
// reducibility argument uses. Local indices follow config.vertices order
// mapped through the sorted excised set.
inline RepSet color_configuration(const ReducibleConfig& config, const ResidualInstance& inst) {
  auto local = [&](Vertex host) {
    auto it = std::lower_bound(inst.to_host.begin(), inst.to_host.end(), host);
    return static_cast<Vertex>(it - inst.to_host.begin());
  };
  RepSet out;
  out.colors.assign(inst.to_host.size(), 0);
  auto first_color = [&](Vertex x) {
    const auto& l = inst.cover.lists.at(x);
    if (l.empty()) {
      throw Error(ErrorKind::ContractViolation, "residual list of vertex " + std::to_string(inst.to_host[static_cast<std::size_t>(x)]) + " is empty");
    }
    return l.front();
  };
  if (config.kind != ConfigKind::FourWithThreeThrees) {
    for (Vertex host : config.vertices) out.colors[static_cast<std::size_t>(local(host))] = first_color(local(host));
    return out;
  }
  const Vertex center = local(config.vertices[0]);
  std::vector<Vertex> leaves;
  for (std::size_t i = 1; i < config.vertices.size(); ++i) {
    Vertex leaf = local(config.vertices[i]);
    leaves.push_back(leaf);
    out.colors[static_cast<std::size_t>(leaf)] = first_color(leaf);
  }
  for (Color col : inst.cover.lists.at(center)) {
    int hits = 0;
    for (Vertex leaf : leaves) {
      if (inst.cover.joined(center, col, leaf, out.colors[static_cast<std::size_t>(leaf)])) ++hits;
    }
    if (hits <= 1) {
      out.colors[static_cast<std::size_t>(center)] = col;
      return out;
    }
  }
  throw Error(ErrorKind::ContractViolation, "no center color meets at most one leaf");
}

}  // namespace detail

/// Improper DP-coloring (impropriety <= 1) of a graph with no 4- or 6-cycles
/// from any cover with lists of size >= 3: repeatedly excise a reducible
/// configuration, then color the configurations back in reverse order from
/// their residual lists.
inline PipelineResult color_no46(const Graph& g, const Cover& c) {
  if (!(c.host == g)) throw Error(ErrorKind::ContractViolation, "cover host differs from the graph");
  require_no46(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c.lists.at(v).size() < 3) {
      throw Error(ErrorKind::ListTooSmall, "vertex " + std::to_string(v) + " has " + std::to_string(c.lists.at(v).size()) + " colors");
    }
  }

  struct Excision {
    ReducibleConfig config;  // host indices
    VertexSet alive;         // vertices present when the configuration was found
  };
  std::vector<Excision> excisions;
  std::vector<char> alive_mask(static_cast<std::size_t>(g.vertex_count()), 1);
  int remaining = g.vertex_count();
  while (remaining > 0) {
    std::vector<Vertex> alive;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (alive_mask[static_cast<std::size_t>(v)]) alive.push_back(v);
    }
    VertexSet alive_set = VertexSet::of(g, alive);
    InducedSubgraph sub = induced_subgraph(g, alive_set);
    auto config = find_reducible_config(sub.graph);
    if (!config) {
      throw Error(ErrorKind::TheoremViolation, "no reducible configuration in " + detail::describe_graph(sub.graph));
    }
    for (Vertex& v : config->vertices) v = sub.to_host[static_cast<std::size_t>(v)];
    for (Vertex v : config->vertices) alive_mask[static_cast<std::size_t>(v)] = 0;
    remaining -= static_cast<int>(config->vertices.size());
    excisions.push_back({*config, std::move(alive_set)});
  }

  PipelineResult result;
  result.trace.resize(excisions.size());
  PartialColoring colors(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t step = excisions.size(); step-- > 0;) {
    const Excision& ex = excisions[step];
    SubCover sub = restrict_to(c, ex.alive);
    PartialColoring outside(sub.to_host.size());
    std::vector<Vertex> local_f;
    for (Vertex v : ex.config.vertices) local_f.push_back(sub.from_host[static_cast<std::size_t>(v)]);
    VertexSet f = VertexSet::of(sub.cover.host, local_f);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
      if (!f.contains(static_cast<Vertex>(i))) outside[i] = colors[static_cast<std::size_t>(sub.to_host[i])];
    }
    ResidualInstance inst = residual(sub.cover, outside, f);
    ReducibleConfig local_config{ex.config.kind, local_f};
    RepSet inner = detail::color_configuration(local_config, inst);
    RepSet merged = merge(sub.cover, outside, inst, inner, 1);

    TraceStep& t = result.trace[step];
    t.kind = ex.config.kind;
    t.excised = ex.config.vertices;
    for (Vertex lv : local_f) {
      auto pos = static_cast<std::size_t>(std::lower_bound(inst.to_host.begin(), inst.to_host.end(), lv) - inst.to_host.begin());
      t.residual_sizes.push_back(static_cast<int>(inst.cover.lists.at(static_cast<Vertex>(pos)).size()));
      t.chosen.push_back(merged.colors[static_cast<std::size_t>(lv)]);
      colors[static_cast<std::size_t>(sub.to_host[static_cast<std::size_t>(lv)])] = merged.colors[static_cast<std::size_t>(lv)];
    }
  }
  for (const auto& col : colors) result.coloring.colors.push_back(*col);
  if (impropriety(c, result.coloring).max() > 1) {
    throw Error(ErrorKind::ContractViolation, "final coloring exceeds impropriety 1");
  }
  return result;
}

inline PipelineResult color_planar_no46(const PlaneGraph& pg, const Cover& c) { return color_no46(pg.graph(), c); }

}  // namespace dpcolor
