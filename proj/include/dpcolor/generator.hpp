#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dpcolor/catalog.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/plane.hpp"

namespace dpcolor {

struct GeneratorOptions {
  int attempts = 100;
  // an attempt is abandoned once repairing it needs more deletions than this
  // fraction of n
  double deletion_ratio = 1.0;
};

namespace detail {

// Inserts a new vertex inside face `f`, joined to the walk corners at the
// given (increasing) positions. Returns false if no neighbor order for the
// new vertex yields a plane embedding.
inline bool insert_in_face(RotationSystem& rot, const Face& f, const std::vector<std::size_t>& corners) {
  const Vertex z = static_cast<Vertex>(rot.order.size());
  RotationSystem base = rot;
  base.order.emplace_back();
  for (std::size_t i : corners) {
    const Vertex x = f.walk[i];
    const Vertex prev = f.walk[(i + f.walk.size() - 1) % f.walk.size()];
    auto& r = base.order[static_cast<std::size_t>(x)];
    if (r.empty()) {
      r.push_back(z);
    } else {
      auto it = std::find(r.begin(), r.end(), prev);
      r.insert(it + 1, z);
    }
  }
  std::vector<Vertex> forward;
  for (std::size_t i : corners) forward.push_back(f.walk[i]);
  std::vector<Vertex> backward(forward.rbegin(), forward.rend());
  for (const auto& order : {backward, forward}) {
    RotationSystem candidate = base;
    candidate.order[static_cast<std::size_t>(z)] = order;
    try {
      plane_from_rotation(candidate);
      rot = std::move(candidate);
      return true;
    } catch (const Error&) {
    }
  }
  return false;
}

inline void delete_edge(RotationSystem& rot, Vertex a, Vertex b) {
  auto& ra = rot.order[static_cast<std::size_t>(a)];
  ra.erase(std::find(ra.begin(), ra.end(), b));
  auto& rb = rot.order[static_cast<std::size_t>(b)];
  rb.erase(std::find(rb.begin(), rb.end(), a));
}

inline std::optional<Cycle> first_forbidden_cycle(const Graph& g) {
  for (int k : {4, 6}) {
    std::optional<Cycle> found;
    detail::for_each_cycle(g, k, [&](const Cycle& c) {
      found = c;
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// Random connected plane graph on n vertices with no 4- or 6-cycles.
/// Grows by dropping each new vertex into a random face, joined to one to
/// three corners of it, then deletes a random edge of some 4- or 6-cycle
/// until none is left. Deterministic per seed.
inline PlaneGraph generate_no46(int n, std::uint64_t seed, GeneratorOptions opts = {}) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "need at least one vertex");
  std::mt19937_64 rng(seed);
  const int max_deletions = std::max(1, static_cast<int>(opts.deletion_ratio * n));
  for (int attempt = 0; attempt < opts.attempts; ++attempt) {
    RotationSystem rot{{{}}};
    if (n >= 2) rot = RotationSystem{{{1}, {0}}};
    if (n >= 3) rot = RotationSystem{{{1, 2}, {0, 2}, {1, 0}}};
    bool ok = true;
    for (int v = static_cast<int>(rot.order.size()); v < n && ok; ++v) {
      PlaneGraph pg = plane_from_rotation(rot);
      const Face& f = pg.face(std::uniform_int_distribution<int>(0, pg.face_count() - 1)(rng));
      // one corner per distinct vertex of the walk
      std::vector<std::size_t> candidates;
      std::vector<Vertex> seen;
      for (std::size_t i = 0; i < f.walk.size(); ++i) {
        if (std::find(seen.begin(), seen.end(), f.walk[i]) != seen.end()) continue;
        seen.push_back(f.walk[i]);
        candidates.push_back(i);
      }
      std::shuffle(candidates.begin(), candidates.end(), rng);
      const int want = std::discrete_distribution<int>({0.0, 3.0, 4.0, 3.0})(rng);
      candidates.resize(std::min<std::size_t>(candidates.size(), static_cast<std::size_t>(want)));
      std::sort(candidates.begin(), candidates.end());
      ok = detail::insert_in_face(rot, f, candidates);
    }
    if (!ok) continue;

    int deletions = 0;
    while (true) {
      Graph g = graph_of_rotation(rot);
      auto cycle = detail::first_forbidden_cycle(g);
      if (!cycle) break;
      if (++deletions > max_deletions) {
        ok = false;
        break;
      }
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, cycle->size() - 1)(rng);
      detail::delete_edge(rot, (*cycle)[i], (*cycle)[(i + 1) % cycle->size()]);
    }
    if (!ok) continue;

    PlaneGraph result = plane_from_rotation(rot);
    if (!is_no46(result.graph())) continue;
    return result;
  }
  throw Error(ErrorKind::GenerationExhausted, "no valid instance for n=" + std::to_string(n) + " after " +
                                                  std::to_string(opts.attempts) + " attempts");
}

}  // namespace dpcolor
