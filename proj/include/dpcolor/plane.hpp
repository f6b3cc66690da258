#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

/// Cyclic order of neighbors around each vertex.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Directed edge u->v, identified as 2*edge_id + (u is the larger endpoint).
using Dart = int;

struct Face {
  std::vector<Vertex> walk;  // walk[i] -> walk[i+1] (cyclically) are the darts
  std::vector<Dart> darts;

  int degree() const noexcept { return static_cast<int>(walk.size()); }

  /// Number of times v occurs on the boundary walk.
  int multiplicity(Vertex v) const { return static_cast<int>(std::count(walk.begin(), walk.end(), v)); }
  bool contains(Vertex v) const { return multiplicity(v) > 0; }
};

class PlaneGraph {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const RotationSystem& rotation() const noexcept { return rotation_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(int index) const { return faces_.at(static_cast<std::size_t>(index)); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  Dart dart(Vertex from, Vertex to) const {
    auto id = graph_.edge_id(from, to);
    if (!id) throw Error(ErrorKind::IndexOutOfRange, "no edge " + std::to_string(from) + "-" + std::to_string(to));
    return 2 * *id + (from == graph_.edge(*id).u ? 0 : 1);
  }

  /// Index of the face whose walk traverses from -> to.
  int face_of(Vertex from, Vertex to) const { return dart_face_.at(static_cast<std::size_t>(dart(from, to))); }

  /// Faces at the angles around v, in rotation order; one entry per angle,
  /// so a face meeting v at several angles is listed once per angle.
  std::vector<int> faces_around(Vertex v) const {
    const auto& rot = rotation_.order.at(static_cast<std::size_t>(v));
    if (rot.empty()) return faces_.empty() ? std::vector<int>{} : std::vector<int>{0};
    std::vector<int> out;
    out.reserve(rot.size());
    for (Vertex w : rot) out.push_back(face_of(v, w));
    return out;
  }

  friend PlaneGraph trace_faces(const Graph& g, RotationSystem rot);

 private:
  Graph graph_;
  RotationSystem rotation_;
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
};

inline void validate_rotation(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.vertex_count()) {
    throw Error(ErrorKind::InvalidRotation, "rotation has " + std::to_string(rot.order.size()) +
                                                " entries for " + std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto sorted = rot.order[static_cast<std::size_t>(v)];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) {
      throw Error(ErrorKind::InvalidRotation, "rotation at " + std::to_string(v) + " is not a permutation of its neighbors");
    }
  }
}

/// Traces the faces of a connected graph under a rotation system. The face
/// after dart u->v continues with v->w, where w follows u in v's rotation.
/// A lone vertex gets one face of degree 0, which keeps the Euler identity.
inline PlaneGraph trace_faces(const Graph& g, RotationSystem rot) {
  validate_rotation(g, rot);
  if (!g.connected()) throw Error(ErrorKind::Disconnected, "face tracing needs a connected graph");

  PlaneGraph pg;
  pg.graph_ = g;
  pg.rotation_ = std::move(rot);
  const int darts = 2 * g.edge_count();
  pg.dart_face_.assign(static_cast<std::size_t>(darts), -1);

  if (g.edge_count() == 0) {
    pg.faces_.push_back(Face{});
  } else {
    // position of each neighbor within a vertex's rotation
    std::vector<std::vector<std::pair<Vertex, int>>> position(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto& r = pg.rotation_.order[static_cast<std::size_t>(v)];
      for (int i = 0; i < static_cast<int>(r.size()); ++i) position[static_cast<std::size_t>(v)].push_back({r[static_cast<std::size_t>(i)], i});
      std::sort(position[static_cast<std::size_t>(v)].begin(), position[static_cast<std::size_t>(v)].end());
    }
    auto successor = [&](Vertex v, Vertex u) {
      const auto& pos = position[static_cast<std::size_t>(v)];
      auto it = std::lower_bound(pos.begin(), pos.end(), std::pair<Vertex, int>{u, -1});
      const auto& r = pg.rotation_.order[static_cast<std::size_t>(v)];
      return r[static_cast<std::size_t>((it->second + 1) % static_cast<int>(r.size()))];
    };

    for (Dart start = 0; start < darts; ++start) {
      if (pg.dart_face_[static_cast<std::size_t>(start)] >= 0) continue;
      const Edge& e = g.edge(start / 2);
      Vertex from = (start % 2 == 0) ? e.u : e.v;
      Vertex to = (start % 2 == 0) ? e.v : e.u;
      Face face;
      const int index = static_cast<int>(pg.faces_.size());
      Dart d = start;
      while (pg.dart_face_[static_cast<std::size_t>(d)] < 0) {
        pg.dart_face_[static_cast<std::size_t>(d)] = index;
        face.walk.push_back(from);
        face.darts.push_back(d);
        Vertex next = successor(to, from);
        from = to;
        to = next;
        d = pg.dart(from, to);
      }
      if (d != start) throw Error(ErrorKind::InvalidRotation, "face walk did not close");
      pg.faces_.push_back(std::move(face));
    }
  }

  const int euler = g.vertex_count() - g.edge_count() + pg.face_count();
  if (euler != 2) {
    throw Error(ErrorKind::NonPlanarEmbedding, "V - E + F = " + std::to_string(euler) + ", expected 2");
  }
  return pg;
}

/// Number of distinct undirected edges on both boundary walks.
inline int shared_edge_count(const Face& a, const Face& b) {
  std::vector<int> ea, eb;
  for (Dart d : a.darts) ea.push_back(d / 2);
  for (Dart d : b.darts) eb.push_back(d / 2);
  std::sort(ea.begin(), ea.end());
  ea.erase(std::unique(ea.begin(), ea.end()), ea.end());
  std::sort(eb.begin(), eb.end());
  eb.erase(std::unique(eb.begin(), eb.end()), eb.end());
  std::vector<int> both;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(both));
  return static_cast<int>(both.size());
}

inline int shared_edge_count(const PlaneGraph& pg, int f1, int f2) {
  return shared_edge_count(pg.face(f1), pg.face(f2));
}

/// The single 3-vertex of a (3,4+,4+)-face, if the face has that type.
inline std::optional<Vertex> pendant_type_three_vertex(const PlaneGraph& pg, const Face& f) {
  if (f.degree() != 3) return std::nullopt;
  std::optional<Vertex> three;
  for (Vertex x : f.walk) {
    int d = pg.graph().degree(x);
    if (d == 3) {
      if (three) return std::nullopt;
      three = x;
    } else if (d < 4) {
      return std::nullopt;
    }
  }
  return three;
}

struct PendantFace {
  int face = -1;
  Vertex three_vertex = -1;

  friend bool operator==(const PendantFace&, const PendantFace&) = default;
};

/// (3,4+,4+)-faces not containing v whose 3-vertex is adjacent to v.
inline std::vector<PendantFace> pendant_3faces(const PlaneGraph& pg, Vertex v) {
  if (!pg.graph().contains(v)) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
  std::vector<PendantFace> out;
  for (int i = 0; i < pg.face_count(); ++i) {
    const Face& f = pg.face(i);
    if (f.contains(v)) continue;
    auto three = pendant_type_three_vertex(pg, f);
    if (three && pg.graph().adjacent(v, *three)) out.push_back({i, *three});
  }
  return out;
}

enum class Proposition { ThreeFaceNeighbors = 1, PendantFaceSides = 2, ThreeFacesPerVertex = 3 };

struct PropositionCheck {
  Proposition proposition;
  std::string subject;
  bool pass = true;
};

struct PropositionReport {
  std::vector<PropositionCheck> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropositionCheck& c) { return c.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const PropositionCheck& c) { return !c.pass; }));
  }
};

/// Checks the structural facts forced by excluding 4- and 6-cycles:
///  (1) a 3-face sharing exactly one edge with another face sees a 7+-face there;
///  (2) both faces along the edge from v to the 3-vertex of a pendant 3-face of v are 7+-faces;
///  (3) v lies on at most floor(d(v)/2) 3-faces.
inline PropositionReport check_propositions(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  require_no46(g);
  PropositionReport report;

  for (int i = 0; i < pg.face_count(); ++i) {
    if (pg.face(i).degree() != 3) continue;
    for (int j = 0; j < pg.face_count(); ++j) {
      if (i == j || shared_edge_count(pg, i, j) != 1) continue;
      report.checks.push_back({Proposition::ThreeFaceNeighbors,
                               "3-face " + std::to_string(i) + " / face " + std::to_string(j) + " (degree " +
                                   std::to_string(pg.face(j).degree()) + ")",
                               pg.face(j).degree() >= 7});
    }
  }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (const PendantFace& p : pendant_3faces(pg, v)) {
      int a = pg.face_of(v, p.three_vertex);
      int b = pg.face_of(p.three_vertex, v);
      report.checks.push_back({Proposition::PendantFaceSides,
                               "vertex " + std::to_string(v) + " / pendant face " + std::to_string(p.face),
                               pg.face(a).degree() >= 7 && pg.face(b).degree() >= 7});
    }
  }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int triangles = 0;
    for (const Face& f : pg.faces()) {
      if (f.degree() == 3 && f.contains(v)) ++triangles;
    }
    report.checks.push_back({Proposition::ThreeFacesPerVertex,
                             "vertex " + std::to_string(v) + " on " + std::to_string(triangles) + " 3-faces",
                             triangles <= g.degree(v) / 2});
  }
  return report;
}

}  // namespace dpcolor
