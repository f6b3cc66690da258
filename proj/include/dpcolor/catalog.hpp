#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/plane.hpp"

namespace dpcolor {

/// Builds the graph underlying a rotation system (v ~ w iff w is in v's rotation).
inline Graph graph_of_rotation(const RotationSystem& rot) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int n = static_cast<int>(rot.order.size());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rot.order[static_cast<std::size_t>(v)]) {
      if (w < 0 || w >= n) throw Error(ErrorKind::IndexOutOfRange, "rotation of " + std::to_string(v) + " names " + std::to_string(w));
      if (v < w) edges.emplace_back(v, w);
      if (v == w) throw Error(ErrorKind::LoopEdge, "rotation of " + std::to_string(v) + " names itself");
    }
  }
  Graph g = Graph::build(n, edges);
  validate_rotation(g, rot);
  return g;
}

inline PlaneGraph plane_from_rotation(RotationSystem rot) {
  Graph g = graph_of_rotation(rot);
  return trace_faces(g, std::move(rot));
}

struct CatalogEntry {
  std::string name;
  PlaneGraph plane;
  bool no46 = false;
};

namespace detail {

struct RawEntry {
  const char* name;
  bool no46;  // declared; checked against the graph at load time
  std::vector<std::vector<Vertex>> rotation;
};

inline const std::vector<RawEntry>& raw_catalog() {
  static const std::vector<RawEntry> raw = {
      {"k1", true, {{}}},
      {"k2", true, {{1}, {0}}},
      {"k3", true, {{1, 2}, {0, 2}, {1, 0}}},
      {"k4", false, {{1, 3, 2}, {0, 2, 3}, {1, 0, 3}, {2, 0, 1}}},
      {"c4", false, {{1, 3}, {0, 2}, {1, 3}, {2, 0}}},
      {"c5", true, {{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}}},
      {"c7", true, {{1, 6}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 0}}},
      {"path5", true, {{1}, {0, 2}, {1, 3}, {2, 4}, {3}}},
      {"star4", true, {{1, 2, 3, 4}, {0}, {0}, {0}, {0}}},
      {"paw", true, {{1, 2}, {0, 2}, {1, 0, 3}, {2}}},
      {"bowtie", true, {{1, 2, 3, 4}, {0, 2}, {1, 0}, {0, 4}, {3, 0}}},
      {"windmill3", true, {{1, 2, 3, 4, 5, 6}, {0, 2}, {1, 0}, {0, 4}, {3, 0}, {0, 6}, {5, 0}}},
      {"pendant_triangle", true, {{2, 3, 1}, {2, 0, 4, 5}, {6, 7, 0, 1}, {0}, {1}, {1}, {2}, {2}}},
      {"sun7", true,
       {{1, 7, 13, 6}, {0, 2, 8, 7}, {1, 3, 9, 8}, {2, 4, 10, 9}, {3, 5, 11, 10}, {4, 6, 12, 11}, {5, 0, 13, 12},
        {1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {6, 0}}},
      {"pentagon_triangles", true,
       {{4, 5, 6, 1}, {2, 0, 7, 8}, {3, 1, 9, 10}, {11, 12, 4, 2}, {13, 14, 0, 3}, {6, 0}, {0, 5}, {1, 8}, {1, 7}, {10, 2}, {2, 9}, {12, 3}, {3, 11}, {14, 4}, {13, 4}}},
      {"theta_1_4_6", true, {{1, 5, 2}, {0, 4, 9}, {3, 0}, {4, 2}, {1, 3}, {6, 0}, {7, 5}, {8, 6}, {9, 7}, {1, 8}}},
      {"cube", false, {{4, 1, 2}, {3, 0, 5}, {6, 0, 3}, {2, 1, 7}, {0, 6, 5}, {1, 4, 7}, {4, 2, 7}, {5, 6, 3}}},
      {"dodecahedron", true,
       {{1, 10, 19}, {0, 2, 8}, {1, 3, 6}, {2, 19, 4}, {3, 17, 5}, {4, 15, 6}, {5, 7, 2}, {6, 14, 8}, {7, 9, 1},
        {8, 13, 10}, {9, 11, 0}, {10, 12, 18}, {11, 13, 16}, {12, 9, 14}, {13, 7, 15}, {14, 5, 16}, {15, 17, 12},
        {16, 4, 18}, {17, 19, 11}, {18, 3, 0}}},
      // triangle of 4-vertices, each with two 3-neighbors carrying two leaves
      {"compliant_triangle", true,
       {{2, 3, 6, 1}, {2, 0, 9, 12}, {15, 18, 0, 1}, {4, 5, 0}, {3}, {3}, {0, 7, 8}, {6}, {6}, {1, 10, 11}, {9}, {9}, {14, 1, 13}, {12}, {12}, {17, 2, 16}, {15}, {15}, {19, 20, 2}, {18}, {18}}},
      // (3,4,4)-face whose 3-vertex has an outside 4-neighbor
      {"compliant_pendant_face", true,
       {{2, 3, 1}, {2, 0, 7, 10}, {14, 17, 0, 1}, {4, 5, 6, 0}, {3}, {3}, {3}, {1, 8, 9}, {7}, {7}, {13, 1, 11, 12}, {10}, {10}, {10}, {16, 2, 15}, {14}, {14}, {18, 19, 20, 2}, {17}, {17}, {17}}},
      // 5-face (3,4,3,4,4) with compliant neighbors
      {"compliant_pentagon", true,
       {{4, 5, 1}, {2, 0, 9, 13}, {3, 1, 17}, {21, 24, 4, 2}, {28, 31, 0, 3}, {6, 7, 8, 0}, {5}, {5}, {5}, {1, 10, 11, 12}, {9}, {9}, {9}, {1, 14, 15, 16}, {13}, {13}, {13}, {20, 2, 18, 19}, {17}, {17}, {17}, {23, 3, 22}, {21}, {21}, {25, 26, 27, 3}, {24}, {24}, {24}, {29, 30, 4}, {28}, {28}, {32, 33, 34, 4}, {31}, {31}, {31}}},
  };
  return raw;
}

}  // namespace detail

/// Built-in plane graphs. Each entry's no46 flag is recomputed from the
/// graph at load and must agree with the declared one.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& raw : detail::raw_catalog()) {
      PlaneGraph pg = plane_from_rotation(RotationSystem{raw.rotation});
      const bool actual = is_no46(pg.graph());
      if (actual != raw.no46) {
        throw Error(ErrorKind::ContractViolation, std::string("catalog entry ") + raw.name + " has a wrong no46 flag");
      }
      out.push_back({raw.name, std::move(pg), actual});
    }
    return out;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(std::string_view name) {
  const auto& all = catalog();
  auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.name == name; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace dpcolor
