#include <gtest/gtest.h>

#include <random>

#include "dpcolor/catalog.hpp"
#include "dpcolor/generator.hpp"
#include "dpcolor/plane.hpp"

using namespace dpcolor;

namespace {

const PlaneGraph& entry(std::string_view name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw std::runtime_error("missing catalog entry");
  return e->plane;
}

// every dart on exactly one walk, exactly once; face degrees sum to 2E; V - E + F = 2
void expect_well_formed(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  std::vector<int> seen(static_cast<std::size_t>(2 * g.edge_count()), 0);
  int degree_sum = 0;
  for (const Face& f : pg.faces()) {
    degree_sum += f.degree();
    ASSERT_EQ(f.walk.size(), f.darts.size());
    for (std::size_t i = 0; i < f.walk.size(); ++i) {
      Vertex a = f.walk[i];
      Vertex b = f.walk[(i + 1) % f.walk.size()];
      ASSERT_TRUE(g.adjacent(a, b));
      EXPECT_EQ(f.darts[i], pg.dart(a, b));
      ++seen[static_cast<std::size_t>(f.darts[i])];
    }
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
  if (g.vertex_count() > 0) {
    EXPECT_EQ(g.vertex_count() - g.edge_count() + pg.face_count(), 2);
  }
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::ParseError;
}

}  // namespace

TEST(TraceFaces, K4) {
  const PlaneGraph& pg = entry("k4");
  ASSERT_EQ(pg.face_count(), 4);
  for (const Face& f : pg.faces()) EXPECT_EQ(f.degree(), 3);
  expect_well_formed(pg);
}

TEST(TraceFaces, K2) {
  const PlaneGraph& pg = entry("k2");
  ASSERT_EQ(pg.face_count(), 1);
  EXPECT_EQ(pg.face(0).degree(), 2);
}

TEST(TraceFaces, Cube) {
  const PlaneGraph& pg = entry("cube");
  ASSERT_EQ(pg.face_count(), 6);
  for (const Face& f : pg.faces()) EXPECT_EQ(f.degree(), 4);
  expect_well_formed(pg);
}

TEST(TraceFaces, LoneVertexHasOneEmptyFace) {
  const PlaneGraph& pg = entry("k1");
  ASSERT_EQ(pg.face_count(), 1);
  EXPECT_EQ(pg.face(0).degree(), 0);
}

TEST(TraceFaces, TreeHasOneFaceWalkingEveryEdgeTwice) {
  const PlaneGraph& pg = entry("star4");
  ASSERT_EQ(pg.face_count(), 1);
  EXPECT_EQ(pg.face(0).degree(), 8);
  EXPECT_EQ(pg.face(0).multiplicity(0), 4);
}

TEST(TraceFaces, CatalogAndGeneratedAreWellFormed) {
  for (const CatalogEntry& e : catalog()) {
    SCOPED_TRACE(e.name);
    expect_well_formed(e.plane);
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    expect_well_formed(generate_no46(3 + static_cast<int>(seed % 15), seed));
  }
}

TEST(TraceFaces, Errors) {
  Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(kind_of([&] { trace_faces(k3, RotationSystem{{{1, 2}, {0, 2}, {0}}}); }), ErrorKind::InvalidRotation);
  EXPECT_EQ(kind_of([&] { trace_faces(k3, RotationSystem{{{1, 1}, {0, 2}, {0, 1}}}); }), ErrorKind::InvalidRotation);
  Graph two = Graph::build(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(kind_of([&] { trace_faces(two, RotationSystem{{{1}, {0}, {3}, {2}}}); }), ErrorKind::Disconnected);
  // K4 with one vertex's rotation reversed no longer embeds in the sphere
  Graph k4 = entry("k4").graph();
  RotationSystem bad = entry("k4").rotation();
  std::reverse(bad.order[0].begin(), bad.order[0].end());
  EXPECT_EQ(kind_of([&] { trace_faces(k4, bad); }), ErrorKind::NonPlanarEmbedding);
}

TEST(TraceFaces, FaceLookup) {
  const PlaneGraph& pg = entry("bowtie");
  const Graph& g = pg.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto around = pg.faces_around(v);
    ASSERT_EQ(static_cast<int>(around.size()), g.degree(v));
    for (int f : around) EXPECT_TRUE(pg.face(f).contains(v));
  }
  for (const Edge& e : g.edges()) {
    const Face& f = pg.face(pg.face_of(e.u, e.v));
    bool found = false;
    for (std::size_t i = 0; i < f.walk.size(); ++i) {
      found = found || (f.walk[i] == e.u && f.walk[(i + 1) % f.walk.size()] == e.v);
    }
    EXPECT_TRUE(found);
  }
}

TEST(SharedEdges, Examples) {
  const PlaneGraph& k4 = entry("k4");
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) {
        EXPECT_EQ(shared_edge_count(k4, i, j), 1);
      }
    }
    EXPECT_EQ(shared_edge_count(k4, i, i), 3);
  }
  const PlaneGraph& cube = entry("cube");
  int opposite_pairs = 0;
  for (int i = 0; i < 6; ++i) {
    int zero = 0;
    for (int j = 0; j < 6; ++j) {
      if (i != j && shared_edge_count(cube, i, j) == 0) ++zero;
    }
    EXPECT_EQ(zero, 1) << "each cube face has exactly one opposite face";
    opposite_pairs += zero;
  }
  EXPECT_EQ(opposite_pairs, 6);
}

TEST(SharedEdges, SelfCountsDistinctEdges) {
  // a tree's single face walks each edge twice but has |E| distinct edges
  const PlaneGraph& p = entry("path5");
  EXPECT_EQ(shared_edge_count(p, 0, 0), 4);
}

TEST(PendantFaces, Examples) {
  const PlaneGraph& pg = entry("pendant_triangle");
  const Graph& g = pg.graph();
  // triangle 0-1-2, 0 has degree 3 through the pendant edge 0-3
  ASSERT_EQ(g.degree(0), 3);
  ASSERT_GE(g.degree(1), 4);
  ASSERT_GE(g.degree(2), 4);
  auto found = pendant_3faces(pg, 3);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].three_vertex, 0);
  EXPECT_EQ(pg.face(found[0].face).degree(), 3);
  EXPECT_FALSE(pg.face(found[0].face).contains(3));

  // no neighbor of 1 has degree 3 except 0, which lies on every triangle at 1
  EXPECT_TRUE(pendant_3faces(pg, 1).empty());
  // the triangle vertices themselves are on the face
  EXPECT_TRUE(pendant_3faces(pg, 0).empty());

  const PlaneGraph& k4 = entry("k4");
  for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(pendant_3faces(k4, v).empty());
}

TEST(Propositions, Bowtie) {
  auto report = check_propositions(entry("bowtie"));
  EXPECT_TRUE(report.all_pass());
  bool center_checked = false;
  for (const auto& c : report.checks) {
    if (c.proposition == Proposition::ThreeFacesPerVertex && c.subject == "vertex 0 on 2 3-faces") center_checked = c.pass;
  }
  EXPECT_TRUE(center_checked);
}

TEST(Propositions, TreesPassVacuously) {
  for (auto name : {"path5", "star4", "k2", "k1"}) {
    auto report = check_propositions(entry(name));
    EXPECT_TRUE(report.all_pass()) << name;
    for (const auto& c : report.checks) EXPECT_EQ(c.proposition, Proposition::ThreeFacesPerVertex);
  }
}

TEST(Propositions, ForbiddenCycle) {
  EXPECT_EQ(kind_of([] { check_propositions(entry("c4")); }), ErrorKind::ForbiddenCyclePresent);
}

// The per-vertex triangle bound fails only on K3, where each degree-2
// vertex sits on both faces (the inner and outer triangle).
TEST(Propositions, OnlyK3FailsAcrossCatalogAndGenerated) {
  for (const CatalogEntry& e : catalog()) {
    if (!e.no46) continue;
    auto report = check_propositions(e.plane);
    if (e.name == "k3") {
      EXPECT_EQ(report.failures(), 3u);
      for (const auto& c : report.checks) {
        if (!c.pass) {
          EXPECT_EQ(c.proposition, Proposition::ThreeFacesPerVertex);
        }
      }
    } else {
      EXPECT_TRUE(report.all_pass()) << e.name;
    }
  }
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    PlaneGraph pg = generate_no46(4 + static_cast<int>(seed % 17), seed);
    bool is_k3 = pg.graph().vertex_count() == 3 && pg.graph().edge_count() == 3;
    if (!is_k3) {
      EXPECT_TRUE(check_propositions(pg).all_pass()) << "seed " << seed;
    }
  }
}
