#include <gtest/gtest.h>

#include "dpcolor/catalog.hpp"
#include "dpcolor/reduction.hpp"
#include "oracles.hpp"

using namespace dpcolor;

namespace {

Graph path3() { return Graph::build(3, {{0, 1}, {1, 2}}); }

const CatalogEntry& entry(std::string_view name) { return *find_catalog_entry(name); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::ParseError;
}

PartialColoring outside_of(std::initializer_list<std::optional<Color>> cols) { return PartialColoring(cols); }

}  // namespace

TEST(Restrict, Examples) {
  Cover c = random_cover(entry("bowtie").plane.graph(), ListAssignment::uniform(5, 3), 9, true);
  EXPECT_EQ(restrict(c, VertexSet{}).cover, c);
  auto none = restrict(c, VertexSet::all(c.host));
  EXPECT_EQ(none.cover.host.vertex_count(), 0);
  EXPECT_TRUE(none.cover.matchings.empty());

  Cover p = diagonal_cover(path3(), ListAssignment::uniform(3, 3));
  auto two = restrict(p, VertexSet::of(p.host, {1}));
  EXPECT_EQ(two.cover.host.vertex_count(), 2);
  EXPECT_EQ(two.cover.host.edge_count(), 0);
  EXPECT_EQ(two.to_host, (std::vector<Vertex>{0, 2}));
}

TEST(Residual, Examples) {
  // x = 0 with outside neighbors 1, 2 whose colors match 1 and 2 at x
  Graph star = Graph::build(3, {{0, 1}, {0, 2}});
  Cover c = Cover::empty_over(star, ListAssignment::uniform(3, 3));
  c.set_matching(0, 1, {{1, 3}});
  c.set_matching(0, 2, {{2, 1}});
  auto inst = residual(c, outside_of({std::nullopt, 3, 1}), VertexSet::of(star, {0}));
  EXPECT_EQ(inst.cover.lists.at(0), (std::vector<Color>{3}));

  Cover lone = Cover::empty_over(Graph::build(2, {}), ListAssignment::uniform(2, 3));
  auto kept = residual(lone, outside_of({std::nullopt, 2}), VertexSet::of(lone.host, {0}));
  EXPECT_EQ(kept.cover.lists.at(0), (std::vector<Color>{1, 2, 3}));

  Cover unmatched = Cover::empty_over(Graph::build(2, {{0, 1}}), ListAssignment::uniform(2, 3));
  unmatched.set_matching(0, 1, {{1, 1}});
  auto all = residual(unmatched, outside_of({std::nullopt, 2}), VertexSet::of(unmatched.host, {0}));
  EXPECT_EQ(all.cover.lists.at(0), (std::vector<Color>{1, 2, 3}));
}

TEST(Residual, Errors) {
  Cover p = diagonal_cover(path3(), ListAssignment::uniform(3, 3));
  VertexSet f = VertexSet::of(p.host, {1});
  EXPECT_EQ(kind_of([&] { residual(p, outside_of({1, std::nullopt, std::nullopt}), f); }), ErrorKind::PartialAssignment);
  EXPECT_EQ(kind_of([&] { residual(p, outside_of({1, std::nullopt}), f); }), ErrorKind::PartialAssignment);
  EXPECT_EQ(kind_of([&] { residual(p, outside_of({7, std::nullopt, 1}), f); }), ErrorKind::NotInList);
}

TEST(Merge, Examples) {
  Cover p = diagonal_cover(path3(), ListAssignment::uniform(3, 3));
  auto outside = outside_of({1, std::nullopt, 1});
  auto inst = residual(p, outside, VertexSet::of(p.host, {1}));
  EXPECT_EQ(inst.cover.lists.at(0), (std::vector<Color>{2, 3}));
  RepSet merged = merge(p, outside, inst, RepSet{{2}});
  EXPECT_EQ(merged.colors, (std::vector<Color>{1, 2, 1}));
  EXPECT_EQ(impropriety(p, merged).max(), 0);

  // keeping the removed color 1 at b is rejected
  EXPECT_EQ(kind_of([&] { merge(p, outside, inst, RepSet{{1}}); }), ErrorKind::ContractViolation);

  auto full = outside_of({1, 2, 3});
  auto empty = residual(p, full, VertexSet{});
  EXPECT_EQ(merge(p, full, empty, RepSet{}).colors, (std::vector<Color>{1, 2, 3}));
}

TEST(Merge, SoundOnRandomInstances) {
  std::mt19937_64 rng(55);
  int merged_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    Graph g = Graph::build(n, oracle::random_edges(n, 0.5, rng));
    Cover c = random_cover(g, ListAssignment::uniform(n, 3), rng(), true);
    std::vector<Vertex> fv;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 3 == 0) fv.push_back(v);
    }
    VertexSet f = VertexSet::of(g, fv);
    SubCover rest = restrict(c, f);
    auto rest_col = find_rep_set(rest.cover, 1);
    if (!rest_col) continue;
    PartialColoring outside(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < rest.to_host.size(); ++i) outside[static_cast<std::size_t>(rest.to_host[i])] = rest_col->colors[i];
    ResidualInstance inst = residual(c, outside, f);
    bool any_empty = false;
    for (const auto& l : inst.cover.lists.lists) any_empty = any_empty || l.empty();
    if (any_empty) continue;
    auto inner = brute_force_rep_set(inst.cover, 1);
    if (!inner) continue;
    try {
      RepSet m = merge(c, outside, inst, *inner, 1);
      EXPECT_LE(impropriety(c, m).max(), 1);
      ++merged_count;
    } catch (const Error& e) {
      // only the impropriety bound may fail: residual lists exclude cross edges
      EXPECT_EQ(e.kind(), ErrorKind::ContractViolation);
      EXPECT_NE(std::string(e.what()).find("impropriety"), std::string::npos);
    }
  }
  EXPECT_GT(merged_count, 50);
}

TEST(FindReducibleConfig, Examples) {
  auto bow = find_reducible_config(entry("bowtie").plane.graph());
  ASSERT_TRUE(bow);
  EXPECT_EQ(bow->kind, ConfigKind::LowVertex);
  EXPECT_EQ(bow->vertices, (std::vector<Vertex>{1}));

  Graph k4e = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto low = find_reducible_config(k4e);
  ASSERT_TRUE(low);
  EXPECT_EQ(*low, (ReducibleConfig{ConfigKind::LowVertex, {2}}));

  auto cube = find_reducible_config(entry("cube").plane.graph());
  ASSERT_TRUE(cube);
  EXPECT_EQ(cube->kind, ConfigKind::AdjacentThrees);
  EXPECT_EQ(cube->vertices, (std::vector<Vertex>{0, 1}));
}

TEST(FindReducibleConfig, FourWithThreeThrees) {
  // 4-vertex 0 with 3-neighbors 1,2,3; every other vertex has degree 4 or 5
  Graph g = Graph::build(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 7}, {3, 6}, {3, 8},
                             {4, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}});
  for (Vertex v : {1, 2, 3}) ASSERT_EQ(g.degree(v), 3);
  ASSERT_EQ(g.degree(0), 4);
  auto cfg = find_reducible_config(g);
  ASSERT_TRUE(cfg);
  EXPECT_EQ(*cfg, (ReducibleConfig{ConfigKind::FourWithThreeThrees, {0, 1, 2, 3}}));
}

TEST(FindReducibleConfig, NoneOnFiveRegular) {
  // the icosahedron: planar, 5-regular
  Graph ico = Graph::build(12, {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},
                                {1, 6},  {2, 6},  {2, 7},  {3, 7},  {3, 8},  {4, 8},  {4, 9},  {5, 9},  {5, 10}, {1, 10},
                                {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6}, {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11}});
  EXPECT_FALSE(find_reducible_config(ico));
}

TEST(VerifyConfigReducible, Counts) {
  auto low = verify_config_reducible(ConfigKind::LowVertex);
  EXPECT_TRUE(low.ok());
  EXPECT_EQ(low.covers, 1u);
  auto adj = verify_config_reducible(ConfigKind::AdjacentThrees);
  EXPECT_TRUE(adj.ok());
  EXPECT_EQ(adj.covers, 2u);
  auto four = verify_config_reducible(ConfigKind::FourWithThreeThrees);
  EXPECT_TRUE(four.ok());
  EXPECT_EQ(four.covers, 27u);
  EXPECT_EQ(four.colorable, 27u);
}

TEST(VerifyConfigReducible, CenterWithOneColorFails) {
  // with one color everywhere the center tolerates only one matched leaf
  auto check = verify_config_reducible(ConfigKind::FourWithThreeThrees, {1, 1, 1, 1});
  EXPECT_FALSE(check.ok());
  ASSERT_TRUE(check.counterexample);
  EXPECT_FALSE(brute_force_rep_set(*check.counterexample, 1));
  EXPECT_EQ(check.covers, 8u);
  EXPECT_EQ(check.colorable, 4u);  // at most one matched leaf
}

TEST(VerifyConfigReducible, SizeMismatch) {
  EXPECT_EQ(kind_of([] { verify_config_reducible(ConfigKind::AdjacentThrees, {1}); }), ErrorKind::ContractViolation);
}

TEST(ConfigKindNames, RoundTrip) {
  for (ConfigKind k : {ConfigKind::LowVertex, ConfigKind::AdjacentThrees, ConfigKind::FourWithThreeThrees}) {
    EXPECT_EQ(parse_config_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_config_kind("four-with-three-threes"), ConfigKind::FourWithThreeThrees);
  EXPECT_FALSE(parse_config_kind("Triangle"));
}

TEST(Pipeline, K3Diagonal) {
  const PlaneGraph& k3 = entry("k3").plane;
  Cover c = diagonal_cover(k3.graph(), ListAssignment::uniform(3, 3));
  auto r = color_planar_no46(k3, c);
  EXPECT_EQ(impropriety(c, r.coloring).max(), 0);
  EXPECT_TRUE(brute_force_rep_set(c, 0));
}

TEST(Pipeline, BowtieEveryPerfectCover) {
  const PlaneGraph& bow = entry("bowtie").plane;
  auto lists = ListAssignment::uniform(5, 3);
  std::uint64_t n = for_each_perfect_cover(bow.graph(), lists, kDefaultBudget, [&](const Cover& c) {
    auto r = color_planar_no46(bow, c);
    EXPECT_LE(impropriety(c, r.coloring).max(), 1);
    EXPECT_TRUE(brute_force_rep_set(c, 1));
    EXPECT_EQ(r.trace.front().kind, ConfigKind::LowVertex);
    return !::testing::Test::HasFailure();
  });
  EXPECT_EQ(n, 46656u);  // (3!)^6
}

TEST(Pipeline, EmptyGraph) {
  Cover c = Cover::empty_over(Graph{}, ListAssignment{});
  auto r = color_no46(Graph{}, c);
  EXPECT_TRUE(r.coloring.colors.empty());
  EXPECT_TRUE(r.trace.empty());
}

TEST(Pipeline, TraceRespectsResidualFloor) {
  for (const CatalogEntry& e : catalog()) {
    if (!e.no46) continue;
    const Graph& g = e.plane.graph();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Cover c = random_cover(g, ListAssignment::uniform(g.vertex_count(), 3), seed, seed % 2 == 0);
      auto r = color_planar_no46(e.plane, c);
      EXPECT_LE(impropriety(c, r.coloring).max(), 1) << e.name;
      std::vector<int> covered(static_cast<std::size_t>(g.vertex_count()), 0);
      for (const TraceStep& t : r.trace) {
        auto floor = config_floor_sizes(t.kind);
        ASSERT_EQ(t.residual_sizes.size(), floor.size());
        for (std::size_t i = 0; i < floor.size(); ++i) EXPECT_GE(t.residual_sizes[i], floor[i]) << e.name;
        for (std::size_t i = 0; i < t.excised.size(); ++i) {
          ++covered[static_cast<std::size_t>(t.excised[i])];
          EXPECT_EQ(r.coloring.colors[static_cast<std::size_t>(t.excised[i])], t.chosen[i]);
        }
      }
      for (int x : covered) EXPECT_EQ(x, 1) << e.name;
    }
  }
}

TEST(Pipeline, Errors) {
  const CatalogEntry& c4 = entry("c4");
  Cover c = diagonal_cover(c4.plane.graph(), ListAssignment::uniform(4, 3));
  EXPECT_EQ(kind_of([&] { color_planar_no46(c4.plane, c); }), ErrorKind::ForbiddenCyclePresent);
  const CatalogEntry& k3 = entry("k3");
  Cover small = diagonal_cover(k3.plane.graph(), ListAssignment::uniform(3, 2));
  EXPECT_EQ(kind_of([&] { color_planar_no46(k3.plane, small); }), ErrorKind::ListTooSmall);
  Cover other = diagonal_cover(entry("c5").plane.graph(), ListAssignment::uniform(5, 3));
  EXPECT_EQ(kind_of([&] { color_planar_no46(k3.plane, other); }), ErrorKind::ContractViolation);
}
