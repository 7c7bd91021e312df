#include <gtest/gtest.h>

#include <cmath>

#include "borsuk/space3d.hpp"

namespace borsuk {
namespace {

// Pairs at distance 1 (to 1e-9), straight from coordinates.
Graph unit_distance_graph(const PointSet& s) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (std::abs((s[i] - s[j]).norm() - 1) < 1e-9) edges.emplace_back(i, j);
  return Graph(s.size(), edges);
}

TEST(WheelPyramid, Tetrahedron) {
  const auto s = wheel_pyramid(1);
  ASSERT_EQ(s.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_NEAR((s[i] - s[j]).norm(), 1.0, 1e-12);
  EXPECT_EQ(diameter_graph(s), complete_graph(4));
}

TEST(WheelPyramid, LargerBases) {
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto s = wheel_pyramid(k);
    const Graph g = diameter_graph(s);
    EXPECT_TRUE(graphs_isomorphic(g, wheel_graph(2 * k + 1)));
    EXPECT_EQ(g.size(), 2 * s.size() - 2);
    EXPECT_TRUE(vazsonyi_check(s).critical);
    EXPECT_NEAR(s.diameter(), 1.0, 1e-12);
  }
}

TEST(MycielskianPointset, Examples) {
  const auto a = mycielskian_pointset(1, 1);
  EXPECT_EQ(a.size(), 7u);
  EXPECT_EQ(diameter_graph(a).size(), 12u);
  EXPECT_TRUE(graphs_isomorphic(diameter_graph(a), mycielskian(cycle_graph(3), 1)));

  const auto b = mycielskian_pointset(2, 0);
  const auto w = wheel_pyramid(2);
  ASSERT_EQ(b.size(), w.size());
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i], w[i]);

  const auto c = mycielskian_pointset(2, 1);
  EXPECT_EQ(c.size(), 11u);
  EXPECT_EQ(diameter_graph(c).size(), 20u);
}

TEST(MycielskianPointset, AllSmallParameters) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t p = 0; p <= 2; ++p) {
      const auto r = mycielskian_pointset_construction(k, p);
      const auto& s = r.points;
      const Graph target = mycielskian(cycle_graph(2 * k + 1), p);
      EXPECT_EQ(unit_distance_graph(s), target) << k << "," << p;
      EXPECT_NEAR(s.diameter(), 1.0, 1e-12);
      EXPECT_EQ(diameter_graph(s).size(), 2 * s.size() - 2);
      EXPECT_GE(r.layers.margin, 1e-4);
      for (std::size_t j = 1; j < r.layers.layers.size(); ++j)
        EXPECT_LT(r.layers.layers[j].radius, r.layers.layers[j - 1].radius);
      EXPECT_EQ(chi_k(diameter_graph(s), 1).m, 4u);
      EXPECT_TRUE(odd_cycles_pairwise_intersect(diameter_graph(s)).pairwise_intersect);
      for (const auto& [normal, offset] : construction_mirror_planes(k))
        EXPECT_TRUE(mirror_odd_cycle_check(s, normal, offset).every_odd_cycle_meets_plane);
    }
  }
  EXPECT_THROW(mycielskian_pointset(0, 1), PreconditionError);
}

TEST(Mu1Formula, Values) {
  EXPECT_EQ(mu1_borsuk_formula(1, 1), 4u);
  EXPECT_EQ(mu1_borsuk_formula(1, 9), 4u);
  for (std::size_t m = 1; m <= 6; ++m) EXPECT_EQ(mu1_borsuk_formula(2, m), 6u);
  EXPECT_EQ(mu1_borsuk_formula(3, 3), 9u);
  EXPECT_EQ(mu1_borsuk_formula(3, 6), 9u);
  EXPECT_EQ(mu1_borsuk_formula(3, 7), 10u);
  EXPECT_EQ(mu1_borsuk_formula(4, 2), 11u);
  EXPECT_THROW(mu1_borsuk_formula(3, 2), PreconditionError);
  EXPECT_THROW(mu1_borsuk_formula(0, 1), PreconditionError);
}

TEST(Mu1Formula, AgreesWithSolver) {
  struct Case {
    std::size_t k, m;
  };
  for (auto [k, m] : {Case{1, 1}, Case{1, 2}, Case{2, 2}, Case{2, 3}, Case{3, 3}}) {
    EXPECT_EQ(mu1_borsuk_formula(k, m), chi_k(mycielskian(cycle_graph(2 * m + 1), 1), k).m)
        << k << "," << m;
  }
}

TEST(Mu1Formula, EvenCaseFailsOnTriangleBase) {
  // The even branch claims 6 for every m, but the Mycielskian of a triangle
  // needs 7 colours for a 2-fold colouring.
  EXPECT_EQ(mu1_borsuk_formula(2, 1), 6u);
  EXPECT_EQ(chi_k(mycielskian(cycle_graph(3), 1), 2).m, 7u);
}

TEST(DihedralTheorem, Examples) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto r = dihedral_theorem_check(wheel_pyramid(m), m);
    for (const auto& h : r.hypotheses) EXPECT_TRUE(h.second) << h.first;
    EXPECT_TRUE(r.conclusion);
    EXPECT_TRUE(r.consistent);
  }
  const auto r = dihedral_theorem_check(mycielskian_pointset(2, 1), 2);
  EXPECT_TRUE(r.hypotheses[0].second);
  EXPECT_FALSE(r.hypotheses[2].second);  // girth 5
  EXPECT_TRUE(r.consistent);

  // the triangle-based realisation has no K4, only a subdivided one
  const auto t = dihedral_theorem_check(mycielskian_pointset(1, 1), 1);
  EXPECT_TRUE(t.hypotheses[0].second && t.hypotheses[1].second && t.hypotheses[2].second);
  EXPECT_FALSE(wheel_subgraph(diameter_graph(mycielskian_pointset(1, 1)), 1));
  EXPECT_TRUE(t.conclusion);
  EXPECT_TRUE(t.consistent);
}

TEST(TopologicalWheel, Examples) {
  const auto w = topological_wheel(wheel_graph(5), 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->spokes.size(), 5u);
  EXPECT_FALSE(topological_wheel(cycle_graph(7), 1));

  // K4 with one edge subdivided contains a topological K4 but no K4
  const Graph sub(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 4}, {4, 3}});
  EXPECT_FALSE(contains_subgraph(sub, complete_graph(4)));
  const auto t = topological_wheel(sub, 1);
  ASSERT_TRUE(t);
  for (const auto& path : t->spokes) {
    EXPECT_EQ(path.front(), t->hub);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(sub.adjacent(path[i], path[i + 1]));
    EXPECT_TRUE(std::count(t->rim.vertices.begin(), t->rim.vertices.end(), path.back()));
  }
  EXPECT_TRUE(is_cycle_in(sub, t->rim));
}

}  // namespace
}  // namespace borsuk
