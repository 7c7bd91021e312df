#include <gtest/gtest.h>

#include <random>

#include "borsuk/io.hpp"
#include "borsuk/space3d.hpp"
#include "borsuk/svg.hpp"

namespace borsuk {
namespace {

TEST(CanonicalReal, TwelveSignificantDigits) {
  EXPECT_EQ(io::canonical_real(0.1 + 0.2), 0.3);
  EXPECT_EQ(io::canonical_real(-0.0), 0.0);
  EXPECT_FALSE(std::signbit(io::canonical_real(-0.0)));
  EXPECT_EQ(io::canonical_real(1.0 / 3), 0.333333333333);
  EXPECT_EQ(io::Json(io::canonical_real(std::numbers::pi)).dump(), "3.14159265359");
  EXPECT_THROW(io::canonical_real(std::nan("")), FormatError);
}

TEST(GraphJson, RoundTripAndCanonicalOrder) {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int n = 2 + t % 8;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) edges.emplace_back(b, a);  // reversed on purpose
    const Graph g(static_cast<std::size_t>(n), edges);
    const io::Json j = io::to_json(g);
    for (const auto& e : j["edges"]) EXPECT_LT(e[0].get<int>(), e[1].get<int>());
    EXPECT_EQ(io::graph_from_json(io::parse(j.dump(), "g")), g);
  }
  const Graph labelled(2, {{0, 1}}, {"x", "y"});
  EXPECT_EQ(io::graph_from_json(io::to_json(labelled)), labelled);
}

TEST(GraphJson, Malformed) {
  EXPECT_THROW(io::parse("{\"n\": 3,", "g"), FormatError);
  EXPECT_THROW(io::graph_from_json(io::Json{{"edges", io::Json::array()}}), FormatError);
  EXPECT_THROW(io::graph_from_json(io::Json{{"n", -1}, {"edges", io::Json::array()}}), FormatError);
  EXPECT_THROW(io::graph_from_json(io::Json{{"n", 3}, {"edges", {{0, 1, 2}}}}), FormatError);
  EXPECT_THROW(io::graph_from_json(io::Json{{"n", 3}, {"edges", {{0, 0.5}}}}), FormatError);
  EXPECT_THROW(io::graph_from_json(io::Json{{"n", 3}, {"edges", {{0, 1}, {1, 0}}}}),
               PreconditionError);
}

TEST(ColoringJson, RoundTrip) {
  const auto c = chi_k(cycle_graph(7), 3).witness;
  EXPECT_EQ(io::coloring_from_json(io::to_json(c)), c);
}

TEST(PointsJson, RoundTripKeepsDiameterGraph) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const PointSet s = mycielskian_pointset(k, 2);
    const PointSet back = io::points_from_json(io::parse(io::to_json(s).dump(), "p"));
    EXPECT_EQ(back.size(), s.size());
    EXPECT_EQ(diameter_graph(back), diameter_graph(s));
  }
  const auto j = io::Json{{"dim", 2}, {"points", {{0, 0}, {1, 0}}}};
  EXPECT_DOUBLE_EQ(io::points_from_json(j).eps(), 1e-9);
  EXPECT_DOUBLE_EQ(io::points_from_json(j, 1e-4).eps(), 1e-4);
  EXPECT_THROW(io::points_from_json(io::Json{{"dim", 2}, {"points", {{0, "a"}}}}), FormatError);
}

TEST(CoverJson, RoundTripReverifies) {
  std::vector<BoundaryCover> covers = {disk_cover(3), reuleaux_cover(regular_reuleaux(2), 3),
                                       reuleaux_cover(reuleaux_from_angles(nonregular_angles(3, 1)), 4)};
  for (const auto& c : covers) {
    const BoundaryCover back = io::cover_from_json(io::parse(io::to_json(c).dump(), "c"));
    EXPECT_EQ(back.k, c.k);
    ASSERT_EQ(back.patches.size(), c.patches.size());
    const auto a = verify_cover(c), b = verify_cover(back);
    EXPECT_EQ(a.min_fold, b.min_fold);
    EXPECT_NEAR(a.max_patch_diameter, b.max_patch_diameter, 1e-10);
    EXPECT_TRUE(b.borsuk_cover);
  }
  EXPECT_THROW(io::cover_from_json(io::Json{{"body", {{"kind", "square"}}}, {"k", 1}, {"patches", io::Json::array()}}),
               FormatError);
}

TEST(FamilyJson, RoundTrip) {
  const auto f = gale_vectors(3, 2);
  const auto back = io::family_from_json(io::to_json(f, 0.5));
  EXPECT_EQ(back.n, 3u);
  EXPECT_EQ(min_cover_fold(back).fold, 2u);
  EXPECT_EQ(io::to_json(f, 0.5)["rho"], 0.5);
}

TEST(Svg, FixedViewportAndOnePatchGroupEach) {
  const auto c = reuleaux_cover(regular_reuleaux(2), 2);
  const std::string s = svg::render_cover(c, verify_cover(c));
  EXPECT_NE(s.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
  std::size_t groups = 0;
  for (std::size_t at = s.find("id=\"patch-"); at != std::string::npos; at = s.find("id=\"patch-", at + 1))
    ++groups;
  EXPECT_EQ(groups, c.patches.size());
  EXPECT_EQ(s, svg::render_cover(c, verify_cover(c)));
  EXPECT_THROW(svg::render_family(gale_vectors(4, 1)), PreconditionError);
  EXPECT_NE(svg::render_points(wheel_pyramid(2), diameter_graph(wheel_pyramid(2))).find("<line"),
            std::string::npos);
}

}  // namespace
}  // namespace borsuk
