#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "borsuk/error.hpp"
#include "borsuk/euclid.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/multicolor.hpp"

namespace borsuk {

struct Layer {
  double radius = 0;
  double height = 0;
  double offset = 0;  // angular offset of the level's vertex 0
};

/// Level j of a realisation is a regular (2k+1)-gon; level 0 is the base.
struct LayeredConstruction {
  std::size_t k = 0;
  std::size_t p = 0;
  std::vector<Layer> layers;
  double apex_height = 0;
  double margin = 0;  // 1 minus the largest non-diameter distance
};

struct Realization {
  PointSet points;
  LayeredConstruction layers;
};

namespace detail {

/// Polar angle of cycle vertex v: consecutive cycle vertices sit k steps
/// apart on the polygon, so cycle edges are the longest diagonals and the
/// point numbering matches mycielskian(C_{2k+1}, p).
inline double cycle_angle(std::size_t v, std::size_t k) {
  const std::size_t n = 2 * k + 1;
  return 2 * std::numbers::pi * static_cast<double>((v * k) % n) / static_cast<double>(n);
}

inline std::vector<Point> assemble(std::size_t k, const std::vector<Layer>& layers, double apex) {
  const std::size_t n = 2 * k + 1;
  std::vector<Point> pts;
  for (const auto& L : layers) {
    for (std::size_t v = 0; v < n; ++v) {
      const double a = cycle_angle(v, k) + L.offset;
      pts.push_back(Eigen::Vector3d(L.radius * std::cos(a), L.radius * std::sin(a), L.height));
    }
  }
  pts.push_back(Eigen::Vector3d(0, 0, apex));
  return pts;
}

/// Largest |d - 1| over prescribed pairs and largest distance over the rest.
inline std::pair<double, double> audit(const std::vector<Point>& pts, const Graph& prescribed) {
  double err = 0, rest = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = (pts[i] - pts[j]).norm();
      if (prescribed.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        err = std::max(err, std::abs(d - 1));
      } else {
        rest = std::max(rest, d);
      }
    }
  }
  return {err, rest};
}

inline void verify_realization(const PointSet& s, const Graph& target, const char* what) {
  const Graph g = diameter_graph(s);
  if (!graphs_isomorphic(g, target)) {
    throw VerificationError(std::string(what) + ": diameter graph is not the intended graph");
  }
  if (g.size() != 2 * s.size() - 2) {
    throw VerificationError(std::string(what) + ": edge count differs from 2|S| - 2");
  }
}

}  // namespace detail

/// Regular (2k+1)-gon with longest diagonal 1 (circumradius 1/(2 sin(k pi/(2k+1))))
/// at height 0 plus an apex on the axis at distance 1 from every base vertex.
/// Diameter graph: the wheel W_{2k+2}, numbered like mycielskian(C_{2k+1}, 0).
inline Realization wheel_pyramid_construction(std::size_t k) {
  if (k == 0) throw PreconditionError("wheel_pyramid: k must be positive");
  const double n = static_cast<double>(2 * k + 1);
  const double radius = 1 / (2 * std::sin(static_cast<double>(k) * std::numbers::pi / n));
  LayeredConstruction lc{k, 0, {Layer{radius, 0, 0}}, std::sqrt(1 - radius * radius), 0};
  const Graph target = mycielskian(cycle_graph(2 * k + 1), 0);
  const auto pts = detail::assemble(k, lc.layers, lc.apex_height);
  lc.margin = 1 - detail::audit(pts, target).second;
  PointSet s(3, pts);
  detail::verify_realization(s, target, "wheel_pyramid");
  return {std::move(s), std::move(lc)};
}

inline PointSet wheel_pyramid(std::size_t k) { return wheel_pyramid_construction(k).points; }

/// Point set in 3-space whose diameter graph is mu_p(C_{2k+1}). Each step
/// replaces the current apex by a small regular polygon (same angles, radius
/// sigma) whose vertex over angle(v) lies at distance 1 from the previous
/// level's cycle neighbours of v, then puts a new apex on the far side at
/// distance 1 from it. sigma starts at half the previous radius and is halved
/// until every other distance stays below 1 - 1e-3.
inline Realization mycielskian_pointset_construction(std::size_t k, std::size_t p) {
  if (k == 0) throw PreconditionError("mycielskian_pointset: k must be positive");
  if (p == 0) return wheel_pyramid_construction(k);
  const std::size_t n = 2 * k + 1;
  const double cos_step = std::cos(std::numbers::pi / static_cast<double>(n));
  auto lc = wheel_pyramid_construction(k).layers;
  lc.p = p;
  double dir = 1;  // side of the top level on which the apex sits
  for (std::size_t level = 1; level <= p; ++level) {
    const Graph target = mycielskian(cycle_graph(n), level);
    const Layer prev = lc.layers.back();
    const double rho = prev.radius;
    double sigma = rho / 2;
    bool placed = false;
    for (int attempt = 0; attempt < 40 && !placed; ++attempt, sigma /= 2) {
      // |q_v - p_u|^2 for cycle neighbours u of v (angles differ by pi + pi/n)
      const double dz2 = 1 - sigma * sigma - rho * rho - 2 * sigma * rho * cos_step;
      if (dz2 <= 0) continue;
      const double z = prev.height + dir * std::sqrt(dz2);
      const double apex = z - dir * std::sqrt(1 - sigma * sigma);
      auto layers = lc.layers;
      layers.push_back(Layer{sigma, z, 0});
      const auto [err, rest] = detail::audit(detail::assemble(k, layers, apex), target);
      if (err > 1e-12 || rest > 1 - 1e-3) continue;
      lc.layers = std::move(layers);
      lc.apex_height = apex;
      placed = true;
    }
    if (!placed) {
      throw VerificationError("mycielskian_pointset: no admissible layer radius at level " +
                              std::to_string(level));
    }
    dir = -dir;
  }
  const Graph target = mycielskian(cycle_graph(n), p);
  const auto pts = detail::assemble(k, lc.layers, lc.apex_height);
  const auto [err, rest] = detail::audit(pts, target);
  if (err > 1e-12 || rest > 1 - 1e-4) {
    throw VerificationError("mycielskian_pointset: final margin audit failed");
  }
  lc.margin = 1 - rest;
  PointSet s(3, pts);
  detail::verify_realization(s, target, "mycielskian_pointset");
  return {std::move(s), std::move(lc)};
}

inline PointSet mycielskian_pointset(std::size_t k, std::size_t p) {
  return mycielskian_pointset_construction(k, p).points;
}

/// The 2k+1 vertical symmetry planes of a realisation, as (normal, offset).
inline std::vector<std::pair<Point, double>> construction_mirror_planes(std::size_t k) {
  const std::size_t n = 2 * k + 1;
  std::vector<std::pair<Point, double>> out;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    out.emplace_back(Eigen::Vector3d(-std::sin(a), std::cos(a), 0), 0.0);
  }
  return out;
}

/// k-fold Borsuk number of the classical Mycielskian of C_{2m+1}, piecewise in k.
/// Odd k >= 3 with m < k lies outside every stated range.
inline std::size_t mu1_borsuk_formula(std::size_t k, std::size_t m) {
  if (k == 0 || m == 0) throw PreconditionError("mu1_borsuk_formula: k and m must be positive");
  if (k == 1) return 4;
  if (k % 2 == 0) return 5 * k / 2 + 1;
  if (m >= k && 2 * m <= 3 * k + 3) return 2 * k + (k + 3) / 2;
  if (2 * m >= 3 * k + 5) return 2 * k + (k + 5) / 2;
  throw PreconditionError("mu1_borsuk_formula: (k, m) = (" + std::to_string(k) + ", " +
                          std::to_string(m) + ") is outside the formula range");
}

/// Dihedral symmetry of order 2(2m+1), chromatic number 4 and a diameter
/// triangle force a possibly subdivided wheel W_{2m+2}. Symmetry generators
/// default to the z-axis through the origin with the x-axis as mirror
/// reference.
inline TheoremReport dihedral_theorem_check(const PointSet& s, std::size_t m,
                                            std::optional<std::vector<Isometry>> generators =
                                                std::nullopt) {
  if (m == 0) throw PreconditionError("dihedral_theorem_check: m must be positive");
  TheoremReport r;
  bool h1 = false;
  if (s.dim() == 3) {
    const auto gens = generators ? *generators
                                 : dihedral_generators(2 * m + 1, Eigen::Vector3d::UnitZ(),
                                                       Eigen::Vector3d::UnitX());
    h1 = detail::generators_fix(s, gens);
  }
  const Graph g = diameter_graph(s);
  const auto gi = girth(g);
  r.hypotheses = {{"dihedral symmetry", h1},
                  {"chromatic number 4", chi_k(g, 1).m == 4},
                  {"girth 3", gi && *gi == 3}};
  if (wheel_subgraph(g, m)) {
    r.conclusion = true;
    r.note = "plain wheel subgraph present";
  } else if (g.order() <= 24 && topological_wheel(g, m)) {
    r.conclusion = true;
    r.note = "no plain wheel; a subdivided (topological) wheel is present";
  } else {
    r.note = g.order() <= 24 ? "no plain or subdivided wheel"
                             : "no plain wheel; subdivided wheels not searched above order 24";
  }
  detail::finish(r);
  return r;
}

}  // namespace borsuk
