#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "borsuk/euclid.hpp"
#include "borsuk/planar_width.hpp"
#include "borsuk/sphere_cover.hpp"

// All pictures use a 1000 x 1000 viewport (user units), y pointing up in the
// drawing's own coordinates, and the fixed palette below (cycled by patch or
// family index).
namespace borsuk::svg {

constexpr double kCanvas = 1000;

inline constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939"};

inline const char* colour(std::size_t i) { return kPalette[i % kPalette.size()]; }

inline std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

/// World square [-extent, extent]^2 mapped onto the canvas with a 50 unit margin.
class Frame {
 public:
  explicit Frame(double extent) : scale_((kCanvas / 2 - 50) / extent) {}

  double x(double wx) const { return kCanvas / 2 + scale_ * wx; }
  double y(double wy) const { return kCanvas / 2 - scale_ * wy; }
  double len(double w) const { return scale_ * w; }
  std::string at(const Vec2& p) const { return num(x(p.x())) + "," + num(y(p.y())); }

 private:
  double scale_;
};

inline std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" "
         "height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
         "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
}

inline std::string footer() { return "</svg>\n"; }

/// Path data for a counterclockwise circular arc, split into pieces of at most
/// a half turn so the SVG arc flags never become ambiguous.
inline std::string arc_path(const Frame& f, const Vec2& center, double radius, double start,
                            double end) {
  const int pieces = std::max(1, static_cast<int>(std::ceil((end - start) / (detail::kPi - 1e-9))));
  const double step = (end - start) / pieces;
  std::string d = "M " + f.at(center + radius * detail::unit(start));
  for (int i = 1; i <= pieces; ++i) {
    const Vec2 to = center + radius * detail::unit(start + i * step);
    // y flips on screen, so a counterclockwise world arc is drawn with sweep 0
    d += " A " + num(f.len(radius)) + " " + num(f.len(radius)) + " 0 0 0 " + f.at(to);
  }
  return d;
}

inline std::string boundary_path(const Frame& f, const Body& b) {
  if (b.is_disk()) return arc_path(f, Vec2::Zero(), 0.5, 0, 2 * detail::kPi);
  const auto& p = *b.reuleaux;
  std::string d;
  for (std::size_t i = 0; i < p.sides(); ++i) {
    const double s = p.side_start(i);
    d += arc_path(f, p.vertices[p.center_of_side(i)], p.width, s, s + p.arc_angles[i]) + " ";
  }
  return d;
}

/// Body outline in grey, one group per patch drawn slightly inside the
/// boundary (patch j at depth j) so overlaps stay visible, and the fold at
/// every sweep breakpoint.
inline std::string render_cover(const BoundaryCover& c, const CoverReport& r) {
  const double w = c.body.width();
  const double extent = c.body.is_disk() ? 0.56 : 0.7 * w;
  const Frame f(extent);
  const double step = 0.012 * w;

  std::string out = header();
  out += "<g id=\"body\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"2\">\n<path d=\"" +
         boundary_path(f, c.body) + "\"/>\n</g>\n";
  for (std::size_t j = 0; j < c.patches.size(); ++j) {
    out += "<g id=\"patch-" + std::to_string(j + 1) + "\" fill=\"none\" stroke=\"" + colour(j) +
           "\" stroke-width=\"3\">\n";
    for (const auto& a : c.patches[j].arcs) {
      const double radius = a.radius - step * static_cast<double>(j + 1);
      out += "<path d=\"" + arc_path(f, a.center, radius, a.start, a.end) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "<g id=\"folds\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">\n";
  for (const auto& [p, fold] : r.breakpoints) {
    const double norm = p.norm();
    const Vec2 label = norm > 0 ? Vec2(p * (1 + 0.06 * w / norm)) : p;
    out += "<circle cx=\"" + num(f.x(p.x())) + "\" cy=\"" + num(f.y(p.y())) +
           "\" r=\"3\" fill=\"black\"/>\n";
    out += "<text x=\"" + num(f.x(label.x())) + "\" y=\"" + num(f.y(label.y()) + 5) + "\">" +
           std::to_string(fold) + "</text>\n";
  }
  out += "</g>\n";
  out += "<text x=\"20\" y=\"980\" font-family=\"sans-serif\" font-size=\"18\">k = " +
         std::to_string(c.k) + ", patches = " + std::to_string(c.patches.size()) +
         ", min fold = " + std::to_string(r.min_fold) + "</text>\n";
  return out + footer();
}

namespace detail {

/// Fixed oblique viewing rotation for sphere pictures.
inline Eigen::Matrix3d view() {
  const double a = 0.35, b = 0.5;
  Eigen::Matrix3d rx, rz;
  rx << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
  rz << std::cos(b), -std::sin(b), 0, std::sin(b), std::cos(b), 0, 0, 0, 1;
  return rx * rz;
}

/// Orthographic image of the circle {x on S^2 : <x, u> = cos(rho)} seen along z.
inline std::string circle_ellipse(const Frame& f, const Eigen::Vector3d& u, double rho,
                                  const char* stroke, const char* extra) {
  const double c = std::cos(rho), r = std::sin(rho);
  const double tilt = std::atan2(u.y(), u.x()) + borsuk::detail::kPi / 2;
  const double minor = r * std::abs(u.z());
  char rot[64];
  std::snprintf(rot, sizeof rot, "%.3f", -tilt * 180 / borsuk::detail::kPi);
  return "<ellipse cx=\"" + num(f.x(c * u.x())) + "\" cy=\"" + num(f.y(c * u.y())) + "\" rx=\"" +
         num(f.len(r)) + "\" ry=\"" + num(f.len(minor)) + "\" transform=\"rotate(" + rot + " " +
         num(f.x(c * u.x())) + " " + num(f.y(c * u.y())) + ")\" fill=\"none\" stroke=\"" +
         stroke + "\" " + extra + "/>\n";
}

}  // namespace detail

/// n = 2: unit circle with the vectors as rays (and caps as arcs). n = 3:
/// orthographic view of the great-circle arrangement, poles marked (hollow
/// when on the far side), cap boundaries dashed.
inline std::string render_family(const HemisphereFamily& fam, std::optional<double> rho = {}) {
  if (fam.n != 2 && fam.n != 3) throw PreconditionError("svg: only n = 2 and n = 3 are drawn");
  const Frame f(1.1);
  std::string out = header();
  out += "<circle cx=\"500\" cy=\"500\" r=\"" + num(f.len(1)) +
         "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"2\"/>\n";
  const Eigen::Matrix3d v = detail::view();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto col = colour(i);
    out += "<g id=\"vector-" + std::to_string(i + 1) + "\" stroke=\"" + col + "\">\n";
    if (fam.n == 2) {
      const Vec2 u(fam.vectors[i](0), fam.vectors[i](1));
      out += "<line x1=\"500\" y1=\"500\" x2=\"" + num(f.x(u.x())) + "\" y2=\"" + num(f.y(u.y())) +
             "\" stroke-width=\"3\"/>\n";
      out += "<path d=\"" + arc_path(f, Vec2::Zero(), 1.0, std::atan2(u.y(), u.x()) - borsuk::detail::kPi / 2,
                                     std::atan2(u.y(), u.x()) + borsuk::detail::kPi / 2) +
             "\" fill=\"none\" stroke-width=\"2\" stroke-opacity=\"0.5\"/>\n";
      if (rho) {
        const double a = std::atan2(u.y(), u.x());
        out += "<path d=\"" + arc_path(f, Vec2::Zero(), 0.97, a - *rho, a + *rho) +
               "\" fill=\"none\" stroke-width=\"2\" stroke-dasharray=\"8 5\"/>\n";
      }
    } else {
      const Eigen::Vector3d u = v * Eigen::Vector3d(fam.vectors[i]);
      out += detail::circle_ellipse(f, u, borsuk::detail::kPi / 2, col, "stroke-width=\"2\"");
      if (rho) out += detail::circle_ellipse(f, u, *rho, col, "stroke-width=\"1.5\" stroke-dasharray=\"8 5\"");
      out += "<circle cx=\"" + num(f.x(u.x())) + "\" cy=\"" + num(f.y(u.y())) + "\" r=\"6\" fill=\"" +
             (u.z() >= 0 ? col : "white") + "\" stroke-width=\"2\"/>\n";
    }
    out += "</g>\n";
  }
  return out + footer();
}

/// Planar projection (3-space sets through the sphere view rotation) with the
/// diameter pairs drawn in red and every point labelled by index.
inline std::string render_points(const PointSet& s, const Graph& diameter_edges) {
  if (s.dim() != 2 && s.dim() != 3) throw PreconditionError("svg: only 2- and 3-dimensional sets are drawn");
  std::vector<Vec2> flat;
  const Eigen::Matrix3d v = detail::view();
  for (const auto& p : s.points()) {
    if (s.dim() == 2) {
      flat.emplace_back(p(0), p(1));
    } else {
      const Eigen::Vector3d q = v * Eigen::Vector3d(p);
      flat.emplace_back(q.x(), q.y());
    }
  }
  Vec2 lo = flat.front(), hi = flat.front();
  for (const auto& p : flat) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Vec2 mid = (lo + hi) / 2;
  const double extent = std::max(0.5 * (hi - lo).maxCoeff(), 1e-9) * 1.08;
  const Frame f(extent);
  auto at = [&](std::size_t i) { return Vec2(flat[i] - mid); };

  std::string out = header();
  out += "<g id=\"diameter-edges\" stroke=\"#d62728\" stroke-width=\"2.5\">\n";
  for (const auto& e : diameter_edges.edges()) {
    const Vec2 a = at(static_cast<std::size_t>(e.u)), b = at(static_cast<std::size_t>(e.v));
    out += "<line x1=\"" + num(f.x(a.x())) + "\" y1=\"" + num(f.y(a.y())) + "\" x2=\"" +
           num(f.x(b.x())) + "\" y2=\"" + num(f.y(b.y())) + "\"/>\n";
  }
  out += "</g>\n<g id=\"points\" font-family=\"sans-serif\" font-size=\"16\">\n";
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const Vec2 p = at(i);
    out += "<circle cx=\"" + num(f.x(p.x())) + "\" cy=\"" + num(f.y(p.y())) + "\" r=\"6\" fill=\"black\"/>\n";
    out += "<text x=\"" + num(f.x(p.x()) + 9) + "\" y=\"" + num(f.y(p.y()) - 9) + "\">" +
           (s.labels().empty() ? std::to_string(i) : s.labels()[i]) + "</text>\n";
  }
  out += "</g>\n";
  return out + footer();
}

}  // namespace borsuk::svg
