#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "borsuk/error.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/multicolor.hpp"

namespace borsuk {

using Vec2 = Eigen::Vector2d;

namespace detail {

constexpr double kPi = std::numbers::pi;

inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double polar_angle(const Vec2& v) { return std::atan2(v.y(), v.x()); }

/// Representative of x modulo period in [0, period).
inline double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  if (r >= period) r -= period;
  return r;
}

}  // namespace detail

/// Reuleaux polygon with 2s+1 vertices in counterclockwise order. Side i runs
/// from p_i to p_{i+1} and is the radius-w arc centred at p_{i+s+1}, with
/// central angle arc_angles[i].
struct ReuleauxPolygon {
  double width = 1;
  std::vector<Vec2> vertices;
  std::vector<double> arc_angles;

  std::size_t sides() const { return vertices.size(); }
  std::size_t s() const { return (vertices.size() - 1) / 2; }
  std::size_t center_of_side(std::size_t i) const { return (i + s() + 1) % sides(); }
  /// Polar angle of p_i seen from the centre of side i; the side sweeps
  /// counterclockwise from there by arc_angles[i].
  double side_start(std::size_t i) const {
    return detail::polar_angle(vertices[i] - vertices[center_of_side(i)]);
  }
  double perimeter() const {
    double t = 0;
    for (double a : arc_angles) t += a * width;
    return t;
  }
};

/// Throws VerificationError describing the first violated invariant.
inline void validate_reuleaux(const ReuleauxPolygon& p, double eps = 1e-9) {
  const auto n = p.sides();
  if (n < 3 || n % 2 == 0) throw VerificationError("reuleaux: vertex count must be odd and >= 3");
  if (p.arc_angles.size() != n) throw VerificationError("reuleaux: one arc angle per side required");
  if (!(p.width > 0)) throw VerificationError("reuleaux: width must be positive");
  double sum = 0;
  for (double a : p.arc_angles) {
    if (!(a > 0)) throw VerificationError("reuleaux: arc angles must be positive");
    sum += a;
  }
  if (std::abs(sum - detail::kPi) > eps) {
    throw VerificationError("reuleaux: arc angles sum to " + std::to_string(sum) + ", not pi");
  }
  const double w = p.width;
  const std::size_t s = p.s();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = (p.vertices[i] - p.vertices[j]).norm();
      const std::size_t gap = j - i;
      if (gap == s || gap == s + 1) {
        if (std::abs(d - w) > eps * w) {
          throw VerificationError("reuleaux: |p" + std::to_string(i) + " - p" + std::to_string(j) +
                                  "| = " + std::to_string(d) + " differs from the width");
        }
      } else if (d > w * (1 + eps)) {
        throw VerificationError("reuleaux: vertices " + std::to_string(i) + ", " +
                                std::to_string(j) + " are farther apart than the width");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = p.center_of_side(i);
    const double a0 = detail::polar_angle(p.vertices[i] - p.vertices[c]);
    const double a1 = detail::polar_angle(p.vertices[(i + 1) % n] - p.vertices[c]);
    const double swept = detail::wrap(a1 - a0, 2 * detail::kPi);
    if (std::abs(swept - p.arc_angles[i]) > 1e3 * eps) {
      throw VerificationError("reuleaux: side " + std::to_string(i) +
                              " does not subtend its recorded angle counterclockwise");
    }
  }
}

namespace detail {

/// Turning construction. Starting from p_0 and the chord p_0 -> p_s, walk the
/// star p_0 -> p_{s+1} -> p_1 -> p_{s+2} -> ... -> p_s -> p_0: each step pivots
/// about the current point by the angle of the side centred there and lays
/// off a chord of length w. Returns the vertices and the closing error.
inline std::pair<std::vector<Vec2>, double> turn_out(const std::vector<double>& angles, double w) {
  const std::size_t n = angles.size();
  const std::size_t s = (n - 1) / 2;
  std::vector<Vec2> pos(n, Vec2::Zero());
  pos[s] = w * unit(0.0);
  std::size_t pivot = 0;
  double phi = 0;
  double closing = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t side = t % 2 == 0 ? s + t / 2 : (t - 1) / 2;
    const std::size_t next = (t % 2 == 0 ? s + t / 2 + 1 : (t - 1) / 2 + 1) % n;
    phi += angles[side];
    const Vec2 q = pos[pivot] + w * unit(phi);
    if (t + 1 == n) {
      closing = (q - pos[next]).norm();
    } else {
      pos[next] = q;
    }
    pivot = next;
    phi += kPi;
  }
  return {pos, closing};
}

/// Translate the vertex centroid to the origin and rotate p_0 to the top.
inline void normalise_pose(std::vector<Vec2>& pos) {
  Vec2 c = Vec2::Zero();
  for (const auto& v : pos) c += v;
  c /= static_cast<double>(pos.size());
  for (auto& v : pos) v -= c;
  const double turn = kPi / 2 - polar_angle(pos[0]);
  const Eigen::Rotation2Dd rot(turn);
  for (auto& v : pos) v = rot * v;
}

}  // namespace detail

/// Reuleaux polygon from its side angles. Angles that do not close up (for
/// three sides, anything but equal angles) are rejected.
inline ReuleauxPolygon reuleaux_from_angles(const std::vector<double>& angles, double w = 1,
                                            double eps = 1e-9) {
  const auto n = angles.size();
  if (n < 3 || n % 2 == 0) {
    throw PreconditionError("reuleaux_from_angles: need an odd number (>= 3) of angles");
  }
  if (!(w > 0)) throw PreconditionError("reuleaux_from_angles: width must be positive");
  double sum = 0;
  for (double a : angles) {
    if (!(a > 0)) throw PreconditionError("reuleaux_from_angles: angles must be positive");
    sum += a;
  }
  if (std::abs(sum - detail::kPi) > eps) {
    throw PreconditionError("reuleaux_from_angles: angles sum to " + std::to_string(sum) +
                            ", expected pi");
  }
  auto [pos, closing] = detail::turn_out(angles, w);
  if (closing > eps * w) {
    throw VerificationError("reuleaux_from_angles: the angles do not close up (gap " +
                            std::to_string(closing / w) + " widths)");
  }
  detail::normalise_pose(pos);
  ReuleauxPolygon p{w, std::move(pos), angles};
  validate_reuleaux(p, eps);
  return p;
}

inline ReuleauxPolygon regular_reuleaux(std::size_t s, double w = 1) {
  if (s == 0) throw PreconditionError("regular_reuleaux: s must be positive");
  const std::size_t n = 2 * s + 1;
  return reuleaux_from_angles(std::vector<double>(n, detail::kPi / static_cast<double>(n)), w);
}

/// Side angles read back off the vertices.
inline std::vector<double> extract_angles(const ReuleauxPolygon& p) {
  std::vector<double> out;
  for (std::size_t i = 0; i < p.sides(); ++i) {
    const Vec2 c = p.vertices[p.center_of_side(i)];
    const double a0 = detail::polar_angle(p.vertices[i] - c);
    const double a1 = detail::polar_angle(p.vertices[(i + 1) % p.sides()] - c);
    out.push_back(detail::wrap(a1 - a0, 2 * detail::kPi));
  }
  return out;
}

/// A closing, non-equiangular angle profile for 2s+1 sides (s >= 2).
/// Closure of the turning construction is sum_t (-1)^t exp(i theta_t) = 0 with
/// 0 = theta_0 < theta_1 < ... < theta_{2s} < pi the partial angle sums along
/// the star walk. theta_1..theta_{2s-2} are perturbed from the regular values
/// and the last two are solved in closed form. `variant` picks the pattern.
inline std::vector<double> nonregular_angles(std::size_t s, unsigned variant) {
  if (s < 2) {
    throw PreconditionError(
        "nonregular_angles: a Reuleaux triangle is necessarily regular (s must be >= 2)");
  }
  using cd = std::complex<double>;
  const std::size_t n = 2 * s + 1;
  const double step = detail::kPi / static_cast<double>(n);
  for (double amp = 0.35; amp > 1e-3; amp *= 0.5) {
    std::vector<double> theta(n);
    for (std::size_t t = 0; t < n; ++t) theta[t] = step * static_cast<double>(t);
    for (std::size_t t = 1; t + 2 < n; ++t) {
      const double pattern = variant % 2 == 0 ? (t % 2 == 1 ? 1.0 : -0.5)
                                              : std::sin(1.7 * static_cast<double>(t) + variant);
      theta[t] += amp * step * pattern;
    }
    cd z = 0;
    for (std::size_t t = 0; t + 2 < n; ++t) z += (t % 2 == 0 ? 1.0 : -1.0) * std::polar(1.0, theta[t]);
    if (std::abs(z) >= 2) continue;
    const double delta = 2 * std::asin(std::abs(z) / 2);
    double mu = std::arg(cd(0, 1) * z);
    mu = detail::wrap(mu, 2 * detail::kPi);
    theta[n - 2] = mu - delta / 2;
    theta[n - 1] = mu + delta / 2;
    bool ok = theta[n - 1] < detail::kPi;
    for (std::size_t t = 1; t < n && ok; ++t) ok = theta[t] > theta[t - 1] + 0.05 * step;
    ok = ok && detail::kPi - theta[n - 1] > 0.05 * step;
    if (!ok) continue;

    std::vector<double> angles(n);
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t side = t % 2 == 0 ? s + t / 2 : (t - 1) / 2;
      angles[side] = t == 0 ? detail::kPi - theta[n - 1] : theta[t] - theta[t - 1];
    }
    return angles;
  }
  throw VerificationError("nonregular_angles: no admissible perturbation found");
}

// ---------------------------------------------------------------------------
// Boundary covers

/// Counterclockwise arc of the circle (center, radius) from `start` to `end`
/// (end > start, span at most 2pi).
struct Arc {
  Vec2 center = Vec2::Zero();
  double radius = 0;
  double start = 0;
  double end = 0;

  double span() const { return end - start; }
  Vec2 at(double angle) const { return center + radius * detail::unit(angle); }
};

struct ArcPatch {
  std::vector<Arc> arcs;
};

/// The body whose boundary is being covered: a Reuleaux polygon, or (absent
/// polygon) the disk of diameter 1 centred at the origin.
struct Body {
  std::optional<ReuleauxPolygon> reuleaux;

  bool is_disk() const { return !reuleaux.has_value(); }
  double width() const { return reuleaux ? reuleaux->width : 1.0; }
};

struct BoundaryCover {
  Body body;
  std::size_t k = 1;
  std::vector<ArcPatch> patches;
};

struct CoverReport {
  std::size_t min_fold = 0;
  double max_patch_diameter = 0;
  double width = 1;
  bool borsuk_cover = false;  // min_fold >= k and every patch strictly narrower than the body
  /// Boundary points (sweep breakpoints) with their fold, for annotation.
  std::vector<std::pair<Vec2, std::size_t>> breakpoints;
  Vec2 weakest_point = Vec2::Zero();
};

namespace detail {

/// Farthest distance between points of two arcs. Extremes of |X(a) - Y(b)|
/// over the parameter rectangle sit at corners, at an endpoint against the
/// far point of the other full circle, or at interior pairs collinear with
/// both centres.
inline double arc_pair_max_distance(const Arc& a, const Arc& b) {
  auto contains = [](const Arc& arc, double angle) {
    return wrap(angle - arc.start, 2 * kPi) <= arc.span() + 1e-15;
  };
  double best = 0;
  const Vec2 ends_a[2] = {a.at(a.start), a.at(a.end)};
  const Vec2 ends_b[2] = {b.at(b.start), b.at(b.end)};
  for (const auto& x : ends_a)
    for (const auto& y : ends_b) best = std::max(best, (x - y).norm());
  auto endpoint_vs = [&](const Vec2& x, const Arc& other) {
    const Vec2 away = other.center - x;
    if (away.norm() < 1e-15) return;
    const double angle = polar_angle(away);
    if (contains(other, angle)) best = std::max(best, (x - other.at(angle)).norm());
  };
  for (const auto& x : ends_a) endpoint_vs(x, b);
  for (const auto& y : ends_b) endpoint_vs(y, a);
  const Vec2 axis = b.center - a.center;
  if (axis.norm() > 1e-15) {
    const double base = polar_angle(axis);
    for (double ta : {base, base + kPi}) {
      for (double tb : {base, base + kPi}) {
        if (contains(a, ta) && contains(b, tb)) best = std::max(best, (a.at(ta) - b.at(tb)).norm());
      }
    }
  }
  return best;
}

/// Boundary parametrisation: cumulative arc angle. A Reuleaux boundary has
/// period pi (side i occupies [T_i, T_i + alpha_i]); the circle has period 2pi.
struct BoundaryChart {
  const Body& body;
  double tol;
  std::vector<double> offsets;  // T_i

  explicit BoundaryChart(const Body& b) : body(b), tol(1e-9) {
    if (b.reuleaux) {
      double t = 0;
      for (double a : b.reuleaux->arc_angles) {
        offsets.push_back(t);
        t += a;
      }
    }
  }

  double period() const { return body.is_disk() ? 2 * kPi : kPi; }

  /// Parameter interval [lo, hi] (lo in [0, period), hi may exceed period)
  /// covered by an arc lying on the boundary; throws if it does not.
  std::pair<double, double> interval(const Arc& arc) const {
    if (!(arc.span() > 0) || arc.span() > 2 * kPi + 1e-12) {
      throw PreconditionError("cover: arc has an empty or over-long angle interval");
    }
    if (body.is_disk()) {
      if (arc.center.norm() > tol || std::abs(arc.radius - 0.5) > tol) {
        throw PreconditionError("cover: arc does not lie on the unit-diameter circle");
      }
      const double lo = wrap(arc.start, 2 * kPi);
      return {lo, lo + arc.span()};
    }
    const auto& p = *body.reuleaux;
    const double w = p.width;
    if (std::abs(arc.radius - w) > tol * w) {
      throw PreconditionError("cover: arc radius differs from the polygon width");
    }
    for (std::size_t i = 0; i < p.sides(); ++i) {
      if ((p.vertices[p.center_of_side(i)] - arc.center).norm() > tol * w) continue;
      const double offset = wrap(arc.start - p.side_start(i) + tol, 2 * kPi) - tol;
      if (offset < -tol || offset + arc.span() > p.arc_angles[i] + tol) {
        throw PreconditionError("cover: arc leaves side " + std::to_string(i) + " of the polygon");
      }
      const double lo = offsets[i] + std::max(0.0, offset);
      return {lo, lo + arc.span()};
    }
    throw PreconditionError("cover: arc centre is not a polygon vertex");
  }

  Vec2 point(double t) const {
    t = wrap(t, period());
    if (body.is_disk()) return 0.5 * unit(t);
    const auto& p = *body.reuleaux;
    std::size_t i = p.sides() - 1;
    for (std::size_t j = 0; j + 1 < p.sides(); ++j) {
      if (t < offsets[j + 1]) {
        i = j;
        break;
      }
    }
    return p.vertices[p.center_of_side(i)] + p.width * unit(p.side_start(i) + t - offsets[i]);
  }
};

}  // namespace detail

/// Exact fold and diameter check. Fold is constant between consecutive arc
/// endpoints, so it is evaluated at every endpoint and at one interior point
/// of every gap between them (arcs are closed).
inline CoverReport verify_cover(const BoundaryCover& c) {
  if (c.patches.empty()) throw PreconditionError("verify_cover: no patches");
  const detail::BoundaryChart chart(c.body);
  const double period = chart.period();
  const double tol = 1e-10 * period;

  std::vector<std::vector<std::pair<double, double>>> spans(c.patches.size());
  std::vector<double> cuts;
  for (std::size_t j = 0; j < c.patches.size(); ++j) {
    if (c.patches[j].arcs.empty()) throw PreconditionError("verify_cover: empty patch");
    for (const auto& arc : c.patches[j].arcs) {
      auto [lo, hi] = chart.interval(arc);
      spans[j].emplace_back(lo, hi);
      cuts.push_back(detail::wrap(lo, period));
      cuts.push_back(detail::wrap(hi, period));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> breaks;
  for (double x : cuts)
    if (breaks.empty() || x - breaks.back() > tol) breaks.push_back(x);
  if (breaks.size() > 1 && breaks.front() + period - breaks.back() <= tol) breaks.pop_back();

  auto fold_at = [&](double t) {
    std::size_t fold = 0;
    for (const auto& patch : spans) {
      for (auto [lo, hi] : patch) {
        const double rel = detail::wrap(t - lo, period);
        if (rel <= hi - lo + tol || rel >= period - tol) {
          ++fold;
          break;
        }
      }
    }
    return fold;
  };

  CoverReport r;
  r.width = c.body.width();
  r.min_fold = c.patches.size() + 1;
  auto consider = [&](double t, bool record) {
    const std::size_t f = fold_at(t);
    if (record) r.breakpoints.emplace_back(chart.point(t), f);
    if (f < r.min_fold) {
      r.min_fold = f;
      r.weakest_point = chart.point(t);
    }
  };
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = i + 1 < breaks.size() ? breaks[i + 1] : breaks.front() + period;
    consider(a, true);
    consider(0.5 * (a + b), false);
  }

  for (const auto& patch : c.patches) {
    for (std::size_t i = 0; i < patch.arcs.size(); ++i)
      for (std::size_t j = i; j < patch.arcs.size(); ++j)
        r.max_patch_diameter = std::max(r.max_patch_diameter,
                                        detail::arc_pair_max_distance(patch.arcs[i], patch.arcs[j]));
  }
  r.borsuk_cover = r.min_fold >= c.k && r.max_patch_diameter < r.width;
  return r;
}

/// 2k+1 arcs of the diameter-1 circle: p_i at angle 2pi(i-1)/(2k+1) and A_i
/// the shorter arc from p_i to p_{i+k}.
inline BoundaryCover disk_cover(std::size_t k) {
  if (k == 0) throw PreconditionError("disk_cover: k must be positive");
  const double n = static_cast<double>(2 * k + 1);
  BoundaryCover c{Body{}, k, {}};
  for (std::size_t i = 0; i < 2 * k + 1; ++i) {
    const double start = 2 * detail::kPi * static_cast<double>(i) / n;
    c.patches.push_back(ArcPatch{{Arc{Vec2::Zero(), 0.5, start, start + 2 * detail::kPi * k / n}}});
  }
  return c;
}

/// Cover with 2k + ceil(k/s) patches: the vertices carry an optimal k-fold
/// colouring of their diameter graph (the cycle p_0 p_s p_{2s} ...), vertex p_i
/// owns the halves of its two incident sides nearer to it, and patch j
/// collects the pieces of the vertices coloured j.
inline BoundaryCover reuleaux_cover(const ReuleauxPolygon& p, std::size_t k) {
  if (k == 0) throw PreconditionError("reuleaux_cover: k must be positive");
  validate_reuleaux(p);
  const std::size_t n = p.sides();
  const std::size_t s = p.s();
  const auto colouring = chi_k(cycle_graph(n), k);

  std::vector<std::vector<int>> vertex_colors(n);
  for (std::size_t t = 0; t < n; ++t) vertex_colors[(t * s) % n] = colouring.witness.colors[t];

  auto side_arc = [&](std::size_t i, double from, double to) {
    const double start = p.side_start(i);
    return Arc{p.vertices[p.center_of_side(i)], p.width, start + from * p.arc_angles[i],
               start + to * p.arc_angles[i]};
  };
  BoundaryCover c{Body{p}, k, std::vector<ArcPatch>(colouring.m)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t before = (i + n - 1) % n;
    for (int col : vertex_colors[i]) {
      auto& arcs = c.patches[static_cast<std::size_t>(col - 1)].arcs;
      arcs.push_back(side_arc(before, 0.5, 1.0));
      arcs.push_back(side_arc(i, 0.0, 0.5));
    }
  }
  const auto report = verify_cover(c);
  if (report.min_fold < k || !(report.max_patch_diameter < p.width)) {
    throw VerificationError("reuleaux_cover: construction failed verification (fold " +
                            std::to_string(report.min_fold) + ", max diameter " +
                            std::to_string(report.max_patch_diameter) + ")");
  }
  return c;
}

}  // namespace borsuk
