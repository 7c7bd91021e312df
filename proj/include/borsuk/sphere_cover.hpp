#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "borsuk/error.hpp"

namespace borsuk {

/// Unit vectors u_i; u_i stands for the open hemisphere {x : <u_i, x> > 0}.
struct HemisphereFamily {
  std::size_t n = 0;
  std::vector<Eigen::VectorXd> vectors;

  std::size_t size() const { return vectors.size(); }
};

struct CapCover {
  std::size_t n = 0;
  std::vector<Eigen::VectorXd> centers;
  double rho = 0;  // common angular radius, < pi/2
};

enum class FoldMode { Exact, Statistical };

struct FoldResult {
  std::size_t fold = 0;
  FoldMode mode = FoldMode::Exact;
  Eigen::VectorXd witness;  // a point attaining the reported fold
};

struct FoldOptions {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0x5eed;
};

namespace detail {

/// Inner products within this band of zero count as non-membership for open
/// hemispheres (and as membership failure for closed caps).
constexpr double kDeadBand = 1e-12;

inline void require_family(const HemisphereFamily& f) {
  if (f.n < 2) throw PreconditionError("hemisphere family: dimension must be at least 2");
  for (const auto& u : f.vectors) {
    if (static_cast<std::size_t>(u.size()) != f.n) {
      throw PreconditionError("hemisphere family: vector of wrong dimension");
    }
    if (std::abs(u.norm() - 1) > 1e-9) throw PreconditionError("hemisphere family: non-unit vector");
  }
}

/// Number of members with <u, x> > threshold + dead band.
inline std::size_t count_above(const std::vector<Eigen::VectorXd>& vs, const Eigen::VectorXd& x,
                               double threshold) {
  std::size_t c = 0;
  for (const auto& u : vs)
    if (u.dot(x) > threshold + kDeadBand) ++c;
  return c;
}

/// Closed-cap membership <u, x> >= threshold, with the dead band counted
/// against membership.
inline std::size_t count_at_least(const std::vector<Eigen::VectorXd>& vs,
                                  const Eigen::VectorXd& x, double threshold) {
  std::size_t c = 0;
  for (const auto& u : vs)
    if (u.dot(x) >= threshold + kDeadBand) ++c;
  return c;
}

/// Candidate points on S^1 where the fold of open half-circles can change:
/// the directions orthogonal to each u_i, plus midpoints between consecutive
/// candidates.
inline std::vector<Eigen::VectorXd> circle_candidates(const std::vector<Eigen::VectorXd>& vs) {
  std::vector<double> angles;
  for (const auto& u : vs) {
    const double a = std::atan2(u(1), u(0));
    angles.push_back(a + std::numbers::pi / 2);
    angles.push_back(a - std::numbers::pi / 2);
  }
  for (auto& a : angles) a = std::remainder(a, 2 * std::numbers::pi) + std::numbers::pi;
  std::sort(angles.begin(), angles.end());
  std::vector<Eigen::VectorXd> out;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double a = angles[i];
    const double b = i + 1 < angles.size() ? angles[i + 1] : angles.front() + 2 * std::numbers::pi;
    out.push_back(Eigen::Vector2d(std::cos(a), std::sin(a)));
    const double mid = 0.5 * (a + b);
    out.push_back(Eigen::Vector2d(std::cos(mid), std::sin(mid)));
  }
  return out;
}

/// Vertices of the great-circle arrangement (+-u_i x u_j) and, around each,
/// points pushed a little into every incident cell. The arrangement's faces
/// of every dimension are represented, so the minimum over candidates is the
/// minimum over the sphere.
inline std::vector<Eigen::VectorXd> sphere_candidates(const std::vector<Eigen::VectorXd>& vs) {
  std::vector<Eigen::VectorXd> out;
  const double delta = 1e-7;
  std::vector<Eigen::Vector3d> us;
  for (const auto& u : vs) us.emplace_back(u(0), u(1), u(2));
  auto push = [&](const Eigen::Vector3d& x) { out.push_back(x.normalized()); };
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const Eigen::Vector3d c = us[i].cross(us[j]);
      if (c.norm() < 1e-12) continue;  // same or opposite great circle
      for (double sign : {1.0, -1.0}) {
        const Eigen::Vector3d v = sign * c.normalized();
        push(v);
        for (double a : {1.0, -1.0})
          for (double b : {1.0, -1.0}) push(v + delta * (a * us[i] + b * us[j]));
        // along each of the two great circles through v
        const Eigen::Vector3d ti = us[i].cross(v), tj = us[j].cross(v);
        for (double a : {1.0, -1.0}) {
          push(v + delta * a * ti);
          push(v + delta * a * tj);
        }
      }
    }
  }
  // a great circle meeting no other one: sample it and both sides
  for (std::size_t i = 0; i < us.size(); ++i) {
    Eigen::Vector3d any = us[i].unitOrthogonal();
    const Eigen::Vector3d other = us[i].cross(any);
    for (int t = 0; t < 4; ++t) {
      const double a = std::numbers::pi * t / 2;
      const Eigen::Vector3d p = std::cos(a) * any + std::sin(a) * other;
      push(p);
      push(p + delta * us[i]);
      push(p - delta * us[i]);
    }
    push(us[i]);
    push(-us[i]);
  }
  return out;
}

}  // namespace detail

/// min over x in S^{n-1} of #{i : <u_i, x> > 0}: exact for n = 2, 3 (candidate
/// enumeration), sampled for n >= 4 (an upper bound, flagged statistical).
inline FoldResult min_cover_fold(const HemisphereFamily& f, const FoldOptions& opt = {}) {
  detail::require_family(f);
  FoldResult r;
  r.fold = f.size() + 1;
  auto consider = [&](const Eigen::VectorXd& x) {
    const std::size_t c = detail::count_above(f.vectors, x, 0.0);
    if (c < r.fold) {
      r.fold = c;
      r.witness = x;
    }
  };
  if (f.vectors.empty()) {
    r.fold = 0;
    r.witness = Eigen::VectorXd::Unit(static_cast<Eigen::Index>(f.n), 0);
    return r;
  }
  if (f.n == 2) {
    for (const auto& x : detail::circle_candidates(f.vectors)) consider(x);
  } else if (f.n == 3) {
    for (const auto& x : detail::sphere_candidates(f.vectors)) consider(x);
  } else {
    r.mode = FoldMode::Statistical;
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss;
    Eigen::VectorXd x(static_cast<Eigen::Index>(f.n));
    for (std::size_t s = 0; s < opt.samples; ++s) {
      for (Eigen::Index d = 0; d < x.size(); ++d) x(d) = gauss(rng);
      const double len = x.norm();
      if (len < 1e-12) continue;
      consider(x / len);
    }
  }
  return r;
}

/// Parameters t_1 < ... < t_m fed to the moment curve. Integer is t_i = i;
/// Centered spreads them evenly over [-1, 1], which keeps the vectors far
/// better separated and leaves room to shrink the hemispheres into caps.
enum class MomentParameters { Integer, Centered };

/// Moment-curve family u_i = (-1)^i normalize(1, t_i, ..., t_i^{n-1}),
/// i = 1..2k+n-1. The sign pattern makes every open hemisphere hold at least
/// k members; checked before returning.
inline HemisphereFamily gale_vectors(std::size_t n, std::size_t k,
                                     MomentParameters params = MomentParameters::Centered) {
  if (n < 2) throw PreconditionError("gale_vectors: n must be at least 2");
  if (k == 0) throw PreconditionError("gale_vectors: k must be positive");
  HemisphereFamily f{n, {}};
  const std::size_t m = 2 * k + n - 1;
  for (std::size_t i = 1; i <= m; ++i) {
    const double t = params == MomentParameters::Integer
                         ? static_cast<double>(i)
                         : static_cast<double>(2 * i) / static_cast<double>(m - 1) -
                               static_cast<double>(m + 1) / static_cast<double>(m - 1);
    Eigen::VectorXd u(static_cast<Eigen::Index>(n));
    double power = 1;
    for (std::size_t d = 0; d < n; ++d) {
      u(static_cast<Eigen::Index>(d)) = power;
      power *= t;
    }
    u.normalize();
    if (i % 2 == 1) u = -u;
    f.vectors.push_back(u);
  }
  // exact for n <= 3; for larger n a sampled fold below k is still a
  // definite failure
  FoldOptions opt;
  opt.samples = 100'000;
  const auto fold = min_cover_fold(f, opt);
  if (fold.fold < k) {
    throw VerificationError("gale_vectors: family covers only " + std::to_string(fold.fold) +
                            "-fold, expected " + std::to_string(k));
  }
  return f;
}

namespace detail {

/// Points of S^2 where the closed-cap fold (caps <u_i, x> >= c) can attain its
/// minimum: pairwise intersections of the boundary circles, points nudged off
/// them into the adjacent cells, and samples on each lone boundary circle.
inline std::vector<Eigen::VectorXd> cap_candidates(const std::vector<Eigen::VectorXd>& vs,
                                                   double c) {
  std::vector<Eigen::VectorXd> out;
  std::vector<Eigen::Vector3d> us;
  for (const auto& u : vs) us.emplace_back(u(0), u(1), u(2));
  const double delta = 1e-7;
  const double r = std::sqrt(std::max(0.0, 1 - c * c));
  auto push = [&](const Eigen::Vector3d& x) { out.push_back(x.normalized()); };
  auto around = [&](const Eigen::Vector3d& x, const std::vector<Eigen::Vector3d>& normals) {
    push(x);
    for (const auto& g : normals) {
      const Eigen::Vector3d t = g - g.dot(x) * x;  // tangent gradient of <u, x>
      if (t.norm() < 1e-15) continue;
      push(x + delta * t.normalized());
      push(x - delta * t.normalized());
    }
    if (normals.size() == 2) {
      for (double a : {1.0, -1.0})
        for (double b : {1.0, -1.0}) {
          Eigen::Vector3d t = a * (normals[0] - normals[0].dot(x) * x) +
                              b * (normals[1] - normals[1].dot(x) * x);
          if (t.norm() > 1e-15) push(x + delta * t.normalized());
        }
    }
  };
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      const double g = us[i].dot(us[j]);
      const Eigen::Vector3d cross = us[i].cross(us[j]);
      if (cross.squaredNorm() < 1e-20) continue;
      // x = a(u_i + u_j) + t (u_i x u_j) with <u_i,x> = <u_j,x> = c
      const double a = c / (1 + g);
      const double t2 = (1 - 2 * a * a * (1 + g)) / cross.squaredNorm();
      if (t2 < 0) continue;
      const double t = std::sqrt(t2);
      for (double sign : {1.0, -1.0}) {
        around(a * (us[i] + us[j]) + sign * t * cross, {us[i], us[j]});
      }
    }
  }
  for (const auto& u : us) {
    const Eigen::Vector3d e1 = u.unitOrthogonal();
    const Eigen::Vector3d e2 = u.cross(e1);
    for (int s = 0; s < 8; ++s) {
      const double ang = std::numbers::pi * s / 4;
      around(c * u + r * (std::cos(ang) * e1 + std::sin(ang) * e2), {u});
    }
    push(u);
    push(-u);
  }
  return out;
}

inline std::size_t min_cap_fold(const std::vector<Eigen::VectorXd>& centers, std::size_t n,
                                double rho) {
  const double c = std::cos(rho);
  std::size_t best = centers.size() + 1;
  std::vector<Eigen::VectorXd> candidates;
  if (n == 2) {
    // boundary points of each arc, and midpoints between consecutive ones
    std::vector<double> angles;
    for (const auto& u : centers) {
      const double a = std::atan2(u(1), u(0));
      angles.push_back(std::remainder(a + rho, 2 * std::numbers::pi) + std::numbers::pi);
      angles.push_back(std::remainder(a - rho, 2 * std::numbers::pi) + std::numbers::pi);
    }
    std::sort(angles.begin(), angles.end());
    for (std::size_t i = 0; i < angles.size(); ++i) {
      const double a = angles[i];
      const double b = i + 1 < angles.size() ? angles[i + 1] : angles.front() + 2 * std::numbers::pi;
      for (double t : {a, 0.5 * (a + b)})
        candidates.push_back(Eigen::Vector2d(std::cos(t), std::sin(t)));
    }
  } else {
    candidates = cap_candidates(centers, c);
  }
  for (const auto& x : candidates) best = std::min(best, count_at_least(centers, x, c));
  return best;
}

}  // namespace detail

/// Closed-cap fold of a cap cover, evaluated over the same exact candidate
/// sets used by shrink_caps (n = 2, 3).
inline std::size_t cap_cover_fold(const CapCover& caps) {
  if (caps.n != 2 && caps.n != 3) throw PreconditionError("cap_cover_fold: needs n = 2 or 3");
  return detail::min_cap_fold(caps.centers, caps.n, caps.rho);
}

/// Smallest common cap radius (to bisection precision) keeping a k-fold
/// cover by closed caps around the family's vectors; the returned radius is
/// the midpoint between that and pi/2 - 1e-4, and is re-verified.
inline CapCover shrink_caps(const HemisphereFamily& f, std::size_t k) {
  detail::require_family(f);
  if (f.n > 3) throw PreconditionError("shrink_caps: exact verification needs n <= 3");
  if (k == 0) throw PreconditionError("shrink_caps: k must be positive");
  const auto base = min_cover_fold(f);
  if (base.fold < k) {
    throw PreconditionError("shrink_caps: the open hemispheres cover only " +
                            std::to_string(base.fold) + "-fold, below k = " + std::to_string(k));
  }
  const double ceiling = std::numbers::pi / 2 - 1e-4;
  auto feasible = [&](double rho) { return detail::min_cap_fold(f.vectors, f.n, rho) >= k; };
  if (!feasible(ceiling)) {
    throw VerificationError("shrink_caps: caps of radius pi/2 - 1e-4 no longer cover " +
                            std::to_string(k) + "-fold");
  }
  double lo = 0, hi = ceiling;
  for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  CapCover out{f.n, f.vectors, 0.5 * (hi + ceiling)};
  if (!feasible(out.rho)) {
    throw VerificationError("shrink_caps: chosen radius failed re-verification");
  }
  return out;
}

struct BallBorsuk {
  std::size_t value = 0;
  HemisphereFamily family;
  FoldResult fold;
  std::optional<CapCover> caps;  // present for n <= 3
};

/// a_k(B^n) = 2k + n - 1, certified from above by the Gale family and, for
/// n <= 3, its shrunken caps.
inline BallBorsuk ball_borsuk(std::size_t n, std::size_t k, const FoldOptions& opt = {}) {
  BallBorsuk b;
  b.value = 2 * k + n - 1;
  b.family = gale_vectors(n, k);
  b.fold = min_cover_fold(b.family, opt);
  if (n <= 3) {
    if (b.fold.fold < k) {
      throw VerificationError("ball_borsuk: Gale family covers only " +
                              std::to_string(b.fold.fold) + "-fold");
    }
    b.caps = shrink_caps(b.family, k);
  }
  return b;
}

}  // namespace borsuk
