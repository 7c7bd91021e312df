#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "borsuk/error.hpp"
#include "borsuk/graph.hpp"
#include "borsuk/multicolor.hpp"

namespace borsuk {

using Point = Eigen::VectorXd;

/// Finite labelled point configuration. Distances within the relative
/// tolerance eps of the diameter count as diameter pairs.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<Point> points, double eps = 1e-9,
           std::vector<std::string> labels = {})
      : dim_(dim), points_(std::move(points)), labels_(std::move(labels)), eps_(eps) {
    if (dim_ == 0) throw PreconditionError("point set: dimension must be positive");
    if (points_.size() < 2) throw PreconditionError("point set: at least two points required");
    if (!(eps_ > 0) || eps_ >= 0.1) throw PreconditionError("point set: eps must lie in (0, 0.1)");
    if (!labels_.empty() && labels_.size() != points_.size()) {
      throw PreconditionError("point set: label count does not match point count");
    }
    for (const auto& p : points_) {
      if (static_cast<std::size_t>(p.size()) != dim_) {
        throw PreconditionError("point set: point of dimension " + std::to_string(p.size()) +
                                " in a set of dimension " + std::to_string(dim_));
      }
      if (!p.allFinite()) throw PreconditionError("point set: non-finite coordinate");
    }
    double d = 0;
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        d = std::max(d, (points_[i] - points_[j]).norm());
    if (!(d > 0)) throw PreconditionError("point set: diameter is zero");
    diameter_ = d;
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  double eps() const { return eps_; }
  double diameter() const { return diameter_; }

  PointSet with_eps(double eps) const { return PointSet(dim_, points_, eps, labels_); }

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<std::string> labels_;
  double eps_;
  double diameter_ = 0;
};

inline double diameter(const PointSet& s) { return s.diameter(); }

/// Edge {i,j} iff |p_i - p_j| >= D(1 - eps). Any distance strictly inside
/// (D(1 - 3eps), D(1 - eps)) makes the classification ambiguous.
inline Graph diameter_graph(const PointSet& s) {
  const double d = s.diameter();
  const double hi = d * (1 - s.eps());
  const double lo = d * (1 - 3 * s.eps());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double dist = (s[i] - s[j]).norm();
      if (dist >= hi) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      } else if (dist > lo) {
        throw AmbiguousGap("diameter_graph: distance " + std::to_string(dist) + " between points " +
                           std::to_string(i) + " and " + std::to_string(j) +
                           " lies in the ambiguous band below the diameter " +
                           std::to_string(d) + " (eps " + std::to_string(s.eps()) + ")");
      }
    }
  }
  return Graph(s.size(), edges, s.labels());
}

struct VazsonyiReport {
  bool applicable = true;  // only 3-space carries the 2m-2 bound
  bool holds = true;
  bool critical = false;
  std::size_t edges = 0;
  std::size_t bound = 0;
};

inline VazsonyiReport vazsonyi_check(const PointSet& s) {
  VazsonyiReport r;
  r.applicable = s.dim() == 3;
  r.edges = diameter_graph(s).size();
  r.bound = 2 * s.size() - 2;
  r.holds = r.edges <= r.bound;
  r.critical = r.edges == r.bound;
  return r;
}

// ---------------------------------------------------------------------------
// Isometries

/// x -> linear * x + translation with orthogonal linear part.
class Isometry {
 public:
  Isometry(Eigen::MatrixXd linear, Eigen::VectorXd translation, double tol = 1e-9)
      : linear_(std::move(linear)), translation_(std::move(translation)) {
    const auto n = linear_.rows();
    if (linear_.cols() != n || translation_.size() != n || n == 0) {
      throw PreconditionError("isometry: linear part and translation dimensions disagree");
    }
    const double err =
        (linear_.transpose() * linear_ - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (err > tol) {
      throw PreconditionError("isometry: linear part is not orthogonal (deviation " +
                              std::to_string(err) + ")");
    }
  }

  static Isometry identity(std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    return Isometry(Eigen::MatrixXd::Identity(m, m), Eigen::VectorXd::Zero(m));
  }

  std::size_t dim() const { return static_cast<std::size_t>(linear_.rows()); }
  const Eigen::MatrixXd& linear() const { return linear_; }
  const Eigen::VectorXd& translation() const { return translation_; }

  Point operator()(const Point& x) const { return linear_ * x + translation_; }

  /// (this * other)(x) = this(other(x))
  Isometry operator*(const Isometry& other) const {
    return Isometry(linear_ * other.linear_, linear_ * other.translation_ + translation_, 1e-6);
  }

  bool approx_equal(const Isometry& other, double tol = 1e-8) const {
    return (linear_ - other.linear_).cwiseAbs().maxCoeff() <= tol &&
           (translation_ - other.translation_).cwiseAbs().maxCoeff() <= tol;
  }

  double det() const { return linear_.determinant(); }
  double trace() const { return linear_.trace(); }

 private:
  Eigen::MatrixXd linear_;
  Eigen::VectorXd translation_;
};

/// True iff t maps the points bijectively onto themselves within eps * diameter.
inline bool is_invariant(const PointSet& s, const Isometry& t) {
  if (t.dim() != s.dim()) throw PreconditionError("is_invariant: dimension mismatch");
  const double tol = s.eps() * s.diameter();
  std::vector<char> hit(s.size(), 0);
  for (const auto& p : s.points()) {
    const Point image = t(p);
    bool found = false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (!hit[j] && (image - s[j]).norm() <= tol) {
        hit[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace detail {

inline Eigen::Vector3d as3(const Point& p, const char* what) {
  if (p.size() != 3) throw PreconditionError(std::string(what) + ": expected a 3-vector");
  return Eigen::Vector3d(p(0), p(1), p(2));
}

inline Eigen::Matrix3d rotation_about(const Eigen::Vector3d& unit_axis, double angle) {
  return Eigen::AngleAxisd(angle, unit_axis).toRotationMatrix();
}

inline Eigen::Matrix3d reflection_across(const Eigen::Vector3d& unit_normal) {
  return Eigen::Matrix3d::Identity() - 2 * unit_normal * unit_normal.transpose();
}

}  // namespace detail

/// Rotation by 2pi/m about the line center + t*axis, and the reflection in the
/// plane spanned by axis and reference through center.
inline std::vector<Isometry> dihedral_generators(std::size_t m, const Point& axis,
                                                 const Point& reference,
                                                 std::optional<Point> center = std::nullopt) {
  if (m < 2) throw PreconditionError("dihedral_generators: m must be at least 2");
  const Eigen::Vector3d a = detail::as3(axis, "dihedral_generators axis");
  const Eigen::Vector3d r = detail::as3(reference, "dihedral_generators reference");
  if (a.norm() < 1e-12) throw PreconditionError("dihedral_generators: degenerate axis");
  const Eigen::Vector3d normal = a.cross(r);
  if (normal.norm() < 1e-9 * r.norm() || r.norm() < 1e-12) {
    throw PreconditionError("dihedral_generators: reference direction is parallel to the axis");
  }
  const Eigen::Vector3d c = center ? detail::as3(*center, "dihedral_generators center")
                                   : Eigen::Vector3d::Zero();
  const double turn = 2 * std::numbers::pi / static_cast<double>(m);
  const Eigen::Matrix3d rot = detail::rotation_about(a.normalized(), turn);
  const Eigen::Matrix3d ref = detail::reflection_across(normal.normalized());
  return {Isometry(rot, c - rot * c), Isometry(ref, c - ref * c)};
}

namespace detail {

inline void require_regular_tetrahedron(const std::vector<Point>& t, double eps) {
  if (t.size() != 4) throw PreconditionError("tetrahedral_generators: need exactly 4 points");
  for (const auto& p : t) as3(p, "tetrahedral_generators");
  const double edge = (t[0] - t[1]).norm();
  if (!(edge > 0)) throw PreconditionError("tetrahedral_generators: coincident vertices");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (std::abs((t[i] - t[j]).norm() - edge) > eps * edge) {
        throw PreconditionError("tetrahedral_generators: points are not a regular tetrahedron");
      }
    }
  }
}

/// Affine isometry carrying t[i] to t[perm[i]] for a regular tetrahedron t.
inline Isometry tetra_permutation(const std::vector<Point>& t, const std::array<int, 4>& perm) {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& p : t) c += as3(p, "tetra");
  c /= 4;
  Eigen::Matrix3d from, to;
  for (int i = 0; i < 3; ++i) {
    from.col(i) = as3(t[i], "tetra") - c;
    to.col(i) = as3(t[perm[i]], "tetra") - c;
  }
  const Eigen::Matrix3d lin = to * from.inverse();
  return Isometry(lin, c - lin * c, 1e-7);
}

}  // namespace detail

/// Transposition (01) and 4-cycle (0123) of the vertices; together they
/// generate the full symmetry group of the tetrahedron (order 24).
inline std::vector<Isometry> tetrahedral_generators(const std::vector<Point>& tetra,
                                                    double eps = 1e-9) {
  detail::require_regular_tetrahedron(tetra, eps);
  return {detail::tetra_permutation(tetra, {1, 0, 2, 3}),
          detail::tetra_permutation(tetra, {1, 2, 3, 0})};
}

/// All products of the generators, deduplicated; throws TooLarge once the
/// closure exceeds `cap` elements (an infinite or very large group).
inline std::vector<Isometry> group_closure(const std::vector<Isometry>& generators,
                                           std::size_t cap = 200) {
  if (generators.empty()) throw PreconditionError("group_closure: no generators");
  std::vector<Isometry> group{Isometry::identity(generators.front().dim())};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : generators) {
      Isometry next = g * group[i];
      const bool known = std::any_of(group.begin(), group.end(),
                                     [&](const Isometry& h) { return h.approx_equal(next, 1e-7); });
      if (known) continue;
      group.push_back(std::move(next));
      if (group.size() > cap) throw TooLarge("group_closure", group.size(), cap);
    }
  }
  return group;
}

/// A finite group of isometries of 3-space contains a copy of the full
/// tetrahedral group iff it is T_d (24) or O_h (48); both are recognised by
/// order, at least six reflections and exactly eight rotations of order 3.
inline bool contains_tetrahedral_group(const std::vector<Isometry>& group) {
  if (group.empty() || group.front().dim() != 3) return false;
  if (group.size() != 24 && group.size() != 48) return false;
  std::size_t reflections = 0, third_turns = 0;
  for (const auto& g : group) {
    const double det = g.det(), tr = g.trace();
    if (std::abs(det + 1) < 1e-7 && std::abs(tr - 1) < 1e-7) ++reflections;
    if (std::abs(det - 1) < 1e-7 && std::abs(tr) < 1e-7) ++third_turns;
  }
  return reflections >= 6 && third_turns == 8;
}

struct MirrorReport {
  bool every_odd_cycle_meets_plane = true;
  std::vector<Vertex> on_plane;
  /// An odd cycle of the diameter graph avoiding the plane, when one exists.
  std::optional<CycleWitness> avoiding_cycle;
};

/// Plane {x : <normal, x> = offset}. The reflection in it must be a symmetry
/// of s. Every odd cycle meets the plane iff the diameter graph minus the
/// on-plane points is bipartite.
inline MirrorReport mirror_odd_cycle_check(const PointSet& s, const Point& normal, double offset) {
  if (static_cast<std::size_t>(normal.size()) != s.dim()) {
    throw PreconditionError("mirror_odd_cycle_check: normal has the wrong dimension");
  }
  const double len = normal.norm();
  if (!(len > 0)) throw PreconditionError("mirror_odd_cycle_check: zero normal");
  const Point u = normal / len;
  const double c = offset / len;
  const auto n = static_cast<Eigen::Index>(s.dim());
  const Eigen::MatrixXd lin = Eigen::MatrixXd::Identity(n, n) - 2 * u * u.transpose();
  const Isometry mirror(lin, 2 * c * u);
  if (!is_invariant(s, mirror)) {
    throw PreconditionError("mirror_odd_cycle_check: plane is not a symmetry plane of the set");
  }
  const Graph g = diameter_graph(s);
  MirrorReport r;
  std::vector<char> keep(s.size(), 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(u.dot(s[i]) - c) <= s.eps() * s.diameter()) {
      keep[i] = 0;
      r.on_plane.push_back(static_cast<Vertex>(i));
    }
  }
  auto [rest, original] = induced_subgraph(g, keep);
  if (auto odd = shortest_odd_cycle(rest)) {
    for (auto& v : odd->vertices) v = original[v];
    r.every_odd_cycle_meets_plane = false;
    r.avoiding_cycle = std::move(odd);
  }
  return r;
}

struct TheoremReport {
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool conclusion = false;
  bool consistent = true;  // some hypothesis fails or the conclusion holds
  std::string note;
};

namespace detail {

inline void finish(TheoremReport& r) {
  const bool all = std::all_of(r.hypotheses.begin(), r.hypotheses.end(),
                               [](const auto& h) { return h.second; });
  r.consistent = !all || r.conclusion;
}

inline bool generators_fix(const PointSet& s, const std::vector<Isometry>& gens) {
  return !gens.empty() && std::all_of(gens.begin(), gens.end(), [&](const Isometry& t) {
    return t.dim() == s.dim() && is_invariant(s, t);
  });
}

}  // namespace detail

/// Symmetry group containing the full tetrahedral group plus a diameter
/// triangle forces a K4 in the diameter graph.
inline TheoremReport tetrahedral_theorem_check(const PointSet& s,
                                               const std::vector<Isometry>& generators) {
  TheoremReport r;
  bool h1 = detail::generators_fix(s, generators);
  if (h1) {
    try {
      h1 = contains_tetrahedral_group(group_closure(generators));
    } catch (const TooLarge&) {
      h1 = false;
    }
  }
  const Graph g = diameter_graph(s);
  const auto gi = girth(g);
  r.hypotheses = {{"tetrahedral symmetry", h1}, {"girth 3", gi && *gi == 3}};
  r.conclusion = contains_subgraph(g, complete_graph(4)).has_value();
  detail::finish(r);
  return r;
}

}  // namespace borsuk
