#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "borsuk/euclid.hpp"
#include "borsuk/multicolor.hpp"
#include "borsuk/planar_width.hpp"
#include "borsuk/sphere_cover.hpp"

namespace borsuk::io {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so that serialised output is stable across
/// platforms and tiny floating noise; -0 becomes 0.
inline double canonical_real(double x) {
  if (!std::isfinite(x)) throw FormatError("json: refusing to write a non-finite number");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

inline Json real_array(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(canonical_real(v(i)));
  return a;
}

inline std::string to_fraction(const Rational& r) { return to_fraction_string(r); }

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(what + ": invalid JSON: " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

/// Runs a reader, reporting any structural JSON mismatch as a FormatError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

inline const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string(what) + ": missing \"" + key + "\"");
  return *it;
}

inline std::size_t count(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline double real(const Json& v, const char* what) {
  if (!v.is_number()) throw FormatError(std::string(what) + ": expected a number");
  return v.get<double>();
}

inline Eigen::VectorXd vector(const Json& v, const char* what) {
  if (!v.is_array()) throw FormatError(std::string(what) + ": expected an array of numbers");
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = real(v[i], what);
  return out;
}

inline std::vector<std::string> labels(const Json& j, const char* what) {
  std::vector<std::string> out;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw FormatError(std::string(what) + ": \"labels\" must be an array");
    for (const auto& l : *it) out.push_back(l.get<std::string>());
  }
  return out;
}

}  // namespace detail

// graphs -------------------------------------------------------------------

inline Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline Graph graph_from_json(const Json& j) {
  return detail::guarded("graph", [&] {
    const std::size_t n = detail::count(j, "n", "graph");
    const Json& list = detail::field(j, "edges", "graph");
    if (!list.is_array()) throw FormatError("graph: \"edges\" must be an array");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw FormatError("graph: every edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return Graph(n, edges, detail::labels(j, "graph"));
  });
}

// colourings ---------------------------------------------------------------

inline Json to_json(const MultiColoring& c) {
  Json j;
  j["k"] = c.fold;
  j["m"] = c.palette;
  j["colors"] = c.colors;
  return j;
}

inline MultiColoring coloring_from_json(const Json& j) {
  return detail::guarded("coloring", [&] {
    MultiColoring c;
    c.fold = detail::count(j, "k", "coloring");
    c.palette = detail::count(j, "m", "coloring");
    c.colors = detail::field(j, "colors", "coloring").get<std::vector<std::vector<int>>>();
    return c;
  });
}

// point sets ---------------------------------------------------------------

inline Json to_json(const PointSet& s) {
  Json j;
  j["dim"] = s.dim();
  j["eps"] = canonical_real(s.eps());
  Json pts = Json::array();
  for (const auto& p : s.points()) pts.push_back(real_array(p));
  j["points"] = pts;
  if (!s.labels().empty()) j["labels"] = s.labels();
  return j;
}

inline PointSet points_from_json(const Json& j, std::optional<double> eps_override = {}) {
  return detail::guarded("points", [&] {
    const std::size_t dim = detail::count(j, "dim", "points");
    double eps = 1e-9;
    if (auto it = j.find("eps"); it != j.end()) eps = detail::real(*it, "points");
    if (eps_override) eps = *eps_override;
    const Json& list = detail::field(j, "points", "points");
    if (!list.is_array()) throw FormatError("points: \"points\" must be an array");
    std::vector<Point> pts;
    for (const auto& p : list) pts.push_back(detail::vector(p, "points"));
    return PointSet(dim, pts, eps, detail::labels(j, "points"));
  });
}

// boundary covers ----------------------------------------------------------

inline Json to_json(const Arc& a) {
  Json j;
  j["center"] = real_array(a.center);
  j["radius"] = canonical_real(a.radius);
  j["start"] = canonical_real(a.start);
  j["end"] = canonical_real(a.end);
  return j;
}

inline Json to_json(const Body& b) {
  Json j;
  if (b.is_disk()) {
    j["kind"] = "disk";
    return j;
  }
  j["kind"] = "reuleaux";
  j["width"] = canonical_real(b.reuleaux->width);
  Json angles = Json::array();
  for (double a : extract_angles(*b.reuleaux)) angles.push_back(canonical_real(a));
  j["angles"] = angles;
  return j;
}

inline Json to_json(const CoverReport& r) {
  Json j;
  j["min_fold"] = r.min_fold;
  j["max_patch_diameter"] = canonical_real(r.max_patch_diameter);
  j["width"] = canonical_real(r.width);
  j["borsuk_cover"] = r.borsuk_cover;
  j["weakest_point"] = real_array(r.weakest_point);
  return j;
}

inline Json to_json(const BoundaryCover& c) {
  Json j;
  j["body"] = to_json(c.body);
  j["k"] = c.k;
  Json patches = Json::array();
  for (const auto& p : c.patches) {
    Json arcs = Json::array();
    for (const auto& a : p.arcs) arcs.push_back(to_json(a));
    patches.push_back(Json{{"arcs", arcs}});
  }
  j["patches"] = patches;
  return j;
}

inline Body body_from_json(const Json& j, double eps = 1e-9) {
  const Json& kind = detail::field(j, "kind", "cover body");
  if (kind == "disk") return Body{};
  if (kind != "reuleaux") throw FormatError("cover body: unknown kind " + kind.dump());
  const double width = detail::real(detail::field(j, "width", "cover body"), "cover body");
  const Eigen::VectorXd a = detail::vector(detail::field(j, "angles", "cover body"), "cover body");
  return Body{reuleaux_from_angles(std::vector<double>(a.begin(), a.end()), width, eps)};
}

/// Any extra members (such as a stored "report") are ignored.
inline BoundaryCover cover_from_json(const Json& j, double eps = 1e-9) {
  return detail::guarded("cover", [&] {
    BoundaryCover c;
    c.body = body_from_json(detail::field(j, "body", "cover"), eps);
    c.k = detail::count(j, "k", "cover");
    const Json& patches = detail::field(j, "patches", "cover");
    if (!patches.is_array()) throw FormatError("cover: \"patches\" must be an array");
    for (const auto& p : patches) {
      ArcPatch patch;
      for (const auto& a : detail::field(p, "arcs", "cover patch")) {
        const Eigen::VectorXd center = detail::vector(detail::field(a, "center", "arc"), "arc");
        if (center.size() != 2) throw FormatError("arc: center must have two coordinates");
        patch.arcs.push_back(Arc{Vec2(center(0), center(1)),
                                 detail::real(detail::field(a, "radius", "arc"), "arc"),
                                 detail::real(detail::field(a, "start", "arc"), "arc"),
                                 detail::real(detail::field(a, "end", "arc"), "arc")});
      }
      c.patches.push_back(std::move(patch));
    }
    return c;
  });
}

// spheres ------------------------------------------------------------------

inline Json to_json(const HemisphereFamily& f, std::optional<double> rho = {}) {
  Json j;
  j["n"] = f.n;
  Json vs = Json::array();
  for (const auto& u : f.vectors) vs.push_back(real_array(u));
  j["vectors"] = vs;
  j["rho"] = rho ? Json(canonical_real(*rho)) : Json(nullptr);
  return j;
}

inline HemisphereFamily family_from_json(const Json& j) {
  return detail::guarded("family", [&] {
    HemisphereFamily f;
    f.n = detail::count(j, "n", "family");
    for (const auto& u : detail::field(j, "vectors", "family"))
      f.vectors.push_back(detail::vector(u, "family"));
    return f;
  });
}

// reports ------------------------------------------------------------------

inline Json to_json(const BorsukReport& r) {
  Json j;
  j["kmax"] = r.a.size();
  j["a"] = r.a;
  j["fractional"] = r.fractional ? Json(to_fraction(*r.fractional)) : Json(nullptr);
  j["lower_bound_2k"] = r.lower_bound_2k;
  j["dichotomy"] = r.dichotomy;
  j["subadditive"] = r.subadditive;
  j["fractional_below_ratios"] = r.fractional_below_ratios;
  return j;
}

inline Json to_json(const CycleWitness& c) { return Json(c.vertices); }

inline Json to_json(const OddCycleIntersection& r) {
  Json j;
  j["pairwise_intersect"] = r.pairwise_intersect;
  if (r.disjoint_pair) {
    j["disjoint_pair"] = {to_json(r.disjoint_pair->first), to_json(r.disjoint_pair->second)};
  } else {
    j["disjoint_pair"] = nullptr;
  }
  return j;
}

inline Json to_json(const VazsonyiReport& r) {
  Json j;
  j["applicable"] = r.applicable;
  j["holds"] = r.holds;
  j["critical"] = r.critical;
  j["edges"] = r.edges;
  j["bound"] = r.bound;
  return j;
}

inline Json to_json(const MirrorReport& r) {
  Json j;
  j["every_odd_cycle_meets_plane"] = r.every_odd_cycle_meets_plane;
  j["on_plane"] = r.on_plane;
  j["avoiding_cycle"] = r.avoiding_cycle ? to_json(*r.avoiding_cycle) : Json(nullptr);
  return j;
}

inline Json to_json(const TheoremReport& r) {
  Json j;
  Json hyp = Json::object();
  for (const auto& [name, ok] : r.hypotheses) hyp[name] = ok;
  j["hypotheses"] = hyp;
  j["conclusion"] = r.conclusion;
  j["consistent"] = r.consistent;
  j["verdict"] = r.consistent ? "theorem-consistent" : "theorem-inconsistent";
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace borsuk::io
