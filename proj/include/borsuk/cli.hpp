#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "borsuk/io.hpp"
#include "borsuk/space3d.hpp"
#include "borsuk/svg.hpp"

namespace borsuk::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

namespace detail {

inline Eigen::VectorXd parse_vector(const std::string& text, std::size_t want, const char* flag) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a number: '" + item + "'");
    }
  }
  if (want && xs.size() != want) {
    throw CLI::ValidationError(flag, "expected " + std::to_string(want) + " comma-separated numbers");
  }
  return Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("cannot write " + path);
}

inline const CLI::Validator kOddSides(
    [](std::string& v) -> std::string {
      const long n = std::stol(v);
      return n >= 3 && n % 2 == 1 ? "" : "sides must be an odd number of at least 3";
    },
    "ODD>=3");

inline const CLI::Validator kEps(
    [](std::string& v) -> std::string {
      const double e = std::stod(v);
      return e > 0 && e < 0.1 ? "" : "eps must lie in (0, 0.1)";
    },
    "(0,0.1)");

/// Default generators for the tetrahedral check: the coordinate tetrahedron
/// centred at the origin.
inline std::vector<Point> coordinate_tetrahedron() {
  return {Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, -1, -1), Eigen::Vector3d(-1, 1, -1),
          Eigen::Vector3d(-1, -1, 1)};
}

}  // namespace detail

/// Runs one command line (program name excluded). Results go to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-fold Borsuk numbers, diameter graphs and boundary covers"};
  app.name("borsuk");
  app.require_subcommand(1);
  std::optional<double> eps;
  app.add_option("--eps", eps, "relative tolerance for diameter classification")
      ->check(detail::kEps);

  std::string input, svg_path;
  std::size_t k = 1, kmax = 1, sides = 3, n = 2, p = 0, m = 1;
  double width = 1;
  std::string angles_text, normal_text, axis_text = "0,0,1", reference_text = "1,0,0",
                                        tetra_text, center_text;
  double offset = 0;
  bool shrink = false, realize = false;
  std::size_t samples = 1'000'000;
  unsigned variant = 0;
  std::string kind;

  auto* diamgraph = app.add_subcommand("diamgraph", "diameter graph of a point set");
  diamgraph->add_option("points", input, "point-set JSON")->required();
  diamgraph->add_option("--svg", svg_path, "write a planar projection");

  auto* chromatic = app.add_subcommand("chromatic", "k-fold chromatic number with a witness");
  chromatic->add_option("graph", input, "graph JSON")->required();
  chromatic->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* fractional = app.add_subcommand("fractional", "exact fractional chromatic number");
  fractional->add_option("graph", input, "graph JSON")->required();

  auto* borsuk_cmd = app.add_subcommand("borsuk", "a_k table and structural checks");
  borsuk_cmd->add_option("graph", input, "graph JSON")->required();
  borsuk_cmd->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);

  auto* reuleaux = app.add_subcommand("reuleaux", "k-fold boundary cover of a Reuleaux polygon");
  reuleaux->add_option("--sides", sides)->required()->check(detail::kOddSides);
  reuleaux->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  reuleaux->add_option("--angles", angles_text, "comma-separated side angles (sum pi)");
  auto* variant_opt = reuleaux->add_option("--variant", variant, "built-in non-regular profile")
                          ->check(CLI::PositiveNumber);
  reuleaux->get_option("--angles")->excludes(variant_opt);
  reuleaux->add_option("--width", width)->check(CLI::PositiveNumber);
  reuleaux->add_option("--svg", svg_path);

  auto* disk = app.add_subcommand("disk-cover", "k-fold boundary cover of the unit-diameter disk");
  disk->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  disk->add_option("--svg", svg_path);

  auto* sphere = app.add_subcommand("sphere-cover", "Gale hemisphere family of S^(n-1)");
  sphere->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  sphere->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  sphere->add_flag("--shrink", shrink, "shrink to closed caps (n <= 3)");
  sphere->add_option("--samples", samples, "directions sampled when n >= 4")
      ->check(CLI::PositiveNumber);
  sphere->add_option("--svg", svg_path);

  auto* myc = app.add_subcommand("mycielski", "generalized Mycielskian of an odd cycle");
  myc->add_option("--k", k, "cycle C_(2k+1)")->required()->check(CLI::PositiveNumber);
  myc->add_option("--p", p)->required()->check(CLI::NonNegativeNumber);
  myc->add_flag("--realize", realize, "also realise it as a diameter graph in 3-space");
  myc->add_option("--svg", svg_path, "planar projection of the realisation")->needs("--realize");

  auto* verify = app.add_subcommand("verify", "run a checker on a file");
  verify->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"vazsonyi", "odd-cycles", "mirror", "cover", "tetrahedral", "dihedral"}));
  verify->add_option("file", input)->required();
  verify->add_option("--normal", normal_text, "mirror: plane normal");
  verify->add_option("--offset", offset, "mirror: plane offset <normal, x> = offset");
  verify->add_option("--m", m, "dihedral: rotation order 2m+1")->check(CLI::PositiveNumber);
  verify->add_option("--axis", axis_text, "dihedral: rotation axis");
  verify->add_option("--reference", reference_text, "dihedral: mirror reference direction");
  verify->add_option("--center", center_text, "dihedral: point on the axis");
  verify->add_option("--tetra", tetra_text, "tetrahedral: 12 coordinates of a regular tetrahedron");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (verify->parsed() && kind == "mirror" && normal_text.empty()) {
      throw CLI::RequiredError("--normal");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Eigen::VectorXd normal, axis, reference, tetra;
  std::optional<Eigen::VectorXd> center;
  std::vector<double> angles;
  try {
    if (!normal_text.empty()) normal = detail::parse_vector(normal_text, 0, "--normal");
    axis = detail::parse_vector(axis_text, 3, "--axis");
    reference = detail::parse_vector(reference_text, 3, "--reference");
    if (!center_text.empty()) center = detail::parse_vector(center_text, 3, "--center");
    if (!tetra_text.empty()) tetra = detail::parse_vector(tetra_text, 12, "--tetra");
    if (!angles_text.empty()) {
      const Eigen::VectorXd a = detail::parse_vector(angles_text, sides, "--angles");
      angles.assign(a.begin(), a.end());
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const double tol = eps.value_or(1e-9);
  auto load = [&](const std::string& path) { return io::parse(io::read_file(path), path); };
  auto load_points = [&](const std::string& path) { return io::points_from_json(load(path), eps); };

  try {
    if (diamgraph->parsed()) {
      const PointSet s = load_points(input);
      const Graph g = diameter_graph(s);
      out << io::dump(io::to_json(g));
      if (!svg_path.empty()) detail::write_text(svg_path, svg::render_points(s, g));
    } else if (chromatic->parsed()) {
      const Graph g = io::graph_from_json(load(input));
      const auto r = chi_k(g, k);
      out << r.m << "\n" << io::dump(io::to_json(r.witness));
    } else if (fractional->parsed()) {
      out << io::to_fraction(fractional_chromatic(io::graph_from_json(load(input)))) << "\n";
    } else if (borsuk_cmd->parsed()) {
      out << io::dump(io::to_json(borsuk_sequence(io::graph_from_json(load(input)), kmax)));
    } else if (reuleaux->parsed()) {
      if (variant) angles = nonregular_angles((sides - 1) / 2, variant);
      const ReuleauxPolygon poly = angles.empty()
                                       ? regular_reuleaux((sides - 1) / 2, width)
                                       : reuleaux_from_angles(angles, width, tol);
      const BoundaryCover c = reuleaux_cover(poly, k);
      const CoverReport r = verify_cover(c);
      io::Json j = io::to_json(c);
      j["report"] = io::to_json(r);
      out << io::dump(j);
      if (!svg_path.empty()) detail::write_text(svg_path, svg::render_cover(c, r));
    } else if (disk->parsed()) {
      const BoundaryCover c = disk_cover(k);
      const CoverReport r = verify_cover(c);
      io::Json j = io::to_json(c);
      j["report"] = io::to_json(r);
      out << io::dump(j);
      if (!svg_path.empty()) detail::write_text(svg_path, svg::render_cover(c, r));
    } else if (sphere->parsed()) {
      FoldOptions opt;
      opt.samples = samples;
      const HemisphereFamily fam = gale_vectors(n, k);
      const FoldResult fold = min_cover_fold(fam, opt);
      std::optional<double> rho;
      if (shrink) rho = shrink_caps(fam, k).rho;
      io::Json j = io::to_json(fam, rho);
      j["k"] = k;
      j["fold"] = fold.fold;
      j["fold_mode"] = fold.mode == FoldMode::Exact ? "exact" : "statistical";
      j["borsuk_number"] = 2 * k + n - 1;
      out << io::dump(j);
      if (!svg_path.empty()) detail::write_text(svg_path, svg::render_family(fam, rho));
    } else if (myc->parsed()) {
      const Graph g = mycielskian(cycle_graph(2 * k + 1), p);
      if (!realize) {
        out << io::dump(io::to_json(g));
      } else {
        const auto r = mycielskian_pointset_construction(k, p);
        io::Json j;
        j["graph"] = io::to_json(g);
        j["points"] = io::to_json(r.points);
        j["margin"] = io::canonical_real(r.layers.margin);
        out << io::dump(j);
        if (!svg_path.empty()) {
          detail::write_text(svg_path, svg::render_points(r.points, diameter_graph(r.points)));
        }
      }
    } else if (verify->parsed()) {
      io::Json report;
      if (kind == "cover") {
        const BoundaryCover c = io::cover_from_json(load(input), tol);
        report = io::to_json(verify_cover(c));
        report["k"] = c.k;
        report["patches"] = c.patches.size();
      } else if (kind == "odd-cycles") {
        const io::Json j = load(input);
        const Graph g = j.contains("points") ? diameter_graph(io::points_from_json(j, eps))
                                             : io::graph_from_json(j);
        report = io::to_json(odd_cycles_pairwise_intersect(g));
      } else {
        const PointSet s = load_points(input);
        if (kind == "vazsonyi") {
          report = io::to_json(vazsonyi_check(s));
        } else if (kind == "mirror") {
          report = io::to_json(mirror_odd_cycle_check(s, normal, offset));
        } else if (kind == "tetrahedral") {
          std::vector<Point> t = detail::coordinate_tetrahedron();
          if (tetra.size() == 12) {
            for (int i = 0; i < 4; ++i) t[i] = tetra.segment(3 * i, 3);
          }
          report = io::to_json(tetrahedral_theorem_check(s, tetrahedral_generators(t, tol)));
        } else {
          report = io::to_json(
              dihedral_theorem_check(s, m, dihedral_generators(2 * m + 1, axis, reference, center)));
        }
      }
      out << io::dump(report);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace borsuk::cli
