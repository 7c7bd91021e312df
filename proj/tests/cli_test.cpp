#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "borsuk/cli.hpp"

namespace borsuk {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("borsuk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const io::Json& j) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << j.dump();
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, ChromaticOfFiveCycle) {
  const auto g = write("c5.json", io::to_json(cycle_graph(5)));
  const auto r = run({"chromatic", g, "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::size_t m = 0;
  in >> m;
  EXPECT_EQ(m, 5u);
  std::string rest((std::istreambuf_iterator<char>(in)), {});
  const auto c = io::coloring_from_json(io::parse(rest, "out"));
  EXPECT_EQ(c.palette, 5u);
  EXPECT_TRUE(validate(cycle_graph(5), c).valid);
}

TEST_F(Cli, FractionalIsAFraction) {
  EXPECT_EQ(run({"fractional", write("c5.json", io::to_json(cycle_graph(5)))}).out, "5/2\n");
  EXPECT_EQ(run({"fractional", write("k4.json", io::to_json(complete_graph(4)))}).out, "4/1\n");
}

TEST_F(Cli, BorsukOfSingleEdge) {
  const auto r = run({"borsuk", write("k2.json", io::to_json(complete_graph(2))), "--kmax", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::parse(r.out, "out");
  EXPECT_EQ(j["a"], io::Json({2, 4, 6}));
  EXPECT_EQ(j["fractional"], "2/1");
  EXPECT_TRUE(j["dichotomy"].get<bool>());
}

TEST_F(Cli, MycielskiSevenVerticesTwelveEdges) {
  const auto r = run({"mycielski", "--k", "1", "--p", "1"});
  ASSERT_EQ(r.code, 0);
  const Graph g = io::graph_from_json(io::parse(r.out, "out"));
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 12u);

  const auto svg = path("m.svg");
  const auto rr = run({"mycielski", "--k", "2", "--p", "1", "--realize", "--svg", svg});
  ASSERT_EQ(rr.code, 0) << rr.err;
  const auto j = io::parse(rr.out, "out");
  const PointSet s = io::points_from_json(j["points"]);
  EXPECT_TRUE(graphs_isomorphic(diameter_graph(s), io::graph_from_json(j["graph"])));
  EXPECT_TRUE(fs::exists(svg));
}

TEST_F(Cli, DiameterGraphRoundTrip) {
  const auto pts = write("w.json", io::to_json(wheel_pyramid(2)));
  const auto r = run({"diamgraph", pts});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::graph_from_json(io::parse(r.out, "out")), diameter_graph(wheel_pyramid(2)));
}

TEST_F(Cli, OutputIsByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"reuleaux", "--sides", "5", "--k", "3"},
      {"disk-cover", "--k", "4"},
      {"sphere-cover", "--n", "3", "--k", "2", "--shrink"},
      {"mycielski", "--k", "2", "--p", "2", "--realize"}};
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  const auto s1 = path("a.svg"), s2 = path("b.svg");
  run({"reuleaux", "--sides", "7", "--k", "2", "--variant", "1", "--svg", s1});
  run({"reuleaux", "--sides", "7", "--k", "2", "--variant", "1", "--svg", s2});
  EXPECT_EQ(io::read_file(s1), io::read_file(s2));
  EXPECT_NE(io::read_file(s1).find("viewBox=\"0 0 1000 1000\""), std::string::npos);
}

TEST_F(Cli, CoverJsonReverifies) {
  for (const std::vector<std::string>& c :
       {std::vector<std::string>{"reuleaux", "--sides", "5", "--k", "4", "--variant", "2"},
        std::vector<std::string>{"disk-cover", "--k", "3"}}) {
    const auto r = run(c);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto file = write("cover.json", io::parse(r.out, "out"));
    const auto v = run({"verify", "cover", file});
    ASSERT_EQ(v.code, 0) << v.err;
    const auto j = io::parse(v.out, "out");
    EXPECT_TRUE(j["borsuk_cover"].get<bool>());
    EXPECT_GE(j["min_fold"].get<std::size_t>(), j["k"].get<std::size_t>());
  }
}

TEST_F(Cli, SphereCover) {
  const auto r = run({"sphere-cover", "--n", "3", "--k", "3", "--shrink"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::parse(r.out, "out");
  EXPECT_EQ(j["vectors"].size(), 8u);
  EXPECT_EQ(j["fold"], 3);
  EXPECT_EQ(j["borsuk_number"], 8);
  EXPECT_LE(j["rho"].get<double>(), std::numbers::pi / 2 - 1e-4);
  const auto plain = io::parse(run({"sphere-cover", "--n", "2", "--k", "1"}).out, "out");
  EXPECT_TRUE(plain["rho"].is_null());
}

TEST_F(Cli, VerifyCheckers) {
  const auto pts = write("m.json", io::to_json(mycielskian_pointset(2, 1)));
  auto report = [&](std::vector<std::string> args) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return io::parse(r.out, "out");
  };
  EXPECT_TRUE(report({"verify", "vazsonyi", pts})["critical"].get<bool>());
  EXPECT_TRUE(report({"verify", "odd-cycles", pts})["pairwise_intersect"].get<bool>());
  EXPECT_TRUE(report({"verify", "mirror", pts, "--normal", "0,1,0"})["every_odd_cycle_meets_plane"]
                  .get<bool>());
  EXPECT_EQ(report({"verify", "dihedral", pts, "--m", "2"})["verdict"], "theorem-consistent");
  EXPECT_EQ(report({"verify", "tetrahedral", pts})["verdict"], "theorem-consistent");
  const auto graph = write("g.json", io::to_json(mycielskian(cycle_graph(5), 1)));
  EXPECT_TRUE(report({"verify", "odd-cycles", graph})["pairwise_intersect"].get<bool>());
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"chromatic", "x.json"}).code, 2);
  EXPECT_EQ(run({"chromatic", "x.json", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"reuleaux", "--sides", "4", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"reuleaux", "--sides", "5", "--k", "1", "--angles", "1,2"}).code, 2);
  EXPECT_EQ(run({"verify", "mirror", "x.json"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense", "x.json"}).code, 2);
  EXPECT_EQ(run({"--eps", "0.5", "disk-cover", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"mycielski", "--k", "1", "--p", "1", "--svg", "x.svg"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, DomainErrorsExitOneWithMessage) {
  const auto missing = run({"fractional", path("absent.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  const auto bad = write("bad.json", io::Json{{"n", 3}, {"edges", {{0, 5}}}});
  const auto r = run({"chromatic", bad, "--k", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("edge endpoint out of range"), std::string::npos);

  const auto tri = run({"reuleaux", "--sides", "3", "--k", "1", "--variant", "1"});
  EXPECT_EQ(tri.code, 1);
  EXPECT_NE(tri.err.find("necessarily regular"), std::string::npos);

  const auto shrink = run({"sphere-cover", "--n", "4", "--k", "1", "--shrink", "--samples", "100"});
  EXPECT_EQ(shrink.code, 1);

  // a pair sitting in the forbidden band just below the diameter
  const auto gap = write("gap.json", io::Json{{"dim", 1}, {"eps", 1e-6}, {"points", {{0.0}, {1.0}, {2e-6}}}});
  const auto g = run({"diamgraph", gap});
  EXPECT_EQ(g.code, 1);
  EXPECT_EQ(run({"--eps", "1e-5", "diamgraph", gap}).code, 0);

  const auto big = write("big.json", io::to_json(cycle_graph(30)));
  EXPECT_EQ(run({"chromatic", big, "--k", "1"}).code, 1);
}

}  // namespace
}  // namespace borsuk
