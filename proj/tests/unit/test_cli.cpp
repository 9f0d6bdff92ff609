#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gr/tools/cli.hpp"
#include "gr/tools/svg.hpp"

namespace gr::tools {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("gr_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  fs::path dir_;
};

TEST_F(CliTest, ProfileCsvHasHeaderAndKnownValues) {
  const CliRun r = run({"profile", "--family", "grid", "--kind", "vertex", "--nmax", "6", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "N,value,provenance");
  std::vector<std::string> values;
  while (std::getline(lines, line)) values.push_back(line.substr(0, line.find(',', 2)));
  EXPECT_EQ(values, (std::vector<std::string>{"1,4", "2,6", "3,7", "4,8", "5,8", "6,9"}));
}

TEST_F(CliTest, ProfileWritesCsvIntoOutDirectory) {
  const CliRun r = run({"profile", "--family", "tree:3", "--kind", "edge", "--nmax", "3", "--out", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir_ / "profile.csv"),
            "N,value,provenance\n1,3,closed-form:tree(d=3)-edge\n2,4,closed-form:tree(d=3)-edge\n"
            "3,5,closed-form:tree(d=3)-edge\n");
}

TEST_F(CliTest, AuditExitCodes) {
  EXPECT_EQ(run({"audit", "--graph", "path:31", "--ordering", "path", "--nmax", "10"}).code, 0);
  const CliRun spiral = run({"audit", "--graph", "grid:6", "--ordering", "spiral", "--nmax", "6", "--theorems", "4"});
  EXPECT_EQ(spiral.code, 1);
  EXPECT_NE(spiral.out.find("fails"), std::string::npos);
  const CliRun t2 = run({"audit", "--graph", "grid:6", "--nmax", "6", "--theorems", "2,3"});
  EXPECT_EQ(t2.code, 0);
  EXPECT_NE(t2.out.find("c = 2"), std::string::npos);
  EXPECT_EQ(run({"audit", "--graph", "bogus:1"}).code, 2);
  EXPECT_EQ(run({"audit", "--theorems", "5"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, RearrangeAndNormsReadFunctionFiles) {
  const auto f = write("f.csv", "x,y,value\n0,0,2\n0,1,1\n1,0,1\n-1,0,1\n0,-1,1\n");
  const CliRun r = run({"rearrange", "--graph", "grid:3", "--ordering", "spiral", "--in", f.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x,y,value\n0,0,2\n1,0,1\n-1,1,1\n0,1,1\n1,1,1\n");
  const CliRun n = run({"norms", "--graph", "grid:3", "--in", f.string(), "--p", "1,inf", "--format", "csv"});
  ASSERT_EQ(n.code, 0) << n.err;
  EXPECT_EQ(n.out,
            "p,grad_f,grad_f_star,rule,bound,holds\n1,16,14,edge-constants,16,yes\ninf,1,2,containment,2,yes\n");
}

TEST_F(CliTest, CounterexampleWritesWitness) {
  const CliRun r = run({"counterexample", "--ordering", "diamond", "--out", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ratio_squared 6/5"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "witness.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "witness_rearranged.csv"));
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
  const CliRun flag = run({"counterexample", "--ordering", "random", "--seed", "11"});
  ::setenv("GR_SEED", "11", 1);
  const CliRun env = run({"counterexample", "--ordering", "random"});
  ::unsetenv("GR_SEED");
  ASSERT_EQ(flag.code, 0) << flag.err;
  EXPECT_EQ(flag.out, env.out);
}

TEST_F(CliTest, ConfigFileMirrorsFlagsAndFlagsWin) {
  const auto cfg = write("run.ini", "graph = \"ladder:12\"\nordering = \"lex\"\nnmax = 4\ntheorems = \"3\"\n");
  const CliRun r = run({"audit", "--config", cfg.string(), "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  const CliRun overridden = run({"audit", "--config", cfg.string(), "--nmax", "6", "--format", "csv"});
  EXPECT_EQ(std::count(overridden.out.begin(), overridden.out.end(), '\n'), 7);
}

TEST_F(CliTest, ExportImportRoundTripIsByteIdentical) {
  const auto f = write("f.csv", "x,y,value\n0,0,1/3\n2,1,5\n");
  const fs::path first = dir_ / "first";
  const fs::path second = dir_ / "second";
  ASSERT_EQ(run({"export", "--graph", "grid:3", "--ordering", "diamond", "--in", f.string(), "--out", first.string()})
                .code,
            0);
  const CliRun again = run({"export", "--graph", "file:" + (first / "graph.txt").string(), "--ordering",
                         "file:" + (first / "ordering.csv").string(), "--in", (first / "function.csv").string(),
                         "--out", second.string()});
  ASSERT_EQ(again.code, 0) << again.err;
  for (const char* name : {"graph.txt", "ordering.csv", "function.csv"})
    EXPECT_EQ(slurp(first / name), slurp(second / name)) << name;
}

TEST_F(CliTest, RenderIsDeterministic) {
  const CliRun a = run({"render", "--graph", "grid:3", "--ordering", "spiral", "--ranks", "16"});
  const CliRun b = run({"render", "--graph", "grid:3", "--ordering", "spiral", "--ranks", "16"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find(">16</text>"), std::string::npos);
  EXPECT_EQ(a.out.find(">17</text>"), std::string::npos);
  EXPECT_EQ(run({"render", "--graph", "tree:3,2"}).code, 2);
}

TEST(Svg, HeatmapBrightestAtTheMaximum) {
  const Graph g = Graph::grid_window(1);
  const std::vector<std::pair<Coord, Rational>> v{{{0, 0}, 2}};
  const std::string svg = render_function_svg(LatticeFunction::from_coords(Graph::grid_window(2), v));
  EXPECT_NE(svg.find("fill=\"#ffffff\""), std::string::npos);
  const std::string blank = render_function_svg(LatticeFunction(g));
  EXPECT_EQ(blank.find("<rect x=\"16\""), std::string::npos);
  EXPECT_NE(blank.find("<line"), std::string::npos);
}

TEST(Svg, SpiralLabelsSitAtLatticePositions) {
  const std::string svg = render_ordering_svg(Ordering::spiral(Graph::grid_window(2)), 4);
  // Cell (x, y) has its label at (16 + 32 (x + 2) + 16, 16 + 32 (2 - y) + 20).
  EXPECT_NE(svg.find("<text x=\"96\" y=\"100\">1</text>"), std::string::npos);
  EXPECT_NE(svg.find("<text x=\"128\" y=\"100\">2</text>"), std::string::npos);
  EXPECT_NE(svg.find("<text x=\"128\" y=\"68\">3</text>"), std::string::npos);
  EXPECT_NE(svg.find("<text x=\"96\" y=\"68\">4</text>"), std::string::npos);
}

}  // namespace
}  // namespace gr::tools
