#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "spg/cli.hpp"
#include "support/fixtures.hpp"

namespace spg {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spgq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return SPG_TEST_DATA_DIR "/" + name; }

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("spgq_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& s) const { return path_ / s; }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

// F1 labels: s=0 a=1 c=2 h=3 b=4 t=5. F3: s=0 ... t=7.
TEST(CliQuery, F1EveEdges) {
  const auto r = cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5", "--k", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "0 1\n0 2\n1 2\n1 3\n2 4\n3 4\n4 5\n");
}

TEST(CliQuery, SourceEqualsTargetIsUsageError) {
  const auto r = cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "0", "--k", "4"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
}

TEST(CliQuery, UsageAndIoErrors) {
  EXPECT_EQ(cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "99", "--k", "4"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5"}).code, kExitUsage);
  EXPECT_EQ(cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5", "--k", "4",
                 "--mode", "fast"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5", "--k", "4",
                 "--format", "paths"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"query", "--graph", fixture("missing.txt"), "--source", "0", "--target", "5", "--k", "4"}).code,
            kExitIo);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(CliQuery, MalformedGraphIsIoError) {
  TempDir dir;
  fs::create_directories(dir / "");
  std::ofstream(dir / "bad.txt") << "0 1\n1 x\n";
  const auto r = cli({"query", "--graph", (dir / "bad.txt").string(), "--source", "0", "--target", "1", "--k", "2"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CliQuery, F3UpperVersusEve) {
  const std::vector<std::string> base{"query", "--graph", fixture("f3.txt"), "--source", "0", "--target", "7", "--k", "7"};
  auto upper = base;
  upper.insert(upper.end(), {"--mode", "upper"});
  auto eve = base;
  eve.insert(eve.end(), {"--mode", "eve"});
  EXPECT_EQ(lines(cli(upper).out), 8u);
  EXPECT_EQ(lines(cli(eve).out), 6u);
}

TEST(CliQuery, EmptyResultIsSuccess) {
  const auto r = cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5", "--k", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliQuery, OracleOverflowExitCode) {
  const auto r = cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5", "--k", "4",
                      "--mode", "oracle", "--path-limit", "2"});
  EXPECT_EQ(r.code, kExitOverflow);
}

TEST(CliQuery, OraclePaths) {
  const auto r = cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5", "--k", "4",
                      "--mode", "oracle", "--format", "paths"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0 1 2 4 5\n0 1 3 4 5\n0 2 4 5\n");
}

TEST(CliQuery, DotMarksEndpoints) {
  const auto r = cli({"query", "--graph", fixture("f1.txt"), "--source", "0", "--target", "5", "--k", "3",
                      "--format", "dot"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "digraph spg {\n"
            "  0 [shape=box];\n"
            "  5 [shape=doublecircle];\n"
            "  0 -> 2;\n"
            "  2 -> 4;\n"
            "  4 -> 5;\n"
            "}\n");
}

TEST(CliQuery, JsonRecord) {
  const auto r = cli({"query", "--graph", fixture("f3.txt"), "--source", "0", "--target", "7", "--k", "7",
                      "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  const auto& rec = j["record"];
  EXPECT_EQ(rec["query"]["source"], 0);
  EXPECT_EQ(rec["query"]["target"], 7);
  EXPECT_EQ(rec["query"]["k"], 7);
  EXPECT_EQ(rec["mode"], "eve");
  EXPECT_EQ(rec["status"], "ok");
  EXPECT_TRUE(rec["error"].is_null());
  EXPECT_EQ(rec["edge_count"], 6);
  EXPECT_EQ(rec["vertex_count"], 6);
  EXPECT_EQ(rec["labels"]["candidate"], 10);
  EXPECT_EQ(rec["labels"]["failing"], 2);
  EXPECT_EQ(rec["labels"]["undetermined"], 2);
  EXPECT_EQ(rec["labels"]["definite"], 6);
  EXPECT_EQ(rec["labels"]["confirmed"], 0);
  for (const char* key : {"distance", "propagation", "labeling", "verification", "total"})
    EXPECT_TRUE(rec["timings_ms"][key].is_number()) << key;
  EXPECT_EQ(rec["metrics"]["graph_edges"], 10);
  EXPECT_EQ(rec["metrics"]["spg_edges"], 6);
  EXPECT_EQ(rec["metrics"]["upper_edges"], 8);
  EXPECT_DOUBLE_EQ(rec["metrics"]["coverage_ratio"].get<double>(), 0.6);
  EXPECT_DOUBLE_EQ(rec["metrics"]["redundant_ratio"].get<double>(), 2.0 / 6.0);
  ASSERT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(j["edges"][0], nlohmann::json::array({0, 1}));
}

// Drops every timing field so two runs can be compared exactly.
void strip_timings(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("timings_ms");
    j.erase("time_ms");
    for (auto& [key, value] : j.items()) strip_timings(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timings(value);
  }
}

TEST(CliBatch, ThreeQueriesOnF1) {
  TempDir dir;
  fs::create_directories(dir / "");
  std::ofstream(dir / "q.tsv") << "0\t5\t3\n0\t5\t4\n1\t5\t3\n";
  const auto r = cli({"batch", "--graph", fixture("f1.txt"), "--queries", (dir / "q.tsv").string(),
                      "--out", (dir / "out").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = nlohmann::json::parse(slurp(dir / "out/report.json"));
  ASSERT_EQ(report["records"].size(), 3u);
  EXPECT_EQ(report["aggregate"]["eve"]["queries"], 3);
  EXPECT_EQ(report["aggregate"]["eve"]["failures"], 0);
  EXPECT_EQ(report["query_count"], 3);
  EXPECT_EQ(slurp(dir / "out/queries.tsv"), "0\t5\t3\n0\t5\t4\n1\t5\t3\n");
  // Edge counts in the records match the exported files.
  for (std::size_t i = 0; i < 3; ++i) {
    const auto file = slurp(dir / ("out/eve/q" + std::to_string(i) + ".edges"));
    EXPECT_EQ(report["records"][i]["edge_count"].get<std::size_t>(), lines(file));
    EXPECT_EQ(report["records"][i]["index"], i);
  }
  EXPECT_EQ(lines(slurp(dir / "out/eve/q1.edges")), 7u);
  // Aggregates are recomputable from the records.
  double mean = 0;
  for (const auto& rec : report["records"]) mean += rec["metrics"]["coverage_ratio"].get<double>();
  EXPECT_NEAR(report["aggregate"]["eve"]["mean_coverage_ratio"].get<double>(), mean / 3, 1e-12);
}

TEST(CliBatch, SameSeedIsByteIdentical) {
  TempDir dir;
  const auto g = fixture("f3.txt");
  for (const char* out : {"a", "b"}) {
    const auto r = cli({"batch", "--graph", g, "--gen", "6", "--k", "5", "--seed", "11",
                        "--mode", "eve,upper", "--out", (dir / out).string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  EXPECT_EQ(slurp(dir / "a/queries.tsv"), slurp(dir / "b/queries.tsv"));
  for (const char* mode : {"eve", "upper"})
    for (int i = 0; i < 6; ++i) {
      const std::string f = std::string(mode) + "/q" + std::to_string(i) + ".edges";
      EXPECT_EQ(slurp(dir / (std::string("a/") + f)), slurp(dir / (std::string("b/") + f)));
    }
}

TEST(CliBatch, ParallelMatchesSerialExceptTimings) {
  TempDir dir;
  fs::create_directories(dir / "");
  {
    std::ofstream g(dir / "g.txt");
    write_edge_list(g, testing::random_graph(60, 4.0, 5));
  }
  for (auto [out, workers] : {std::pair{"serial", "1"}, std::pair{"par", "4"}}) {
    const auto r = cli({"batch", "--graph", (dir / "g.txt").string(), "--gen", "20", "--k", "6",
                        "--seed", "3", "--mode", "eve,oracle", "--parallel", workers,
                        "--out", (dir / out).string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
  }
  auto a = nlohmann::json::parse(slurp(dir / "serial/report.json"));
  auto b = nlohmann::json::parse(slurp(dir / "par/report.json"));
  a["graph"].erase("path");
  b["graph"].erase("path");
  strip_timings(a);
  strip_timings(b);
  EXPECT_EQ(a, b);
}

TEST(CliBatch, EveEqualsOracleOnRandomGraphs) {
  TempDir dir;
  fs::create_directories(dir / "");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto path = dir / ("g" + std::to_string(seed) + ".txt");
    {
      std::ofstream g(path);
      write_edge_list(g, testing::random_graph(30, 3.0, seed + 100));
    }
    const auto out = dir / ("out" + std::to_string(seed));
    const auto r = cli({"batch", "--graph", path.string(), "--gen", "10", "--k", "6",
                        "--seed", std::to_string(seed), "--mode", "eve,oracle", "--out", out.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto report = nlohmann::json::parse(slurp(out / "report.json"));
    ASSERT_EQ(report["equivalence"].size(), 10u);
    for (const auto& e : report["equivalence"]) EXPECT_EQ(e["equal"], true);
    EXPECT_EQ(report["records"].size(), 20u);
  }
}

TEST(CliBatch, PerQueryFailuresAreRecorded) {
  TempDir dir;
  fs::create_directories(dir / "");
  std::ofstream(dir / "q.tsv") << "0\t5\t4\n0\t5\t3\n";
  const auto r = cli({"batch", "--graph", fixture("f1.txt"), "--queries", (dir / "q.tsv").string(),
                      "--mode", "oracle", "--path-limit", "2", "--out", (dir / "out").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = nlohmann::json::parse(slurp(dir / "out/report.json"));
  EXPECT_EQ(report["records"][0]["status"], "overflow");
  EXPECT_EQ(report["records"][1]["status"], "ok");
  EXPECT_EQ(report["aggregate"]["oracle"]["failures"], 1);
}

TEST(CliBatch, BadQueryFileIsIoError) {
  TempDir dir;
  fs::create_directories(dir / "");
  std::ofstream(dir / "q.tsv") << "0\t42\t3\n";
  const auto r = cli({"batch", "--graph", fixture("f1.txt"), "--queries", (dir / "q.tsv").string(),
                      "--out", (dir / "out").string()});
  EXPECT_EQ(r.code, kExitIo);
}

TEST(CliGenQueries, ReproducibleTsv) {
  const std::vector<std::string> args{"gen-queries", "--graph", fixture("f1.txt"), "--k", "3", "--n", "2", "--seed", "1"};
  const auto a = cli(args);
  const auto b = cli(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(lines(a.out), 2u);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliGenQueries, ChainSingleAdjacentPair) {
  TempDir dir;
  fs::create_directories(dir / "");
  std::ofstream(dir / "chain.txt") << "4 9\n";
  const auto r = cli({"gen-queries", "--graph", (dir / "chain.txt").string(), "--k", "1", "--n", "1",
                      "--seed", "0", "--out", (dir / "q.tsv").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir / "q.tsv"), "4\t9\t1\n");
}

TEST(CliGenQueries, InsufficientPairs) {
  const auto r = cli({"gen-queries", "--graph", fixture("f1.txt"), "--k", "1", "--n", "10", "--seed", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("7"), std::string::npos);
}

}  // namespace
}  // namespace spg
