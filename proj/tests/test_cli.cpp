#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "beltlab/io.hpp"

namespace fs = std::filesystem;
using beltlab::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(BELTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) {
  return (fs::path(BELTLAB_FIXTURE_DIR) / (name + ".json")).string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp(const std::string& name) { return fs::temp_directory_path() / ("beltlab_cli_" + name); }

}  // namespace

TEST(Cli, AnalyzeJsonToStdout) {
  auto r = run_cli("--quiet --json - analyze --fixture " + fixture("truncated-octahedron"));
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], beltlab::kSchemaVersion);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["vertex_count"], 24);
  EXPECT_EQ(j["class"], "TruncatedOctahedron");
}

TEST(Cli, ClassifyOctagonalPrism) {
  auto r = run_cli("--quiet --json - classify --fixture " + fixture("octagonal-prism"));
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["class"], "NotParallelohedron");
  EXPECT_EQ(j["witness"]["facet_count"], 8);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run_cli("--quiet --samples 200 verify-tiling --fixture " + fixture("rhombic-dodecahedron")).code, 0);
  EXPECT_EQ(run_cli("--quiet --samples 200 verify-tiling --fixture " + fixture("cube-3fold")).code, 0);
  auto bad = temp("mismatch.json");
  fs::remove(bad);
  auto r = run_cli("--quiet --json " + bad.string() + " verify-tiling --fixture " +
                   fixture("cube-density-mismatch"));
  EXPECT_EQ(r.code, 1);
  ASSERT_TRUE(fs::exists(bad));
  Json j = Json::parse(slurp(bad));
  EXPECT_EQ(j["verdict"], "DensityMismatch");
  fs::remove(bad);
}

TEST(Cli, ErrorsExitTwoWithJson) {
  auto bad = temp("broken.json");
  {
    std::ofstream out(bad);
    out << "{\"name\": \"x\", \"generators\": [[1,0,0],[2,0,0],[0,0,1]]}";
  }
  auto r = run_cli("--quiet --json - analyze --fixture " + bad.string());
  EXPECT_EQ(r.code, 2);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["error"], "ParallelGenerators");
  EXPECT_EQ(j["command"], "analyze");
  fs::remove(bad);

  EXPECT_EQ(run_cli("--quiet verify-tiling --fixture " + fixture("octagonal-prism")).code, 2);
  EXPECT_NE(run_cli("--quiet analyze").code, 0);
  EXPECT_NE(run_cli("--quiet --samples 0 verify-tiling --fixture " + fixture("cube")).code, 0);
}

TEST(Cli, SameSeedSameBytes) {
  auto a = temp("a.json"), b = temp("b.json");
  const std::string args = " verify-tiling --fixture " + fixture("truncated-octahedron");
  ASSERT_EQ(run_cli("--quiet --seed 5 --samples 300 --json " + a.string() + args).code, 0);
  ASSERT_EQ(run_cli("--quiet --seed 5 --samples 300 --json " + b.string() + args).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  fs::remove(a);
  fs::remove(b);
}

TEST(Cli, WheelBalanced) {
  auto r = run_cli("--quiet --seed 3 --samples 5 --json - wheel --belt 0 --verify-samples 200 --fixture " +
                   fixture("rhombic-dodecahedron"));
  ASSERT_EQ(r.code, 0) << r.out;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "wheel");
}

TEST(Cli, EvidenceSmall) {
  auto r = run_cli("--quiet --seed 2 --samples 40 --json - evidence --trials 3 --lattices-per-k 1");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, ExportObj) {
  auto out = temp("cube.obj");
  ASSERT_EQ(run_cli("--quiet export-obj --fixture " + fixture("cube") + " -o " + out.string()).code, 0);
  std::ifstream in(out);
  std::string line;
  int v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  EXPECT_EQ(v, 8);
  EXPECT_EQ(f, 12);
  fs::remove(out);
}
