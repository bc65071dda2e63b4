#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LEXFIRST_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lexfirst_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolveLfSat) {
  const CliRun r = run("solve lf-sat --in " + file("f.cnf", "p cnf 2 2\n-1 -1 -1 0\n1 2 2 0\n"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["lf"], "21");
  const CliRun u = run("solve lf-sat --in " + file("u.cnf", "p cnf 1 2\n1 0\n-1 0\n"));
  ASSERT_EQ(u.code, 0);
  EXPECT_EQ(json::parse(u.out)["lf"], "UNSAT");
}

TEST_F(Cli, DecideOddMinSat) {
  EXPECT_EQ(run("decide odd-min-sat --in " + file("f.cnf", "p cnf 2 2\n-1 -1 -1 0\n1 2 2 0\n")).out, "member\n");
  EXPECT_EQ(run("decide odd-min-sat --in " + file("g.cnf", "p cnf 2 1\n-2 -2 -2 0\n")).out, "nonmember\n");
}

TEST_F(Cli, ReduceAndColor) {
  const std::string tri = file("tri.json", R"({"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]})");
  ASSERT_EQ(run("reduce rho4 --in " + tri + " --out " + path("rho.json")).code, 0);
  const CliRun r = run("solve lf-color --k 4 --in " + path("rho.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["lf"], "000123");
  for (const char* s : {"chronological", "forward-checking", "guided"}) {
    EXPECT_EQ(json::parse(run("solve lf-color --k 3 --strategy " + std::string(s) + " --in " + tri).out)["lf"], "012");
  }
  const std::string f = file("f.cnf", "p cnf 1 1\n1 1 1 0\n");
  const CliRun sigma = run("reduce sigma --in " + f);
  ASSERT_EQ(sigma.code, 0);
  const CliRun pipe = run("reduce pipeline --in " + f);
  ASSERT_EQ(pipe.code, 0);
  EXPECT_EQ(json::parse(pipe.out)["n"].get<std::size_t>(), 2 * json::parse(sigma.out)["n"].get<std::size_t>());
}

TEST_F(Cli, PVariants) {
  const CliRun r = run("solve p-sat --in " + file("p.json", R"({"n": 3, "clauses": [[1, 2], [1, -3]], "designated": 1})"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["member"], true);
  EXPECT_EQ(json::parse(r.out)["lf"], "010");
  const CliRun k = run("solve p-knapsack --in " + file("k.json", R"({"s": [1, 2], "v": [3, 1], "k": 3, "b": 2})"));
  ASSERT_EQ(k.code, 0);
  EXPECT_EQ(json::parse(k.out)["lf"], "10");
}

TEST_F(Cli, GadgetsAndGenerators) {
  for (const char* kind : {"equality", "or", "crossover"}) {
    const CliRun r = run(std::string("gadget verify --kind ") + kind);
    EXPECT_EQ(r.code, 0) << kind;
    EXPECT_TRUE(json::parse(r.out)["pass"].get<bool>()) << kind;
  }
  const CliRun cnf = run("gen cnf --count 5 --n-max 4 --z-max 4 --seed 7");
  ASSERT_EQ(cnf.code, 0);
  EXPECT_EQ(json::parse(cnf.out).size(), 5u);
  EXPECT_EQ(run("gen cnf --count 5 --seed 7").out, run("gen cnf --count 5 --seed 7").out);
  ASSERT_EQ(run("gen planar --count 4 --n-max 6 --seed 1 --out " + path("planar")).code, 0);
  EXPECT_EQ(std::distance(fs::directory_iterator(path("planar")), fs::directory_iterator{}), 4);
}

TEST_F(Cli, VerifyReportsAreByteIdentical) {
  const std::string args = "verify eq1 --seed 4 --count 20 --n-max 6 --report ";
  ASSERT_EQ(run(args + path("a.json")).code, 0);
  ASSERT_EQ(run(args + path("b.json")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(json::parse(slurp(path("a.json")))["cases"], 25);
  EXPECT_EQ(run("verify selfred --seed 2 --count 10 --n-max 5").code, 0);
  EXPECT_EQ(run("verify gadgets").code, 0);
  EXPECT_EQ(run("verify thm23 --seed 2 --count 5 --n-max 2 --z-max 2").code, 0);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("solve lf-color --k 99").code, 2);
  EXPECT_EQ(run("solve lf-sat --in " + file("bad.cnf", "p cnf 2 1\n1 7 0\n")).code, 2);
  EXPECT_EQ(run("solve lf-sat --in " + path("missing.cnf")).code, 2);
  EXPECT_EQ(run("solve p-sat --in " + file("bad.json", "{not json")).code, 2);
  EXPECT_EQ(run("gadget verify --kind triangle").code, 2);
  EXPECT_EQ(run("gadget verify --kind crossover --cap 10").code, 2);
  EXPECT_EQ(run("verify thm23 --n-max 30").code, 2);
  EXPECT_EQ(run("verify selfred --family clique").code, 2);
  EXPECT_EQ(run("reduce sigma --in " + file("wide.cnf", "p cnf 4 1\n1 2 3 4 0\n")).code, 2);
  EXPECT_EQ(run("reduce sigma --wide split --in " + path("wide.cnf")).code, 0);
  EXPECT_EQ(run("--help").code, 0);
}
