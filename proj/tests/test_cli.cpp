#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PSL2OGS_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string squash(std::string s) {
  std::erase_if(s, [](char c) { return c == ' ' || c == '\n'; });
  return s;
}

}  // namespace

TEST(Cli, TablesGolden) {
  const CliRun r = run("tables --q 29");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, slurp(PSL2OGS_TESTDATA "/tables_q29.tsv"));
}

TEST(Cli, Params) {
  const CliRun r = run("params --q 29");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(squash(r.out), R"({"p":29,"kappa":1,"modulus":[0,1],"q":29,"t":15,"a":4,"b":1})");
}

TEST(Cli, ComposeAndDecompose) {
  const CliRun c = run("compose --q 29 --k 5 --x 7 --y 9");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(squash(c.out), R"({"matrix":[2,26,25,21],"bn":{"in_borel":false,"a":14,"x":3,"y":4}})");
  const CliRun d = run("decompose --q 29 --matrix 2,26,25,21");
  EXPECT_EQ(d.status, 0);
  EXPECT_EQ(squash(d.out), R"({"bn":{"in_borel":false,"a":14,"x":3,"y":4},"ogs":{"k":5,"ell":0,"x":7,"y":9}})");
  const CliRun b = run("compose --q 29 --k 7 --ell 1 --x 8 --y 5");
  EXPECT_NE(squash(b.out).find(R"("bn":{"in_borel":false,"a":15,"x":0,"y":12})"), std::string::npos);
}

TEST(Cli, Order) {
  const CliRun r = run("order --q 29");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(squash(r.out), R"({"a":4,"order":15,"sl2_order":30})");
  const CliRun m = run("order --q 7 --matrix 1,1,0,1");
  EXPECT_EQ(squash(m.out), R"({"matrix":[1,1,0,1],"order":7})");
}

TEST(Cli, VerifyExitCodes) {
  const CliRun ok = run("verify --q 29");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("q=29 suite=all: 49 checks, 0 failed, 0 skipped"), std::string::npos);
  const CliRun bad = run("verify --q 7 --suite identities");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("FAIL identities.beta_reflection"), std::string::npos);
  const CliRun json = run("verify --q 5 --suite field --json");
  EXPECT_EQ(json.status, 0);
  EXPECT_NE(squash(json.out).find(R"("pass":true)"), std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("params --q 6").status, 2);
  EXPECT_EQ(run("params --q 29 --a 2").status, 2);
  EXPECT_EQ(run("compose --q 29 --k 15 --x 0 --y 1").status, 2);
  EXPECT_EQ(run("decompose --q 7 --matrix 2,0,0,2").status, 2);
  EXPECT_EQ(run("verify --q 29 --suite nope").status, 2);
  EXPECT_EQ(run("verify --q 2048").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("tables --q 29 --format xml").status, 2);
}
