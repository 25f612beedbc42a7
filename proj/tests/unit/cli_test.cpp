#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "critgroup_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = critgroup::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputeCountVerify) {
  const Result c = run({"compute", "--family", "complete:4"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "{\"invariant_factors\":[\"4\",\"4\"],\"order\":\"16\"}\n");
  EXPECT_EQ(run({"count", "--family", "cube:3"}).out, "384\n");
  const Result v = run({"verify", "--theorem", "1.3", "--family", "petersen"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(nlohmann::json::parse(v.out)["status"], "pass");
  EXPECT_EQ(run({"compute", "--family", "cube:3", "--format", "text"}).out, "Z_2 + Z_8 + Z_24\n");
  EXPECT_EQ(run({"compute", "--family", "complete:4", "--e0", "0", "--format", "text"}).out,
            "Z_2 + Z_8 + Z_24\n");
}

TEST(Cli, TransformsAndFamilies) {
  EXPECT_EQ(run({"line", "--family", "cycle:3"}).out, "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(run({"subdivide", "--family", "path:2"}).out, "3 2\n0 2\n1 2\n");
  EXPECT_EQ(run({"family", "--name", "complete-bipartite", "--params", "1,2"}).out,
            "3 2\n0 1\n0 2\n");
}

TEST(Cli, InputFile) {
  const std::string path = ::testing::TempDir() + "/bowtie.txt";
  std::ofstream(path) << "5 6\n0 1\n0 4\n1 4\n2 3\n2 4\n3 4\n";
  const Result r = run({"verify", "--theorem", "1.2", "--input", path, "--primes", "2", "--format", "text"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("VIOLATED"), std::string::npos);
  const Result strict = run({"verify", "--theorem", "1.3", "--input", path, "--strict"});
  EXPECT_EQ(strict.code, 1);
  EXPECT_EQ(run({"verify", "--theorem", "1.3", "--input", path}).code, 0);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute", "--family", "complete:4", "--input", "x"}).code, 2);
  EXPECT_EQ(run({"compute", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"compute", "--input", "/nonexistent/graph.txt"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "9.9", "--family", "complete:4"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "1.2", "--family", "complete:4", "--primes", "4"}).code, 2);
  const std::string path = ::testing::TempDir() + "/broken.txt";
  std::ofstream(path) << "3 2\n0 1\n";
  EXPECT_EQ(run({"compute", "--input", path}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"suite", "--nmax", "4"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Result serial = run({"suite", "--nmax", "4", "--threads", "1"});
  EXPECT_EQ(serial.out, a.out);
  const auto last = a.out.substr(a.out.rfind('\n', a.out.size() - 2) + 1);
  const auto summary = nlohmann::json::parse(last)["summary"];
  EXPECT_EQ(summary["graphs"], 43);
  EXPECT_EQ(summary["violated"], 0);
  EXPECT_EQ(summary["errors"], 0);
}

TEST(Cli, SuiteOddPrimesUpToSix) {
  const Result r = run({"suite", "--nmax", "6", "--primes", "3,5,7", "--summary"});
  EXPECT_EQ(r.code, 0) << r.out.substr(0, 2000);
}
