#include "sequiv/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sequiv;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sequiv_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string &name, const std::string &body) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << body;
    return path;
  }

  std::filesystem::path dir_;
};

bool contains(const std::string &hay, const std::string &needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_F(CliTest, InvariantsOfTrefoil) {
  const auto r = run({"mat", "invariants", file("t.mat", "2\n-1 1\n0 -1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "status: ok\n"));
  EXPECT_TRUE(contains(r.out, "alexander: lo=-1; coeffs=1 -1 1\n"));
  EXPECT_TRUE(contains(r.out, "signature: -2\n"));
  EXPECT_TRUE(contains(r.out, "determinant: 3\n"));
  EXPECT_TRUE(contains(r.out, "arf: 1\n"));
  EXPECT_TRUE(contains(r.out, "[machine]\nstatus=ok\n"));
  EXPECT_TRUE(contains(r.out, "alexander=lo=-1; coeffs=1 -1 1\n"));
}

TEST_F(CliTest, InvariantsOfEmptyMatrix) {
  const auto r = run({"mat", "invariants", file("e.mat", "0\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "alexander: lo=0; coeffs=1\n"));
  EXPECT_TRUE(contains(r.out, "signature: 0\n"));
  EXPECT_TRUE(contains(r.out, "alexander_trivial: yes\n"));
}

TEST_F(CliTest, SequivDistinct) {
  const auto r = run({"mat", "sequiv", file("a.mat", "2\n-1 1\n0 -1\n"),
                      file("b.mat", "2\n1 1\n0 -1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "status: distinct\n"));
  EXPECT_TRUE(contains(r.out, "distinct (alexander differs)\n"));
}

TEST_F(CliTest, SequivOneStepReduction) {
  const auto r =
      run({"mat", "sequiv", file("a.mat", "2\n0 1\n0 0\n"), file("e.mat", "0\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "status: equivalent\n"));
  EXPECT_TRUE(contains(r.out, "steps: 1\n"));
  EXPECT_TRUE(contains(r.out, "move1: reduce\n"));
}

TEST_F(CliTest, SequivUnknownExitsTwo) {
  const auto r = run({"mat", "sequiv", file("a.mat", "2\n-1 1\n0 -1\n"),
                      file("b.mat", "2\n-3 -1\n-2 -1\n"), "--max-nodes", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "status: unknown\n"));
}

TEST_F(CliTest, InvalidInputExitsOne) {
  auto r = run({"mat", "invariants", file("bad.mat", "2\n1 1\n1 1\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "error: "));
  EXPECT_TRUE(contains(r.out, "status: invalid-input\n"));
  r = run({"mat", "invariants", file("garbled.mat", "2\n1 x\n0 1\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "line 2"));
  r = run({"mat", "invariants", (dir_ / "missing.mat").string()});
  EXPECT_EQ(r.code, 1);
  r = run({"mat", "frobnicate"});
  EXPECT_EQ(r.code, 1);
  r = run({});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, HelpListsFormats) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "File formats"));
  EXPECT_TRUE(contains(r.out, "mat"));
  EXPECT_TRUE(contains(r.out, "closure"));
}

TEST_F(CliTest, StandardizeWritesFiles) {
  const auto a = (dir_ / "A.mat").string(), n = (dir_ / "N.mat").string();
  const auto r = run({"mat", "standardize", file("m.mat", "2\n0 0\n1 0\n"), "--out-a", a,
                      "--out-n", n});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(text::parse_matrix(text::read_file(a)), (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(text::parse_matrix(text::read_file(n)), (IntMatrix{{0, 1}, {0, 0}}));
}

TEST_F(CliTest, EnlargeAndReduce) {
  const auto m = file("t.mat", "2\n-1 1\n0 -1\n");
  auto r = run({"mat", "enlarge", m, "--form", "row", "--vector", "1 2", "--x", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "size: 4\n"));
  r = run({"mat", "reduce", file("z.mat", "2\n0 1\n0 0\n")});
  EXPECT_TRUE(contains(r.out, "reducible: yes\n"));
  r = run({"mat", "reduce", m});
  EXPECT_TRUE(contains(r.out, "reducible: no\n"));
  r = run({"mat", "enlarge", m, "--vector", "1"});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, BraidAndStringLinkCommands) {
  const auto w = file("w.pb", "n 3\n1 2 1\n2 3 1\n1 2 -1\n2 3 -1\n");
  auto r = run({"braid", "delta-trivial", w});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "yes"));
  r = run({"braid", "lk", file("g.pb", "n 3\n1 3 -1\n")});
  EXPECT_TRUE(contains(r.out, "1,3:-1"));
  r = run({"slink", "normalize", file("s.sl", "n 2 k 2\nframings 0 0\n1.1 2.2 1\n1.1 2.1 1\n")});
  EXPECT_EQ(r.code, 0);
  r = run({"slink", "normalize", file("nz.sl", "n 2 k 2\nframings 0 0\n1.1 2.1 1\n")});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, DiskBandAndWitness) {
  const auto n = file("n.mat", "2\n-1 1\n0 -1\n");
  auto r = run({"std", "to-disk-band", n});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "framings -1 -1"));
  r = run({"std", "from-disk-band", file("d.db", "g 1\nframings -1 -1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "-1 1"));
  const auto i2 = file("i.mat", "2\n1 0\n0 1\n");
  r = run({"std", "witness", n, file("s.mat", "2\n1 1\n0 1\n"), i2});
  EXPECT_EQ(r.code, 0);
}

TEST_F(CliTest, ClosureCommands) {
  const auto w = file("fig8.br", "n 3\n1 -2 1 -2\n");
  auto r = run({"closure", "alexander", w});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "lo=-1; coeffs=-1 3 -1"));
  r = run({"closure", "seifert", w});
  EXPECT_EQ(r.code, 0);
  r = run({"closure", "seifert", file("link.br", "n 2\n1 1\n")});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, CorpusIsDeterministic) {
  const auto a = run({"corpus", "generate", "--count", "20", "--seed", "5"});
  const auto b = run({"corpus", "generate", "--count", "20", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "words: 20\n"));
  EXPECT_TRUE(contains(a.out, "agreeing: 20\n"));
}
