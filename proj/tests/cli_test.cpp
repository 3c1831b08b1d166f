#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "efalg/catalog.hpp"
#include "efalg/io.hpp"
#include "efalg/iso.hpp"
#include "efalg/parallel.hpp"

namespace efalg {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = EFALG_GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "efalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("efalg_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    write_text_file(p, text);
    return p.string();
  }
  std::string catalog_file(const std::string& name) const { return (kGolden / "catalog" / (name + ".efa")).string(); }

  fs::path dir_;
};

TEST_F(Cli, RoundtripThreeChain) {
  const Result r = run({"roundtrip", file("c3.efa", serialize(make_chain(2)))});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("roundtrip: pass"), std::string::npos);
  EXPECT_NE(r.out.find("2 -> (2, 0)"), std::string::npos);
}

TEST_F(Cli, IsoOnPermutedCopy) {
  const auto e = make_chain(3);
  const std::string a = file("a.efa", serialize(e));
  const std::string b = file("b.efa", serialize(relabel(e, {3, 0, 2, 1})));
  const Result r = run({"iso", a, b});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0 -> 3"), std::string::npos);
  EXPECT_NE(r.out.find("isomorphic"), std::string::npos);
  const Result n = run({"iso", a, catalog_file("boolean2")});
  EXPECT_EQ(n.code, cli::kPropertyFailure);
  EXPECT_NE(n.err.find("\"status\":\"fail\""), std::string::npos);
}

TEST_F(Cli, TripleOnNonHomogeneousIsAHypothesisFailure) {
  const Result r = run({"triple", catalog_file("non_homogeneous_min"), "--out", (dir_ / "t").string()});
  EXPECT_EQ(r.code, cli::kHypothesisNotMet);
  EXPECT_NE(r.err.find("\"hypothesis\":\"homogeneous\""), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("\"witness\":["), std::string::npos) << r.err;
  EXPECT_EQ(run({"roundtrip", catalog_file("non_homogeneous_min")}).code, cli::kHypothesisNotMet);
}

TEST_F(Cli, TripleWritesComponents) {
  const fs::path out = dir_ / "t";
  const Result r = run({"triple", catalog_file("chain2_hsum_chain3"), "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto sharp = parse_algebra(read_text_file(out / "sharp.efa"));
  const auto meager = parse_generalized(read_text_file(out / "meager.gea"));
  EXPECT_EQ(sharp.order(), 2u);
  EXPECT_EQ(meager.order(), 4u);
  EXPECT_EQ(read_text_file(out / "h.txt").rfind("triple 1\n", 0), 0u);
}

TEST_F(Cli, Verify) {
  EXPECT_EQ(run({"verify", catalog_file("diamond")}).code, 0);
  const Result bad = run({"verify", file("bad.efa", "efa 1\norder 2\nzero 0\none 1\nsum 0 0 0\n")});
  EXPECT_EQ(bad.code, cli::kPropertyFailure);
  EXPECT_NE(bad.err.find("Eiii"), std::string::npos) << bad.err;
  const Result gea = run({"verify", file("m.gea", "gea 1\norder 3\nzero 0\nsum 0 0 0\nsum 0 1 1\nsum 0 2 2\nsum 1 1 2\n")});
  EXPECT_EQ(gea.code, 0) << gea.err;
}

TEST_F(Cli, InputErrors) {
  const Result dup = run({"verify", file("d.efa", "efa 1\norder 4\nzero 0\none 3\nsum 1 1 2\nsum 1 1 3\n")});
  EXPECT_EQ(dup.code, cli::kInputError);
  EXPECT_NE(dup.err.find("line 6"), std::string::npos);
  EXPECT_EQ(run({"analyze", (dir_ / "missing.efa").string()}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", file("bad.efa", "efa 1\norder 2\nzero 0\none 1\nsum 0 0 0\n")}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"nonsense"}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "--kind", "chain"}).code, cli::kInputError);
}

TEST_F(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("roundtrip"), std::string::npos);
}

TEST_F(Cli, AnalyzeJsonMatchesGolden) {
  for (const char* name : {"diamond", "chain3", "non_homogeneous_min"}) {
    const Result r = run({"analyze", catalog_file(name), "--json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_text_file(kGolden / "analyze" / (std::string(name) + ".json"))) << name;
  }
  const Result text = run({"analyze", catalog_file("diamond")});
  EXPECT_NE(text.out.find("blocks:"), std::string::npos);
}

TEST_F(Cli, Gen) {
  const Result chain = run({"gen", "--kind", "chain", "-n", "3"});
  EXPECT_EQ(chain.code, 0);
  EXPECT_EQ(chain.out, serialize(make_chain(3)));
  const Result boolean = run({"gen", "--kind", "boolean", "--size", "2"});
  EXPECT_EQ(boolean.out, serialize(make_boolean(2)));
  const std::string c3 = file("c3.efa", chain.out);
  const std::string c2 = file("c2.efa", serialize(make_chain(2)));
  const Result hsum = run({"gen", "--kind", "hsum", c2, c2});
  EXPECT_EQ(hsum.code, 0);
  EXPECT_EQ(hsum.out, serialize(horizontal_sum({make_chain(2), make_chain(2)})));
  const std::string out = (dir_ / "p.efa").string();
  const Result product = run({"gen", "--kind", "product", c2, c3, "--out", out});
  EXPECT_EQ(product.code, 0);
  EXPECT_EQ(read_text_file(out), serialize(direct_product(make_chain(2), make_chain(3))));
  EXPECT_EQ(run({"gen", "--kind", "product", c2}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "--kind", "chain", "-n", "0"}).code, cli::kInputError);
}

TEST_F(Cli, EnumerateIsDeterministicAcrossJobs) {
  const Result one = run({"-j", "1", "enumerate", "--max-order", "6", "--out", (dir_ / "a").string()});
  const Result four = run({"-j", "4", "enumerate", "--max-order", "6", "--out", (dir_ / "b").string()});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_NE(one.out.find("order 6: 10 algebras"), std::string::npos);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    ++files;
    EXPECT_EQ(read_text_file(entry.path()), read_text_file(dir_ / "b" / entry.path().filename()));
  }
  EXPECT_EQ(files, 1u + 1u + 3u + 4u + 10u);
}

TEST_F(Cli, EnumerateBound) {
  const Result r = run({"enumerate", "--max-order", "7"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("bound"), std::string::npos);
  EXPECT_EQ(run({"enumerate", "--max-order", "7", "--bound", "7"}).code, 0);
}

TEST_F(Cli, SuiteDeterministicAcrossJobs) {
  const Result one = run({"-j", "1", "suite", "--max-order", "5"});
  const Result three = run({"-j", "3", "suite", "--max-order", "5"});
  EXPECT_EQ(one.code, 0) << one.out;
  EXPECT_EQ(one.out, three.out);
  EXPECT_NE(one.out.find("blocksar"), std::string::npos);
  EXPECT_NE(one.out.find("suite: pass"), std::string::npos);
}

TEST(Jobs, EnvironmentOverride) {
  ::setenv("EFALG_JOBS", "3", 1);
  EXPECT_EQ(default_jobs(), 3u);
  ::unsetenv("EFALG_JOBS");
  EXPECT_GE(default_jobs(), 1u);
}

}  // namespace
}  // namespace efalg
