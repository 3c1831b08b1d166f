#include <gtest/gtest.h>

#include <set>

#include "efalg/suite.hpp"

namespace efalg {
namespace {

const std::vector<NamedAlgebra>& small_universe() {
  static const auto u = suite_universe(6);
  return u;
}

TEST(SuiteUniverse, CatalogThenEnumerated) {
  const auto& u = small_universe();
  EXPECT_EQ(u.front().name, "chain1");
  std::size_t enumerated = 0;
  std::set<std::string> names;
  for (const auto& a : u) {
    EXPECT_TRUE(names.insert(a.name).second) << a.name;
    if (a.name.rfind("enum", 0) == 0) ++enumerated;
  }
  EXPECT_EQ(enumerated, 1u + 1u + 3u + 4u + 10u);
}

TEST(Suite, EveryAnchorPasses) {
  const SuiteReport report = run_suite(small_universe(), 2);
  EXPECT_EQ(report.algebras, small_universe().size());
  EXPECT_GT(report.qualifying, 0u);
  EXPECT_LT(report.qualifying, report.algebras);
  for (const auto& a : report.anchors) {
    EXPECT_EQ(a.failures, 0u) << a.anchor << ": " << a.first_failure;
    EXPECT_GT(a.checks, 0u) << a.anchor;
    EXPECT_GT(a.algebras, 0u) << a.anchor;
  }
  EXPECT_TRUE(report.ok());
}

TEST(Suite, AnchorsAreUnique) {
  const SuiteReport report = run_suite({small_universe().front()});
  std::set<std::string> seen;
  for (const auto& a : report.anchors) {
    EXPECT_TRUE(seen.insert(a.anchor).second) << a.anchor;
    EXPECT_FALSE(a.statement.empty()) << a.anchor;
  }
  EXPECT_TRUE(seen.count("tripletheor"));
  EXPECT_TRUE(seen.count("blocksar"));
}

TEST(Suite, ReportIndependentOfJobs) {
  const std::string one = format_suite(run_suite(small_universe(), 1));
  const std::string four = format_suite(run_suite(small_universe(), 4));
  EXPECT_EQ(one, four);
  EXPECT_NE(one.find("suite: pass"), std::string::npos);
}

}  // namespace
}  // namespace efalg
