#include <gtest/gtest.h>

#include <filesystem>

#include "efalg/catalog.hpp"
#include "efalg/io.hpp"
#include "efalg/structure.hpp"
#include "support.hpp"

namespace efalg {
namespace {

using testing::catalog;
using testing::universe;

const std::filesystem::path kGolden = EFALG_GOLDEN_DIR;

std::string input_error(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Parse, MinimalTwoChain) {
  const auto e = parse_algebra("efa 1\norder 2\nzero 0\none 1\nsum 0 0 0\nsum 0 1 1\n");
  EXPECT_EQ(e.order(), 2u);
  EXPECT_EQ(e.sum(1, 0), 1u);
  EXPECT_FALSE(e.sum(1, 1).has_value());
}

TEST(Parse, CommentsAndBlankLines) {
  const auto e = parse_algebra("# two chain\n\nefa 1\norder 2  # size\nzero 0\none 1\nsum 0 0 0\nsum 1 0 1\n");
  EXPECT_EQ(e.sum(0, 1), 1u);
}

TEST(Parse, ContradictoryDuplicate) {
  const std::string text = "efa 1\norder 4\nzero 0\none 3\nsum 1 1 2\nsum 1 1 3\n";
  const std::string msg = input_error(text);
  EXPECT_NE(msg.find("line 6"), std::string::npos) << msg;
}

TEST(Parse, RepeatedIdenticalLineIsAccepted) {
  EXPECT_NO_THROW(parse_algebra("efa 1\norder 2\nzero 0\none 1\nsum 0 0 0\nsum 0 1 1\nsum 1 0 1\n"));
}

TEST(Parse, MalformedInputs) {
  EXPECT_NE(input_error("order 2\n").find("line"), std::string::npos);
  EXPECT_NE(input_error("efa 2\norder 2\nzero 0\none 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(input_error("efa 1\norder x\n").find("line 2"), std::string::npos);
  EXPECT_NE(input_error("efa 1\norder 2\nzero 0\none 1\nsum 0 0 5\n").find("line 5"), std::string::npos);
  EXPECT_NE(input_error("efa 1\norder 2\nzero 0\none 1\nfrobnicate\n").find("line 5"), std::string::npos);
  EXPECT_NE(input_error("efa 1\norder 2\nzero 0\n").find("one"), std::string::npos);
  EXPECT_THROW(parse_generalized("gea 1\norder 2\nzero 0\none 1\n"), InputError);
}

TEST(Parse, AxiomFailureIsNotAnInputError) {
  EXPECT_THROW(parse_algebra("efa 1\norder 2\nzero 0\none 1\nsum 0 0 0\n"), AxiomError);
}

TEST(Serialize, OnlyOrderedPairs) {
  const std::string text = serialize(make_chain(2));
  EXPECT_EQ(text, "efa 1\norder 3\nzero 0\none 2\nsum 0 0 0\nsum 0 1 1\nsum 0 2 2\nsum 1 1 2\n");
}

TEST(Serialize, Fixpoint) {
  for (const auto& [name, e] : universe()) {
    const std::string once = serialize(e);
    const auto back = parse_algebra(once);
    EXPECT_EQ(back.table(), e.table()) << name;
    EXPECT_EQ(back.names(), e.names()) << name;
    EXPECT_EQ(serialize(back), once) << name;
  }
}

TEST(Serialize, Names) {
  const auto e = catalog_entry("non_homogeneous_min").algebra;
  const auto back = parse_algebra(serialize(e));
  EXPECT_EQ(back.name(2), "a");
  EXPECT_EQ(back.name(5), "q");
  const auto bad = FiniteEffectAlgebra(make_chain(1).table(), 0, 1, {"zero", "the one"});
  EXPECT_THROW(serialize(bad), InputError);
}

TEST(Serialize, GeneralizedRoundTrip) {
  for (const auto& [name, e] : catalog()) {
    const auto g = sub_generalized(e, meager_elements(e)).algebra;
    const std::string text = serialize(g);
    EXPECT_EQ(text.rfind("gea 1\n", 0), 0u);
    const auto back = parse_generalized(text);
    EXPECT_EQ(back.table(), g.table()) << name;
    EXPECT_EQ(serialize(back), text) << name;
  }
}

TEST(Golden, CatalogFiles) {
  for (const auto& [name, e] : catalog()) {
    EXPECT_EQ(read_text_file(kGolden / "catalog" / (name + ".efa")), serialize(e)) << name;
  }
}

TEST(Golden, AnalyzeJson) {
  for (const auto& [name, e] : catalog()) {
    const std::string expected = read_text_file(kGolden / "analyze" / (name + ".json"));
    const std::string first = analyze_json(e, analyze(e));
    EXPECT_EQ(first, expected) << name;
    EXPECT_EQ(analyze_json(e, analyze(e)), first) << name;
  }
}

TEST(Golden, AnalyzeJsonSchema) {
  const auto e = make_chain(3);
  const std::string j = analyze_json(e, analyze(e));
  EXPECT_NE(j.find("\"schema\": \"efalg-analyze/1\""), std::string::npos);
  EXPECT_NE(j.find("\"ord\": \"inf\""), std::string::npos);
}

TEST(Files, ReadMissing) { EXPECT_THROW(read_text_file("/nonexistent/efalg/file.efa"), InputError); }

}  // namespace
}  // namespace efalg
