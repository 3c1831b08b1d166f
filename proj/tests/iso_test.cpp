#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "efalg/catalog.hpp"
#include "efalg/io.hpp"
#include "efalg/iso.hpp"
#include "efalg/structure.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace efalg {
namespace {

using testing::catalog;
using testing::universe;

std::vector<ElementId> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<ElementId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(FindIsomorphism, Identity) {
  for (const auto& [name, e] : catalog()) {
    const auto w = find_isomorphism(e, e);
    ASSERT_TRUE(w.has_value()) << name;
    EXPECT_TRUE(is_isomorphism(e, e, w->mapping)) << name;
  }
}

TEST(FindIsomorphism, DifferentOrders) {
  EXPECT_FALSE(find_isomorphism(make_chain(2), make_boolean(2)).has_value());
}

TEST(FindIsomorphism, SameOrderNotIsomorphic) {
  EXPECT_FALSE(find_isomorphism(make_chain(3), make_boolean(2)).has_value());
  EXPECT_FALSE(find_isomorphism(make_chain(3), catalog_entry("diamond").algebra).has_value());
}

TEST(FindIsomorphism, RecoversPermutation) {
  std::mt19937 rng(7);
  for (const auto& [name, e] : catalog()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = random_permutation(e.order(), rng);
      const auto f = relabel(e, p);
      const auto w = find_isomorphism(e, f);
      ASSERT_TRUE(w.has_value()) << name;
      EXPECT_TRUE(is_isomorphism(e, f, w->mapping)) << name;
      EXPECT_TRUE(is_isomorphism(e, f, p)) << name;
    }
  }
}

TEST(FindIsomorphism, WitnessIsMorphismBothWays) {
  std::mt19937 rng(11);
  for (const auto& [name, e] : universe()) {
    const auto f = relabel(e, random_permutation(e.order(), rng));
    const auto w = find_isomorphism(e, f);
    ASSERT_TRUE(w.has_value()) << name;
    std::vector<ElementId> inverse(e.order());
    for (std::size_t x = 0; x < e.order(); ++x) inverse[w->mapping[x]] = static_cast<ElementId>(x);
    EXPECT_TRUE(is_isomorphism(e, f, w->mapping)) << name;
    EXPECT_TRUE(is_isomorphism(f, e, inverse)) << name;
  }
}

TEST(FindIsomorphism, GeneralizedAlgebras) {
  const auto e = catalog_entry("diamond").algebra;
  const auto mea = sub_generalized(e, meager_elements(e)).algebra;
  const auto w = find_isomorphism(mea, mea);
  ASSERT_TRUE(w.has_value());
  const auto c4 = make_chain(3);
  const auto other = sub_generalized(c4, meager_elements(c4)).algebra;
  EXPECT_FALSE(find_isomorphism(mea, other).has_value());
}

TEST(CanonicalForm, TwoElementConstant) {
  EXPECT_EQ(canonical_form(make_chain(1)),
            "efa 1\norder 2\nzero 0\none 1\nsum 0 0 0\nsum 0 1 1\n");
}

TEST(CanonicalForm, PermutedCopiesAgree) {
  std::mt19937 rng(3);
  const auto& all = universe();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& e = all[rng() % all.size()].algebra;
    const auto f = relabel(e, random_permutation(e.order(), rng));
    ASSERT_EQ(canonical_form(e), canonical_form(f)) << trial;
  }
}

TEST(CanonicalForm, CatalogFormsDistinct) {
  std::set<std::string> forms;
  for (const auto& [name, e] : catalog()) EXPECT_TRUE(forms.insert(canonical_form(e)).second) << name;
}

TEST(CanonicalForm, RelabelingParsesBack) {
  for (const auto& [name, e] : catalog()) {
    const auto f = parse_algebra(canonical_form(e));
    EXPECT_TRUE(find_isomorphism(e, f).has_value()) << name;
  }
}

TEST(CanonicalForm, EquivalentToIsomorphism) {
  std::mt19937 rng(5);
  std::vector<FiniteEffectAlgebra> pool;
  for (const auto& [name, e] : universe()) {
    if (e.order() > 6) continue;
    pool.push_back(e);
    pool.push_back(relabel(e, random_permutation(e.order(), rng)));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].order() != pool[j].order()) continue;
      const bool iso = find_isomorphism(pool[i], pool[j]).has_value();
      EXPECT_EQ(iso, canonical_form(pool[i]) == canonical_form(pool[j])) << i << " " << j;
      EXPECT_EQ(iso, oracle::brute_isomorphic(pool[i], pool[j])) << i << " " << j;
    }
  }
}

}  // namespace
}  // namespace efalg
