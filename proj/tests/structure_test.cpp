#include <gtest/gtest.h>

#include "efalg/catalog.hpp"
#include "efalg/structure.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace efalg {
namespace {

using testing::catalog;
using testing::id;
using testing::universe;

ElementSet set_of(const FiniteEffectAlgebra& e, std::vector<ElementId> xs) { return make_set(e.order(), xs); }

// make_chain(3): 0 < p < q < 1 with ids 0, 1, 2, 3.
const FiniteEffectAlgebra& chain4() {
  static const FiniteEffectAlgebra e = make_chain(3);
  return e;
}

// horizontal sum of two 3-chains: 0, 1, a = 2, b = 3.
const FiniteEffectAlgebra& diamond() {
  static const FiniteEffectAlgebra e = catalog_entry("diamond").algebra;
  return e;
}

TEST(MeetJoin, Bounds) {
  for (const auto& [name, e] : catalog()) {
    for (ElementId x = 0; x < e.order(); ++x) {
      EXPECT_EQ(poset_meet(e, x, e.zero()), e.zero()) << name;
      EXPECT_EQ(poset_join(e, x, e.one()), e.one()) << name;
    }
  }
}

TEST(MeetJoin, Diamond) {
  EXPECT_EQ(poset_meet(diamond(), 2, 3), 0u);
  EXPECT_EQ(poset_join(diamond(), 2, 3), 1u);
}

TEST(MeetJoin, MatchesBruteForce) {
  for (const auto& [name, e] : universe()) {
    const auto t = oracle::to_table(e.table());
    for (ElementId x = 0; x < e.order(); ++x) {
      for (ElementId y = 0; y < e.order(); ++y) {
        const auto m = oracle::meet(t, x, y);
        const auto got = poset_meet(e, x, y);
        ASSERT_EQ(got.has_value(), m.has_value()) << name;
        if (m) EXPECT_EQ(*got, static_cast<ElementId>(*m)) << name;
      }
    }
  }
}

TEST(MeetJoin, LatticeFlagMeansTotalBounds) {
  for (const auto& [name, e] : universe()) {
    bool total = true;
    for (ElementId x = 0; x < e.order(); ++x) {
      for (ElementId y = 0; y < e.order(); ++y) {
        total = total && poset_meet(e, x, y) && poset_join(e, x, y);
      }
    }
    EXPECT_EQ(is_lattice(e), total) << name;
  }
}

TEST(Sharp, Examples) {
  EXPECT_EQ(sharp_elements(make_boolean(2)), make_boolean(2).all());
  const auto c3 = make_chain(2);
  EXPECT_EQ(sharp_elements(c3), set_of(c3, {0, 2}));
}

TEST(Sharp, MatchesBruteForceAndIsClosedUnderSupplement) {
  for (const auto& [name, e] : universe()) {
    const ElementSet s = sharp_elements(e);
    std::vector<ElementId> expected;
    for (int x : oracle::sharp(oracle::to_table(e.table()), static_cast<int>(e.zero()), static_cast<int>(e.one()))) {
      expected.push_back(id(x));
    }
    EXPECT_EQ(members(s), expected) << name;
    for (ElementId x : members(s)) EXPECT_TRUE(s.test(e.orthosupplement(x))) << name;
  }
}

TEST(Sharp, SubAlgebraWhenHomogeneous) {
  for (const auto& [name, e] : universe()) {
    if (is_homogeneous(e)) EXPECT_TRUE(is_sub_effect_algebra(e, sharp_elements(e))) << name;
  }
}

TEST(Meager, ChainAndBoolean) {
  EXPECT_EQ(meager_elements(chain4()), set_of(chain4(), {0, 1, 2}));
  EXPECT_EQ(hypermeager_elements(chain4()), set_of(chain4(), {0, 1}));
  const auto b2 = make_boolean(2);
  EXPECT_EQ(meager_elements(b2), set_of(b2, {0}));
  EXPECT_EQ(hypermeager_elements(b2), set_of(b2, {0}));
}

TEST(Meager, DownSets) {
  for (const auto& [name, e] : universe()) {
    for (const ElementSet& s : {meager_elements(e), hypermeager_elements(e)}) {
      for (ElementId x : members(s)) EXPECT_TRUE(e.down_set(x).is_subset_of(s)) << name;
    }
  }
}

TEST(Ord, Examples) {
  EXPECT_EQ(ord(chain4(), 1), 3u);
  EXPECT_EQ(ord(make_chain(6), 6), 1u);
  EXPECT_FALSE(ord(chain4(), 0).has_value());
  for (const auto& [name, e] : catalog()) EXPECT_EQ(ord(e, e.one()), 1u) << name;
}

TEST(Ord, ArchimedeanTogether) {
  for (const auto& [name, e] : universe()) {
    EXPECT_TRUE(is_archimedean(e)) << name;
    EXPECT_TRUE(is_archimedean(sub_generalized(e, meager_elements(e)).algebra)) << name;
    EXPECT_TRUE(is_archimedean(sub_generalized(e, hypermeager_elements(e)).algebra)) << name;
  }
}

TEST(Principal, Examples) {
  const ElementSet expected = set_of(diamond(), {0, 1});
  EXPECT_EQ(principal_elements(diamond()), expected);
  EXPECT_EQ(central_elements(diamond()), expected);
  const auto b2 = make_boolean(2);
  EXPECT_EQ(central_elements(b2), b2.all());
}

TEST(Principal, CentralPrincipalSharpChain) {
  for (const auto& [name, e] : universe()) {
    const ElementSet c = central_elements(e);
    const ElementSet p = principal_elements(e);
    EXPECT_TRUE(c.is_subset_of(p)) << name;
    EXPECT_TRUE(p.is_subset_of(sharp_elements(e))) << name;
  }
}

TEST(Compatibility, Examples) {
  EXPECT_FALSE(are_compatible(diamond(), 2, 3));
  for (const auto& [name, e] : universe()) {
    for (ElementId x = 0; x < e.order(); ++x) {
      EXPECT_TRUE(are_compatible(e, x, e.orthosupplement(x))) << name;
      for (ElementId y = 0; y < e.order(); ++y) {
        if (e.leq(x, y)) EXPECT_TRUE(are_compatible(e, x, y)) << name;
      }
    }
  }
}

TEST(Blocks, Examples) {
  const auto b2 = make_boolean(2);
  ASSERT_EQ(blocks(b2).size(), 1u);
  EXPECT_EQ(blocks(b2)[0], b2.all());
  const auto bs = blocks(diamond());
  ASSERT_EQ(bs.size(), 2u);
  EXPECT_EQ(bs[0], set_of(diamond(), {0, 1, 2}));
  EXPECT_EQ(bs[1], set_of(diamond(), {0, 1, 3}));
  EXPECT_EQ(blocks(make_boolean(3)).size(), 1u);
}

TEST(Blocks, MaximalRdpSubalgebrasWhenHomogeneous) {
  for (const auto& [name, e] : universe(7)) {
    if (e.order() > 9 || !is_homogeneous(e)) continue;
    std::vector<std::vector<int>> got;
    for (const auto& b : blocks(e)) {
      std::vector<int> m;
      for (ElementId x : members(b)) m.push_back(static_cast<int>(x));
      got.push_back(std::move(m));
    }
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::maximal_rdp_subalgebras(oracle::to_table(e.table()), static_cast<int>(e.zero()),
                                                   static_cast<int>(e.one())))
        << name;
  }
}

TEST(Blocks, NonHomogeneousReportFlagsBlockTheory) {
  const auto e = catalog_entry("non_homogeneous_min").algebra;
  const StructureReport r = analyze(e);
  EXPECT_FALSE(r.block_theory_applies);
  for (const auto& b : r.blocks) {
    EXPECT_TRUE(b.test(e.one()));
    EXPECT_TRUE(is_internally_compatible(e, b));
  }
}

TEST(Homogeneity, ThreeChainHasRdp) { EXPECT_TRUE(has_rdp(make_chain(2))); }

TEST(Homogeneity, LatticesAreHomogeneous) {
  for (const auto& [name, e] : universe(7)) {
    if (is_lattice(e)) EXPECT_TRUE(is_homogeneous(e)) << name;
  }
}

// u <= v1 + v2 <= u' with no u1 + u2 = u, u1 <= v1, u2 <= v2.
bool refutes_homogeneity(const FiniteEffectAlgebra& e, ElementId u, ElementId v1, ElementId v2) {
  const auto s = e.sum(v1, v2);
  if (!s || !e.leq(u, *s) || !e.leq(*s, e.orthosupplement(u))) return false;
  for (ElementId u1 = 0; u1 < e.order(); ++u1) {
    for (ElementId u2 = 0; u2 < e.order(); ++u2) {
      if (e.sum(u1, u2) == u && e.leq(u1, v1) && e.leq(u2, v2)) return false;
    }
  }
  return true;
}

TEST(Homogeneity, SmallestNonHomogeneousWitness) {
  const auto e = catalog_entry("non_homogeneous_min").algebra;
  const Classification c = check_homogeneous(e);
  ASSERT_FALSE(c.holds);
  ASSERT_EQ(c.witness.size(), 3u);
  EXPECT_TRUE(refutes_homogeneity(e, c.witness[0], c.witness[1], c.witness[2]));
  for (const auto& [name, f] : universe()) {
    if (f.order() < e.order()) EXPECT_TRUE(is_homogeneous(f)) << name;
  }
}

TEST(Homogeneity, WitnessesRefuteDirectly) {
  for (const auto& [name, e] : universe(7)) {
    const Classification c = check_homogeneous(e);
    if (!c.holds) EXPECT_TRUE(refutes_homogeneity(e, c.witness[0], c.witness[1], c.witness[2])) << name;
  }
}

TEST(SharpBounds, Examples) {
  const SharpBounds b = sharp_bounds(chain4());
  for (ElementId x : {ElementId{1}, ElementId{2}}) {
    EXPECT_EQ(b.hat(x), 3u);
    EXPECT_EQ(b.tilde(x), 0u);
  }
  for (const auto& [name, e] : universe()) {
    const SharpBounds sb = sharp_bounds(e);
    for (ElementId s : members(sharp_elements(e))) {
      EXPECT_EQ(sb.hat(s), s) << name;
      EXPECT_EQ(sb.tilde(s), s) << name;
    }
  }
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose(chain4(), 2), std::make_pair(ElementId{0}, ElementId{2}));
  for (const auto& [name, e] : catalog()) {
    if (!is_sharply_dominating(e)) continue;
    EXPECT_EQ(decompose(e, e.one()), std::make_pair(e.one(), e.zero())) << name;
    for (ElementId s : members(sharp_elements(e))) EXPECT_EQ(decompose(e, s), std::make_pair(s, e.zero())) << name;
  }
}

TEST(Decompose, SharpPlusMeager) {
  for (const auto& [name, e] : universe(7)) {
    if (!is_sharply_dominating(e)) {
      bool thrown = false;
      for (ElementId x = 0; x < e.order(); ++x) {
        try {
          decompose(e, x);
        } catch (const HypothesisError&) {
          thrown = true;
        }
      }
      EXPECT_TRUE(thrown) << name;
      continue;
    }
    const ElementSet sh = sharp_elements(e);
    const ElementSet mea = meager_elements(e);
    for (ElementId x = 0; x < e.order(); ++x) {
      const auto [s, m] = decompose(e, x);
      EXPECT_TRUE(sh.test(s) && mea.test(m) && e.sum(s, m) == x) << name;
    }
  }
}

TEST(Closures, VarthetaExamples) {
  for (const auto& [name, e] : catalog()) {
    EXPECT_EQ(vartheta(e, e.zero()), set_of(e, {e.zero()})) << name;
    for (ElementId u : members(sharp_elements(e))) EXPECT_EQ(vartheta(e, u), set_of(e, {e.zero(), u})) << name;
  }
}

TEST(Closures, VarthetaContainsIntervals) {
  for (const auto& [name, e] : universe()) {
    const StructureReport r = analyze(e);
    if (!qualifies_for_triple(r)) continue;
    for (ElementId u = 0; u < e.order(); ++u) {
      const ElementSet t = vartheta(e, u);
      for (ElementId v : members(t & r.meager & e.down_set(u))) {
        if (!sums_below(e, e.orthosupplement(u)).test(v)) continue;
        const ElementId w = *e.ominus(u, v);
        EXPECT_TRUE(e.down_set(v).is_subset_of(t)) << name;
        EXPECT_TRUE((e.up_set(w) & e.down_set(u)).is_subset_of(t)) << name;
      }
    }
  }
}

TEST(Closures, BlocksAreFixedPoints) {
  for (const auto& [name, e] : universe()) {
    const StructureReport r = analyze(e);
    if (!qualifies_for_triple(r)) continue;
    for (const auto& b : r.blocks) {
      EXPECT_EQ(theta(e, b), b) << name;
      EXPECT_EQ(sigma_closure(e, b), b) << name;
    }
  }
}

TEST(Heyting, BooleanAndChainBlocks) {
  const auto b3 = make_boolean(3);
  EXPECT_TRUE(heyting_block_check(b3, b3.all()).ok());
  EXPECT_TRUE(heyting_block_check(chain4(), chain4().all()).ok());
  // p* = (hat p)' = 1' = 0
  EXPECT_EQ(chain4().orthosupplement(*sharp_bounds(chain4()).hat(1)), 0u);
}

TEST(Heyting, EveryBlockOfQualifyingAlgebras) {
  for (const auto& [name, e] : universe(7)) {
    const StructureReport r = analyze(e);
    if (!qualifies_for_triple(r)) continue;
    for (const auto& b : r.blocks) EXPECT_TRUE(heyting_block_check(e, b).ok()) << name;
  }
}

TEST(Heyting, NonBlockIsRejected) {
  EXPECT_FALSE(heyting_block_check(diamond(), diamond().all()).ok());
}

TEST(Report, CatalogExpectations) {
  for (const auto& entry : named_catalog()) {
    if (!entry.expected) continue;
    const Verdict v = check_expected(*entry.expected, analyze(entry.algebra));
    EXPECT_TRUE(v.ok()) << entry.name << ": " << v.to_string();
  }
}

TEST(Report, SetInvariants) {
  for (const auto& [name, e] : universe(7)) {
    const StructureReport r = analyze(e);
    EXPECT_EQ(r.sharp & r.meager, set_of(e, {e.zero()})) << name;
    EXPECT_TRUE(r.hypermeager.is_subset_of(r.meager)) << name;
    EXPECT_TRUE(r.center.is_subset_of(r.sharp)) << name;
    ElementSet cover(e.order());
    for (const auto& b : r.blocks) cover |= b;
    if (r.homogeneous) EXPECT_TRUE(cover.all()) << name;
  }
}

}  // namespace
}  // namespace efalg
