#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efalg/algebra.hpp"
#include "efalg/structure.hpp"

namespace efalg {

/// Embeddings of the triple's carriers into the source algebra. Only
/// verification code may read these; reconstruction never does.
struct TripleBackMaps {
  std::vector<ElementId> sharp_to_source;
  std::vector<ElementId> meager_to_source;
};

/// The sharp elements as an effect algebra, the meager elements as a
/// generalized effect algebra (sums kept only when they stay meager), and
/// h(s) = {meager x | x <= s}. Both carriers are indexed afresh.
struct TripleRep {
  FiniteEffectAlgebra sharp_algebra;
  FiniteGeneralizedEffectAlgebra meager_algebra;
  std::vector<ElementSet> h;  // h[s] is a set of meager ids
  std::optional<TripleBackMaps> back_maps;
};

/// Throws HypothesisError unless the algebra is homogeneous and sharply
/// dominating.
TripleRep extract_triple(const FiniteEffectAlgebra& e);
TripleRep extract_triple(const FiniteEffectAlgebra& e, const StructureReport& report);

/// Copy of the triple with the back-maps removed.
TripleRep strip_back_maps(TripleRep t);

/// The reconstruction maps, computed from the triple alone.
///
///   widehat(x)  least sharp s with x in h(s)
///   pi(s, x)    join in Mea of {y <= x | y in h(s)}, defined when it lies in h(s)
///   r_map(x)    the unique meager y characterised by hats, sums and h
///   s_map(x, y) top of {z sharp | z = hat(pi_z x), R(pi_z x) = pi_z y}
///
/// Construction throws ConsistencyError when a map that must be total is
/// not (no least sharp bound, no unique R candidate).
class TripleMaps {
 public:
  explicit TripleMaps(const TripleRep& t);

  ElementId widehat(ElementId x) const { return hat_[x]; }
  std::optional<ElementId> pi(ElementId s, ElementId x) const;
  ElementId r_map(ElementId x) const { return r_[x]; }
  std::optional<ElementId> s_map(ElementId x, ElementId y) const;
  /// The candidate set whose top defines s_map, as sharp ids.
  const ElementSet& s_candidates(ElementId x, ElementId y) const { return s_set_[x * meager_order_ + y]; }

  const OrderTables& meager_order() const noexcept { return meager_tables_; }

 private:
  std::size_t sharp_order_;
  std::size_t meager_order_;
  OrderTables meager_tables_;
  std::vector<ElementId> hat_;
  std::vector<ElementId> pi_;
  std::vector<ElementId> r_;
  std::vector<ElementSet> s_set_;
  std::vector<ElementId> s_;
};

ElementId widehat_triple(const TripleRep& t, ElementId x);
std::optional<ElementId> pi_s(const TripleRep& t, ElementId s, ElementId x);
ElementId r_map(const TripleRep& t, ElementId x);
std::optional<ElementId> s_map(const TripleRep& t, ElementId x, ElementId y);

/// The reconstructed algebra on pairs (z_S, z_M) with z_M in h(z_S').
struct TeaAlgebra {
  std::vector<std::pair<ElementId, ElementId>> carrier;
  FiniteEffectAlgebra algebra;

  std::optional<ElementId> index_of(ElementId sharp, ElementId meager) const;
};

/// Builds Tea from the triple. Throws ConsistencyError if the result is not
/// an effect algebra or lacks (0,0) / (1,0).
TeaAlgebra reconstruct_tea(const TripleRep& t);

struct RoundtripReport {
  bool ok = false;
  /// phi[x] is the Tea index of (x~, x - x~).
  std::vector<ElementId> phi;
  std::string failure;
  std::vector<ElementId> witness;
  std::optional<TeaAlgebra> tea;
};

/// Extracts the triple, rebuilds Tea and checks that phi is an isomorphism.
/// Throws HypothesisError when the algebra does not qualify.
RoundtripReport verify_roundtrip(const FiniteEffectAlgebra& e);
/// Same check against a supplied triple, which must carry back-maps into e.
RoundtripReport verify_roundtrip(const FiniteEffectAlgebra& e, const TripleRep& t);

/// Checks that the given carrier maps form an isomorphism of triples: a
/// sharp-algebra isomorphism, a meager-algebra isomorphism, and
/// x in h(s) iff meager_map[x] in h'(sharp_map[s]).
Verdict check_triple_isomorphism(const TripleRep& a, const TripleRep& b,
                                 const std::vector<ElementId>& sharp_map,
                                 const std::vector<ElementId>& meager_map);

}  // namespace efalg
