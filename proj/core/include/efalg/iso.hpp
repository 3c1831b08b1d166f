#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efalg/algebra.hpp"

namespace efalg {

/// mapping[x] is the image of x.
struct IsoWitness {
  std::vector<ElementId> mapping;
};

/// Bijection preserving zero and the sum (definedness and value) both ways.
bool is_isomorphism(const PartialAlgebra& a, const PartialAlgebra& b, const std::vector<ElementId>& mapping);
/// Additionally preserves the unit.
bool is_isomorphism(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b,
                    const std::vector<ElementId>& mapping);

/// Backtracking search pruned by element invariants. The returned witness
/// has been re-verified.
std::optional<IsoWitness> find_isomorphism(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b);
std::optional<IsoWitness> find_isomorphism(const FiniteGeneralizedEffectAlgebra& a,
                                           const FiniteGeneralizedEffectAlgebra& b);

/// Relabeling that minimises the permuted table among the leaves of the
/// refinement tree. canonical_labeling()[x] is the new id of x.
std::vector<ElementId> canonical_labeling(const FiniteEffectAlgebra& e);

/// The algebra relabeled by `perm` (perm[x] is the new id of x), names dropped.
FiniteEffectAlgebra relabel(const FiniteEffectAlgebra& e, const std::vector<ElementId>& perm);

/// Text serialization of the canonically relabeled algebra, without names.
std::string canonical_form(const FiniteEffectAlgebra& e);

}  // namespace efalg
