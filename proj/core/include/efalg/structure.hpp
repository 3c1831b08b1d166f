#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efalg/algebra.hpp"

namespace efalg {

// ---------------------------------------------------------------------------
// Order primitives. "Undefined" bounds are ordinary results.

std::optional<ElementId> poset_meet(const PartialAlgebra& p, ElementId x, ElementId y);
std::optional<ElementId> poset_join(const PartialAlgebra& p, ElementId x, ElementId y);

/// Greatest lower bound of x, y among the elements of `carrier`.
std::optional<ElementId> meet_within(const PartialAlgebra& p, const ElementSet& carrier, ElementId x,
                                     ElementId y);
/// Least upper bound of x, y among the elements of `carrier`.
std::optional<ElementId> join_within(const PartialAlgebra& p, const ElementSet& carrier, ElementId x,
                                     ElementId y);

std::optional<ElementId> maximum_of(const PartialAlgebra& p, const ElementSet& s);
std::optional<ElementId> minimum_of(const PartialAlgebra& p, const ElementSet& s);

/// Least upper bound of `s` among the elements of `carrier`.
std::optional<ElementId> supremum_within(const PartialAlgebra& p, const ElementSet& carrier,
                                         const ElementSet& s);

/// Meet and join of every pair, precomputed.
class OrderTables {
 public:
  OrderTables() = default;
  explicit OrderTables(const PartialAlgebra& p);
  OrderTables(const PartialAlgebra& p, const ElementSet& carrier);

  std::optional<ElementId> meet(ElementId x, ElementId y) const noexcept { return get(meet_, x, y); }
  std::optional<ElementId> join(ElementId x, ElementId y) const noexcept { return get(join_, x, y); }

 private:
  std::optional<ElementId> get(const std::vector<ElementId>& v, ElementId x, ElementId y) const noexcept {
    const ElementId r = v[x * order_ + y];
    if (r == kUndefined) return std::nullopt;
    return r;
  }

  std::size_t order_ = 0;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
};

// ---------------------------------------------------------------------------
// Distinguished element sets.

/// x with x ^ x' = 0.
ElementSet sharp_elements(const FiniteEffectAlgebra& e);
/// x above no nonzero sharp element.
ElementSet meager_elements(const FiniteEffectAlgebra& e);
ElementSet meager_elements(const FiniteEffectAlgebra& e, const ElementSet& sharp);
/// x with x <= y and x <= y' for some y.
ElementSet hypermeager_elements(const FiniteEffectAlgebra& e);
ElementSet principal_elements(const FiniteEffectAlgebra& e);
ElementSet central_elements(const FiniteEffectAlgebra& e);

/// Largest n such that n*x exists. nullopt stands for "infinite", which is
/// what 0 reports.
std::optional<std::size_t> ord(const PartialAlgebra& p, ElementId x);
/// ord is finite for every nonzero element.
bool is_archimedean(const PartialAlgebra& p);

// ---------------------------------------------------------------------------
// Compatibility and blocks.

/// x = p+q, y = q+r with p+q+r defined.
bool are_compatible(const PartialAlgebra& p, ElementId x, ElementId y);

/// Some orthogonal family drawn from `m` has every member of `m` as a subsum.
bool is_internally_compatible(const PartialAlgebra& p, const ElementSet& m);

/// All subsums of the family.
ElementSet subsums(const PartialAlgebra& p, std::span<const ElementId> family);

/// Maximal internally compatible subsets containing 1, sorted by member list.
std::vector<ElementSet> blocks(const FiniteEffectAlgebra& e);

// ---------------------------------------------------------------------------
// Classifiers. A failing classifier carries the lexicographically least witness.

struct Classification {
  bool holds = true;
  std::vector<ElementId> witness;

  explicit operator bool() const noexcept { return holds; }
};

Classification check_rdp(const FiniteEffectAlgebra& e);
Classification check_homogeneous(const FiniteEffectAlgebra& e);
Classification check_lattice(const PartialAlgebra& p);
Classification check_orthoalgebra(const FiniteEffectAlgebra& e);
Classification check_archimedean(const PartialAlgebra& p);
Classification check_sharply_dominating(const FiniteEffectAlgebra& e);

bool has_rdp(const FiniteEffectAlgebra& e);
bool is_homogeneous(const FiniteEffectAlgebra& e);
bool is_lattice(const PartialAlgebra& p);
/// RDP restricted to a sub-effect algebra given as a carrier.
bool has_rdp(const FiniteEffectAlgebra& e, const ElementSet& carrier);

// ---------------------------------------------------------------------------
// Sharp bounds and decomposition.

struct SharpBounds {
  std::vector<ElementId> below;  // greatest sharp element under x, or kUndefined
  std::vector<ElementId> above;  // least sharp element over x, or kUndefined

  std::optional<ElementId> tilde(ElementId x) const noexcept;
  std::optional<ElementId> hat(ElementId x) const noexcept;
};

SharpBounds sharp_bounds(const FiniteEffectAlgebra& e);
SharpBounds sharp_bounds(const FiniteEffectAlgebra& e, const ElementSet& sharp);
bool is_sharply_dominating(const FiniteEffectAlgebra& e);

/// x = x_S + x_M with x_S sharp and x_M meager. Throws HypothesisError when
/// the greatest sharp element below x does not exist.
std::pair<ElementId, ElementId> decompose(const FiniteEffectAlgebra& e, ElementId x);

// ---------------------------------------------------------------------------
// Closures.

/// Finite sums of families drawn from [0, bound].
ElementSet sums_below(const PartialAlgebra& p, ElementId bound);

/// v meager, v <= u, v a finite sum of elements under u'; returns every such v
/// together with u - v.
ElementSet vartheta(const FiniteEffectAlgebra& e, ElementId u);
ElementSet vartheta(const FiniteEffectAlgebra& e, const ElementSet& meager, ElementId u);
/// Union of vartheta(u) over u in a.
ElementSet theta(const FiniteEffectAlgebra& e, const ElementSet& a);
/// Least superset of a closed under theta.
ElementSet sigma_closure(const FiniteEffectAlgebra& e, const ElementSet& a);

/// Checks that block b is a lattice with RDP whose pseudocomplement is
/// x* = (hat x)' and whose Heyting center equals its center.
Verdict heyting_block_check(const FiniteEffectAlgebra& e, const ElementSet& b);

// ---------------------------------------------------------------------------

struct StructureReport {
  ElementSet sharp;
  ElementSet meager;
  ElementSet hypermeager;
  ElementSet principal;
  ElementSet center;
  std::vector<ElementSet> blocks;
  /// False when the algebra is not homogeneous; the blocks are then still the
  /// maximal internally compatible subsets but carry no RDP guarantee.
  bool block_theory_applies = false;

  Classification homogeneous;
  Classification rdp;
  Classification lattice;
  Classification sharply_dominating;
  Classification archimedean;
  Classification orthoalgebra;

  SharpBounds bounds;
  std::vector<std::optional<std::size_t>> ord;
};

StructureReport analyze(const FiniteEffectAlgebra& e);

/// Homogeneous and sharply dominating. Finite algebras are always
/// (meager-)orthocomplete, so this is the full hypothesis of the triple
/// construction.
bool qualifies_for_triple(const StructureReport& report);

}  // namespace efalg
