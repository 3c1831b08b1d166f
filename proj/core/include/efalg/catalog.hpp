#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efalg/algebra.hpp"
#include "efalg/structure.hpp"

namespace efalg {

/// The (n+1)-element chain 0 < 1 < ... < n with i + j defined iff i + j <= n.
/// Throws InputError for n = 0.
FiniteEffectAlgebra make_chain(std::size_t n);

/// Subsets of k atoms with disjoint union; element id = bitmask. 1 <= k <= 12.
FiniteEffectAlgebra make_boolean(std::size_t k);

/// Identifies all zeros and all units. Two-element summands contribute no
/// interior and are absorbed; if every summand is absorbed the result is the
/// two-element chain. Ids: 0, 1, then each summand's interior in order.
FiniteEffectAlgebra horizontal_sum(const std::vector<FiniteEffectAlgebra>& summands);

/// Componentwise sum; (a, b) has id a * |B| + b.
FiniteEffectAlgebra direct_product(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b);

inline constexpr std::size_t kDefaultEnumerationBound = 6;

/// Bumped whenever the enumerator's output could change.
inline constexpr std::string_view kGeneratorVersion = "efalg-enum/1";

/// Refused enumeration request; the message carries a cost estimate.
class EnumerationBoundError : public InputError {
 public:
  using InputError::InputError;
};

/// Every effect algebra of the given order up to isomorphism, canonically
/// labeled, sorted by canonical form.
std::vector<FiniteEffectAlgebra> enumerate_order(std::size_t order, std::size_t jobs = 1,
                                                 std::size_t bound = kDefaultEnumerationBound);

/// enumerate_order for 2..max_order, concatenated.
std::vector<FiniteEffectAlgebra> enumerate_all(std::size_t max_order, std::size_t jobs = 1,
                                               std::size_t bound = kDefaultEnumerationBound);

/// Number of table cells the enumerator must decide at this order, and a
/// crude upper bound on the search-tree size, as text.
std::string enumeration_cost(std::size_t order);

/// Randomized walk down the enumerator's search tree followed by a random
/// relabeling. Deterministic for a fixed seed.
FiniteEffectAlgebra random_algebra(std::uint64_t seed, std::size_t order,
                                   std::size_t bound = kDefaultEnumerationBound);

/// Golden facts for a catalog entry; absent fields are not checked.
struct ExpectedReport {
  std::optional<std::vector<ElementId>> sharp;
  std::optional<std::vector<ElementId>> meager;
  std::optional<std::vector<ElementId>> hypermeager;
  std::optional<std::vector<ElementId>> center;
  std::optional<std::size_t> block_count;
  std::optional<bool> homogeneous;
  std::optional<bool> rdp;
  std::optional<bool> lattice;
  std::optional<bool> orthoalgebra;
};

struct CatalogEntry {
  std::string name;
  FiniteEffectAlgebra algebra;
  std::optional<ExpectedReport> expected;
};

/// The named example algebras.
std::vector<CatalogEntry> named_catalog();

/// Looks up one entry by name; throws InputError when unknown.
CatalogEntry catalog_entry(const std::string& name);

/// Fields of `expected` that disagree with `report`.
Verdict check_expected(const ExpectedReport& expected, const StructureReport& report);

}  // namespace efalg
