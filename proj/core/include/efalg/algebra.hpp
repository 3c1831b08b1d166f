#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace efalg {

/// Dense index of an element inside one finite structure.
using ElementId = std::uint16_t;

/// Cell marker for an undefined partial sum.
inline constexpr ElementId kUndefined = std::numeric_limits<ElementId>::max();

/// Largest order accepted by any table.
inline constexpr std::size_t kMaxOrder = 4096;

using ElementSet = boost::dynamic_bitset<>;

ElementSet make_set(std::size_t order, std::span<const ElementId> members = {});
std::vector<ElementId> members(const ElementSet& set);

/// Malformed input: bad table shape, out-of-range ids, unparsable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-level invariant failed; indicates a bug rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation was called on an algebra outside its hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string hypothesis, std::vector<ElementId> witness, const std::string& what);

  const std::string& hypothesis() const noexcept { return hypothesis_; }
  const std::vector<ElementId>& witness() const noexcept { return witness_; }

 private:
  std::string hypothesis_;
  std::vector<ElementId> witness_;
};

struct Violation {
  std::string axiom;
  std::vector<ElementId> witness;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct Verdict {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(std::string_view axiom) const;
  std::string to_string() const;
};

/// Square lookup table for a partial binary operation. Cells hold an
/// ElementId or kUndefined.
class PartialOpTable {
 public:
  PartialOpTable() = default;
  explicit PartialOpTable(std::size_t order);

  /// Builds a table from explicit rows; throws InputError when not square.
  static PartialOpTable from_rows(const std::vector<std::vector<ElementId>>& rows);

  std::size_t order() const noexcept { return order_; }

  ElementId at(ElementId i, ElementId j) const noexcept { return cells_[i * order_ + j]; }
  bool defined(ElementId i, ElementId j) const noexcept { return at(i, j) != kUndefined; }

  /// Sets both (i, j) and (j, i).
  void set(ElementId i, ElementId j, ElementId value);
  /// Sets only (i, j); used to build deliberately asymmetric tables.
  void set_cell(ElementId i, ElementId j, ElementId value);

  /// Throws InputError for any entry outside [0, order) that is not kUndefined.
  void check_range() const;

  std::span<const ElementId> cells() const noexcept { return cells_; }

  bool operator==(const PartialOpTable&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<ElementId> cells_;
};

/// Checks (Ei)-(Eiv). Input errors (range, zero/one) throw InputError.
Verdict verify_effect_algebra(const PartialOpTable& table, ElementId zero, ElementId one);

/// Checks (GE1)-(GE5).
Verdict verify_generalized(const PartialOpTable& table, ElementId zero);

/// Shared machinery of effect algebras and generalized effect algebras: the
/// table plus the derived order and difference.
class PartialAlgebra {
 public:
  std::size_t order() const noexcept { return table_.order(); }
  ElementId zero() const noexcept { return zero_; }
  const PartialOpTable& table() const noexcept { return table_; }

  std::optional<ElementId> sum(ElementId x, ElementId y) const noexcept;
  bool defined(ElementId x, ElementId y) const noexcept { return table_.defined(x, y); }

  /// x <= y iff x + z = y for some z.
  bool leq(ElementId x, ElementId y) const noexcept { return down_[y].test(x); }
  /// y - x, defined iff x <= y.
  std::optional<ElementId> ominus(ElementId y, ElementId x) const noexcept;

  /// Left fold of the sum; the empty family sums to zero.
  std::optional<ElementId> orthogonal_sum(std::span<const ElementId> family) const noexcept;
  /// n-fold sum of x, or nullopt when it does not exist.
  std::optional<ElementId> multiple(ElementId x, std::size_t n) const noexcept;

  const ElementSet& down_set(ElementId x) const noexcept { return down_[x]; }
  const ElementSet& up_set(ElementId x) const noexcept { return up_[x]; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::string name(ElementId x) const;

  ElementSet all() const;

 protected:
  PartialAlgebra(PartialOpTable table, ElementId zero, std::vector<std::string> names);

 private:
  PartialOpTable table_;
  ElementId zero_;
  std::vector<std::string> names_;
  std::vector<ElementId> minus_;  // minus_[y * n + x] = y - x
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
};

/// Thrown by the algebra constructors when the table fails its axioms.
class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(Verdict verdict);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

class FiniteGeneralizedEffectAlgebra : public PartialAlgebra {
 public:
  /// Validates with verify_generalized; throws AxiomError on failure.
  FiniteGeneralizedEffectAlgebra(PartialOpTable table, ElementId zero,
                                 std::vector<std::string> names = {});
};

class FiniteEffectAlgebra : public PartialAlgebra {
 public:
  /// Validates with verify_effect_algebra; throws AxiomError on failure.
  FiniteEffectAlgebra(PartialOpTable table, ElementId zero, ElementId one,
                      std::vector<std::string> names = {});

  ElementId one() const noexcept { return one_; }
  /// The unique x' with x + x' = 1.
  ElementId orthosupplement(ElementId x) const noexcept { return supplement_[x]; }

  /// Views the algebra as a generalized effect algebra.
  FiniteGeneralizedEffectAlgebra as_generalized() const;

 private:
  ElementId one_;
  std::vector<ElementId> supplement_;
};

/// A structure carved out of a parent algebra, re-indexed densely.
/// to_parent[i] is the parent id of local element i.
template <typename Algebra>
struct Embedded {
  Algebra algebra;
  std::vector<ElementId> to_parent;

  /// Local id of a parent element, if it belongs to the carrier.
  std::optional<ElementId> local(ElementId parent) const;
};

template <typename Algebra>
std::optional<ElementId> Embedded<Algebra>::local(ElementId parent) const {
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (to_parent[i] == parent) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

/// Restricts the sum of `parent` to `carrier`: a sum is kept only when both
/// operands and the result lie in the carrier. Returns the restricted table and
/// the local-to-parent map.
std::pair<PartialOpTable, std::vector<ElementId>> restrict_table(const PartialAlgebra& parent,
                                                                 const ElementSet& carrier);

/// Sub-effect algebra on `carrier` (which must contain 0 and 1). Throws
/// AxiomError if the restriction is not an effect algebra.
Embedded<FiniteEffectAlgebra> sub_effect_algebra(const FiniteEffectAlgebra& parent,
                                                 const ElementSet& carrier);

/// Generalized effect algebra on a carrier containing 0.
Embedded<FiniteGeneralizedEffectAlgebra> sub_generalized(const PartialAlgebra& parent,
                                                         const ElementSet& carrier);

/// The interval [0, top] with the inherited sum and unit `top`.
Embedded<FiniteEffectAlgebra> interval_algebra(const PartialAlgebra& parent, ElementId top);

/// Conditions of a sub-effect algebra: contains 1, and whenever x + y = z with
/// two of x, y, z in the set, all three are.
bool is_sub_effect_algebra(const FiniteEffectAlgebra& e, const ElementSet& set);

}  // namespace efalg
