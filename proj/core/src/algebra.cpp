#include "efalg/algebra.hpp"

#include <sstream>

namespace efalg {

ElementSet make_set(std::size_t order, std::span<const ElementId> members) {
  ElementSet set(order);
  for (ElementId m : members) set.set(m);
  return set;
}

std::vector<ElementId> members(const ElementSet& set) {
  std::vector<ElementId> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

HypothesisError::HypothesisError(std::string hypothesis, std::vector<ElementId> witness,
                                 const std::string& what)
    : std::runtime_error(what), hypothesis_(std::move(hypothesis)), witness_(std::move(witness)) {}

bool Verdict::violates(std::string_view axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

std::string Verdict::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.axiom << " violated at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ", ";
      out << v.witness[i];
    }
    out << ")";
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  return out.str();
}

PartialOpTable::PartialOpTable(std::size_t order) : order_(order), cells_(order * order, kUndefined) {
  if (order > kMaxOrder) throw InputError("table order " + std::to_string(order) + " exceeds limit");
}

PartialOpTable PartialOpTable::from_rows(const std::vector<std::vector<ElementId>>& rows) {
  PartialOpTable table(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InputError("table is not square: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) {
      table.cells_[i * rows.size() + j] = rows[i][j];
    }
  }
  table.check_range();
  return table;
}

void PartialOpTable::set(ElementId i, ElementId j, ElementId value) {
  set_cell(i, j, value);
  set_cell(j, i, value);
}

void PartialOpTable::set_cell(ElementId i, ElementId j, ElementId value) {
  if (i >= order_ || j >= order_) throw InputError("cell index out of range");
  cells_[i * order_ + j] = value;
}

void PartialOpTable::check_range() const {
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] != kUndefined && cells_[k] >= order_) {
      throw InputError("entry (" + std::to_string(k / order_) + ", " + std::to_string(k % order_) +
                       ") = " + std::to_string(cells_[k]) + " is out of range");
    }
  }
}

namespace {

void check_id(const PartialOpTable& table, ElementId id, const char* what) {
  if (id >= table.order()) {
    throw InputError(std::string(what) + " " + std::to_string(id) + " is out of range for order " +
                     std::to_string(table.order()));
  }
}

// Lexicographically first (x, y) with asymmetric entries.
std::optional<Violation> check_commutative(const PartialOpTable& t, const char* axiom) {
  const auto n = static_cast<ElementId>(t.order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (t.at(x, y) != t.at(y, x)) return Violation{axiom, {x, y}, "x+y differs from y+x"};
    }
  }
  return std::nullopt;
}

ElementId apply(const PartialOpTable& t, ElementId a, ElementId b) {
  if (a == kUndefined || b == kUndefined) return kUndefined;
  return t.at(a, b);
}

std::optional<Violation> check_associative(const PartialOpTable& t, const char* axiom) {
  const auto n = static_cast<ElementId>(t.order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const ElementId xy = t.at(x, y);
      for (ElementId z = 0; z < n; ++z) {
        const ElementId left = apply(t, xy, z);
        const ElementId right = apply(t, x, t.at(y, z));
        if (left != right) return Violation{axiom, {x, y, z}, "(x+y)+z differs from x+(y+z)"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict verify_effect_algebra(const PartialOpTable& table, ElementId zero, ElementId one) {
  table.check_range();
  check_id(table, zero, "zero");
  check_id(table, one, "one");
  Verdict verdict;
  if (zero == one) verdict.violations.push_back({"zero-one", {zero}, "0 and 1 must be distinct"});
  if (auto v = check_commutative(table, "Ei")) verdict.violations.push_back(*v);
  if (auto v = check_associative(table, "Eii")) verdict.violations.push_back(*v);

  const auto n = static_cast<ElementId>(table.order());
  for (ElementId x = 0; x < n; ++x) {
    std::vector<ElementId> complements;
    for (ElementId y = 0; y < n; ++y) {
      if (table.at(x, y) == one) complements.push_back(y);
    }
    if (complements.size() != 1) {
      std::vector<ElementId> witness{x};
      witness.insert(witness.end(), complements.begin(), complements.end());
      verdict.violations.push_back(
          {"Eiii", std::move(witness),
           complements.empty() ? "no orthosupplement" : "orthosupplement is not unique"});
      break;
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    if (x != zero && table.defined(one, x)) {
      verdict.violations.push_back({"Eiv", {x}, "1+x defined for nonzero x"});
      break;
    }
  }
  return verdict;
}

Verdict verify_generalized(const PartialOpTable& table, ElementId zero) {
  table.check_range();
  check_id(table, zero, "zero");
  Verdict verdict;
  if (auto v = check_commutative(table, "GE1")) verdict.violations.push_back(*v);
  if (auto v = check_associative(table, "GE2")) verdict.violations.push_back(*v);

  const auto n = static_cast<ElementId>(table.order());
  [&] {
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (!table.defined(x, y)) continue;
        for (ElementId z = static_cast<ElementId>(y + 1); z < n; ++z) {
          if (table.at(x, z) == table.at(x, y)) {
            verdict.violations.push_back({"GE3", {x, y, z}, "x+y = x+z with y != z"});
            return;
          }
        }
      }
    }
  }();
  [&] {
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (table.at(x, y) == zero && (x != zero || y != zero)) {
          verdict.violations.push_back({"GE4", {x, y}, "x+y = 0 with a nonzero summand"});
          return;
        }
      }
    }
  }();
  for (ElementId x = 0; x < n; ++x) {
    if (table.at(x, zero) != x) {
      verdict.violations.push_back({"GE5", {x}, "x+0 != x"});
      break;
    }
  }
  return verdict;
}

AxiomError::AxiomError(Verdict verdict)
    : std::runtime_error("axioms violated:\n" + verdict.to_string()), verdict_(std::move(verdict)) {}

PartialAlgebra::PartialAlgebra(PartialOpTable table, ElementId zero, std::vector<std::string> names)
    : table_(std::move(table)), zero_(zero), names_(std::move(names)) {
  const std::size_t n = table_.order();
  if (!names_.empty() && names_.size() != n) {
    throw InputError("expected " + std::to_string(n) + " element names, got " +
                     std::to_string(names_.size()));
  }
  minus_.assign(n * n, kUndefined);
  down_.assign(n, ElementSet(n));
  up_.assign(n, ElementSet(n));
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId z = 0; z < n; ++z) {
      const ElementId y = table_.at(x, z);
      if (y == kUndefined) continue;
      minus_[y * n + x] = z;
      down_[y].set(x);
      up_[x].set(y);
    }
  }
}

std::optional<ElementId> PartialAlgebra::sum(ElementId x, ElementId y) const noexcept {
  const ElementId s = table_.at(x, y);
  if (s == kUndefined) return std::nullopt;
  return s;
}

std::optional<ElementId> PartialAlgebra::ominus(ElementId y, ElementId x) const noexcept {
  const ElementId d = minus_[y * order() + x];
  if (d == kUndefined) return std::nullopt;
  return d;
}

std::optional<ElementId> PartialAlgebra::orthogonal_sum(std::span<const ElementId> family) const noexcept {
  ElementId acc = zero_;
  for (ElementId x : family) {
    acc = table_.at(acc, x);
    if (acc == kUndefined) return std::nullopt;
  }
  return acc;
}

std::optional<ElementId> PartialAlgebra::multiple(ElementId x, std::size_t n) const noexcept {
  ElementId acc = zero_;
  for (std::size_t k = 0; k < n; ++k) {
    acc = table_.at(acc, x);
    if (acc == kUndefined) return std::nullopt;
  }
  return acc;
}

std::string PartialAlgebra::name(ElementId x) const {
  if (names_.empty()) return std::to_string(x);
  return names_[x];
}

ElementSet PartialAlgebra::all() const {
  ElementSet set(order());
  set.set();
  return set;
}

FiniteGeneralizedEffectAlgebra::FiniteGeneralizedEffectAlgebra(PartialOpTable table, ElementId zero,
                                                               std::vector<std::string> names)
    : PartialAlgebra(
          [&] {
            if (auto verdict = verify_generalized(table, zero); !verdict.ok()) {
              throw AxiomError(std::move(verdict));
            }
            return std::move(table);
          }(),
          zero, std::move(names)) {}

FiniteEffectAlgebra::FiniteEffectAlgebra(PartialOpTable table, ElementId zero, ElementId one,
                                         std::vector<std::string> names)
    : PartialAlgebra(
          [&] {
            if (auto verdict = verify_effect_algebra(table, zero, one); !verdict.ok()) {
              throw AxiomError(std::move(verdict));
            }
            return std::move(table);
          }(),
          zero, std::move(names)),
      one_(one),
      supplement_(order(), kUndefined) {
  const auto n = static_cast<ElementId>(order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (this->table().at(x, y) == one_) supplement_[x] = y;
    }
  }
}

FiniteGeneralizedEffectAlgebra FiniteEffectAlgebra::as_generalized() const {
  return FiniteGeneralizedEffectAlgebra(table(), zero(), names());
}

std::pair<PartialOpTable, std::vector<ElementId>> restrict_table(const PartialAlgebra& parent,
                                                                 const ElementSet& carrier) {
  std::vector<ElementId> to_parent = members(carrier);
  std::vector<ElementId> to_local(parent.order(), kUndefined);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_local[to_parent[i]] = static_cast<ElementId>(i);

  PartialOpTable table(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    for (std::size_t j = 0; j < to_parent.size(); ++j) {
      const ElementId s = parent.table().at(to_parent[i], to_parent[j]);
      if (s != kUndefined && to_local[s] != kUndefined) {
        table.set_cell(static_cast<ElementId>(i), static_cast<ElementId>(j), to_local[s]);
      }
    }
  }
  return {std::move(table), std::move(to_parent)};
}

namespace {

std::vector<std::string> local_names(const PartialAlgebra& parent, const std::vector<ElementId>& ids) {
  if (parent.names().empty()) return {};
  std::vector<std::string> names;
  names.reserve(ids.size());
  for (ElementId id : ids) names.push_back(parent.names()[id]);
  return names;
}

ElementId local_of(const std::vector<ElementId>& to_parent, ElementId parent_id) {
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (to_parent[i] == parent_id) return static_cast<ElementId>(i);
  }
  throw InputError("carrier does not contain element " + std::to_string(parent_id));
}

}  // namespace

Embedded<FiniteEffectAlgebra> sub_effect_algebra(const FiniteEffectAlgebra& parent,
                                                 const ElementSet& carrier) {
  auto [table, to_parent] = restrict_table(parent, carrier);
  const ElementId zero = local_of(to_parent, parent.zero());
  const ElementId one = local_of(to_parent, parent.one());
  auto names = local_names(parent, to_parent);
  return {FiniteEffectAlgebra(std::move(table), zero, one, std::move(names)), std::move(to_parent)};
}

Embedded<FiniteGeneralizedEffectAlgebra> sub_generalized(const PartialAlgebra& parent,
                                                         const ElementSet& carrier) {
  auto [table, to_parent] = restrict_table(parent, carrier);
  const ElementId zero = local_of(to_parent, parent.zero());
  auto names = local_names(parent, to_parent);
  return {FiniteGeneralizedEffectAlgebra(std::move(table), zero, std::move(names)),
          std::move(to_parent)};
}

Embedded<FiniteEffectAlgebra> interval_algebra(const PartialAlgebra& parent, ElementId top) {
  auto [table, to_parent] = restrict_table(parent, parent.down_set(top));
  const ElementId zero = local_of(to_parent, parent.zero());
  const ElementId one = local_of(to_parent, top);
  auto names = local_names(parent, to_parent);
  return {FiniteEffectAlgebra(std::move(table), zero, one, std::move(names)), std::move(to_parent)};
}

bool is_sub_effect_algebra(const FiniteEffectAlgebra& e, const ElementSet& set) {
  if (!set.test(e.one())) return false;
  const auto n = static_cast<ElementId>(e.order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const auto z = e.sum(x, y);
      if (!z) continue;
      const int inside = int(set.test(x)) + int(set.test(y)) + int(set.test(*z));
      if (inside == 2) return false;
    }
  }
  return true;
}

}  // namespace efalg
