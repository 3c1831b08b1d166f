#include "efalg/catalog.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "efalg/io.hpp"
#include "efalg/iso.hpp"
#include "efalg/parallel.hpp"

namespace efalg {

namespace {

ElementId id(std::size_t i) { return static_cast<ElementId>(i); }

}  // namespace

FiniteEffectAlgebra make_chain(std::size_t n) {
  if (n == 0) throw InputError("make_chain: n must be at least 1 (0 = 1 is not an effect algebra)");
  if (n + 1 > kMaxOrder) throw InputError("make_chain: n too large");
  PartialOpTable t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) t.set_cell(id(i), id(j), id(i + j));
  }
  return FiniteEffectAlgebra(std::move(t), 0, id(n));
}

FiniteEffectAlgebra make_boolean(std::size_t k) {
  if (k < 1 || k > 12) throw InputError("make_boolean: k must be between 1 and 12");
  const std::size_t n = std::size_t{1} << k;
  PartialOpTable t(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((a & b) == 0) t.set_cell(id(a), id(b), id(a | b));
    }
  }
  return FiniteEffectAlgebra(std::move(t), 0, id(n - 1));
}

FiniteEffectAlgebra horizontal_sum(const std::vector<FiniteEffectAlgebra>& summands) {
  if (summands.empty()) throw InputError("horizontal_sum: no summands");
  std::size_t n = 2;
  for (const auto& s : summands) n += s.order() - 2;
  if (n > kMaxOrder) throw InputError("horizontal_sum: result too large");
  PartialOpTable t(n);
  ElementId next = 2;
  for (const auto& s : summands) {
    std::vector<ElementId> to(s.order());
    to[s.zero()] = 0;
    to[s.one()] = 1;
    for (std::size_t x = 0; x < s.order(); ++x) {
      if (x != s.zero() && x != s.one()) to[x] = next++;
    }
    for (std::size_t x = 0; x < s.order(); ++x) {
      for (std::size_t y = 0; y < s.order(); ++y) {
        if (const auto z = s.sum(id(x), id(y))) t.set_cell(to[x], to[y], to[*z]);
      }
    }
  }
  return FiniteEffectAlgebra(std::move(t), 0, 1);
}

FiniteEffectAlgebra direct_product(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  if (na * nb > kMaxOrder) throw InputError("direct_product: result too large");
  PartialOpTable t(na * nb);
  for (std::size_t x1 = 0; x1 < na; ++x1) {
    for (std::size_t x2 = 0; x2 < nb; ++x2) {
      for (std::size_t y1 = 0; y1 < na; ++y1) {
        const auto s1 = a.sum(id(x1), id(y1));
        if (!s1) continue;
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          if (const auto s2 = b.sum(id(x2), id(y2))) {
            t.set_cell(id(x1 * nb + x2), id(y1 * nb + y2), id(*s1 * nb + *s2));
          }
        }
      }
    }
  }
  return FiniteEffectAlgebra(std::move(t), id(a.zero() * nb + b.zero()), id(a.one() * nb + b.one()));
}

// ---------------------------------------------------------------------------
// Enumeration.
//
// Element 0 is zero and 1 is one. The interior 2..n-1 starts with `fixed`
// self-supplementary elements followed by supplementary pairs. A defined sum
// x + y = w' is stored as the unordered triple {x, y, w} with x + y + w = 1,
// so choosing one cell also decides x + w and y + w.

namespace {

constexpr ElementId kUnset = kUndefined - 1;

class TableSearch {
 public:
  TableSearch(std::size_t n, std::size_t fixed) : n_(n), comp_(n), cells_(n * n, kUnset) {
    comp_[0] = 1;
    comp_[1] = 0;
    for (std::size_t x = 2; x < 2 + fixed; ++x) comp_[x] = id(x);
    for (std::size_t x = 2 + fixed; x + 1 < n; x += 2) {
      comp_[x] = id(x + 1);
      comp_[x + 1] = id(x);
    }
    for (std::size_t x = 0; x < n; ++x) {
      put(0, id(x), id(x));
      if (x != 0) put(1, id(x), kUndefined);
    }
    for (std::size_t x = 2; x < n; ++x) put(id(x), comp_[x], 1);
    trail_.clear();
    for (std::size_t i = 2; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) pairs_.emplace_back(id(i), id(j));
    }
  }

  /// Visits every complete table that passes the partial checks. `order`
  /// returns the branch order for a cell: kUndefined for "no sum", else the
  /// third member of the triple. The visitor returns false to stop.
  template <typename Order, typename Visit>
  bool run(Order&& order, Visit&& visit) {
    return dfs(0, order, visit);
  }

  PartialOpTable table() const {
    PartialOpTable t(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const ElementId v = cells_[x * n_ + y];
        if (v != kUndefined) t.set_cell(id(x), id(y), v);
      }
    }
    return t;
  }

  std::size_t order() const noexcept { return n_; }

 private:
  ElementId& cell(ElementId x, ElementId y) { return cells_[x * n_ + y]; }

  bool put(ElementId x, ElementId y, ElementId v) {
    for (const auto& [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
      ElementId& c = cell(a, b);
      if (c == v) continue;
      if (c != kUnset) return false;
      c = v;
      trail_.push_back(a * n_ + b);
    }
    return true;
  }

  bool triple(ElementId x, ElementId y, ElementId w) {
    return put(x, y, comp_[w]) && put(x, w, comp_[y]) && put(y, w, comp_[x]);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      cells_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  // If (x + y) + z is decided and defined, y + z and x + (y + z) must agree.
  bool associative_so_far() const {
    for (std::size_t x = 2; x < n_; ++x) {
      for (std::size_t y = 2; y < n_; ++y) {
        const ElementId a = cells_[x * n_ + y];
        if (a == kUnset || a == kUndefined) continue;
        for (std::size_t z = 2; z < n_; ++z) {
          const ElementId c = cells_[a * n_ + z];
          if (c == kUnset || c == kUndefined) continue;
          const ElementId b = cells_[y * n_ + z];
          if (b == kUnset) continue;
          if (b == kUndefined) return false;
          const ElementId d = cells_[x * n_ + b];
          if (d == kUnset) continue;
          if (d != c) return false;
        }
      }
    }
    return true;
  }

  template <typename Order, typename Visit>
  bool dfs(std::size_t pos, Order& order, Visit& visit) {
    while (pos < pairs_.size() && cells_[pairs_[pos].first * n_ + pairs_[pos].second] != kUnset) ++pos;
    if (pos == pairs_.size()) return visit(*this);
    const auto [x, y] = pairs_[pos];
    for (ElementId w : order(x, y)) {
      const std::size_t mark = trail_.size();
      const bool ok = w == kUndefined ? put(x, y, kUndefined) : triple(x, y, w);
      if (ok && associative_so_far() && !dfs(pos + 1, order, visit)) return false;
      undo(mark);
    }
    return true;
  }

  std::size_t n_;
  std::vector<ElementId> comp_;
  std::vector<ElementId> cells_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<ElementId, ElementId>> pairs_;
};

std::vector<std::size_t> fixed_counts(std::size_t n) {
  std::vector<std::size_t> out;
  const std::size_t interior = n - 2;
  for (std::size_t f = interior % 2; f <= interior; f += 2) out.push_back(f);
  return out;
}

void check_bound(std::size_t order, std::size_t bound) {
  if (order > bound) {
    throw EnumerationBoundError("refusing to enumerate order " + std::to_string(order) + " (bound " +
                                std::to_string(bound) + "): " + enumeration_cost(order));
  }
}

}  // namespace

std::string enumeration_cost(std::size_t order) {
  if (order < 3) return "trivial search";
  const std::size_t interior = order - 2;
  const std::size_t cells = interior * (interior + 1) / 2;
  std::ostringstream out;
  out << cells << " interior cells with up to " << interior + 1 << " choices each, at most " << interior + 1 << "^"
      << cells << " tables per supplement pattern, " << fixed_counts(order).size() << " patterns";
  return out.str();
}

std::vector<FiniteEffectAlgebra> enumerate_order(std::size_t order, std::size_t jobs, std::size_t bound) {
  check_bound(order, bound);
  if (order < 2) return {};
  const auto patterns = fixed_counts(order);

  using Forms = std::set<std::string>;
  auto found = parallel_map<Forms>(patterns.size(), jobs, [&](std::size_t p) {
    Forms forms;
    TableSearch search(order, patterns[p]);
    std::vector<ElementId> options{kUndefined};
    for (std::size_t w = 2; w < order; ++w) options.push_back(id(w));
    search.run([&](ElementId, ElementId) -> const std::vector<ElementId>& { return options; },
               [&](const TableSearch& s) {
                 auto table = s.table();
                 if (verify_effect_algebra(table, 0, 1).ok()) {
                   forms.insert(canonical_form(FiniteEffectAlgebra(std::move(table), 0, 1)));
                 }
                 return true;
               });
    return forms;
  });

  Forms all;
  for (auto& f : found) all.merge(f);
  std::vector<FiniteEffectAlgebra> out;
  out.reserve(all.size());
  for (const auto& text : all) out.push_back(parse_algebra(text));
  return out;
}

std::vector<FiniteEffectAlgebra> enumerate_all(std::size_t max_order, std::size_t jobs, std::size_t bound) {
  check_bound(max_order, bound);
  std::vector<FiniteEffectAlgebra> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    auto level = enumerate_order(n, jobs, bound);
    for (auto& e : level) out.push_back(std::move(e));
  }
  return out;
}

FiniteEffectAlgebra random_algebra(std::uint64_t seed, std::size_t order, std::size_t bound) {
  check_bound(order, bound);
  if (order < 2) throw InputError("random_algebra: order must be at least 2");
  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto shuffle = [&](auto& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  };

  const auto patterns = fixed_counts(order);
  TableSearch search(order, patterns[below(patterns.size())]);
  std::vector<ElementId> options;
  std::optional<PartialOpTable> result;
  search.run(
      [&](ElementId, ElementId) -> const std::vector<ElementId>& {
        options.assign({kUndefined});
        for (std::size_t w = 2; w < order; ++w) options.push_back(id(w));
        shuffle(options);
        return options;
      },
      [&](const TableSearch& s) {
        auto table = s.table();
        if (!verify_effect_algebra(table, 0, 1).ok()) return true;
        result = std::move(table);
        return false;
      });
  if (!result) throw ConsistencyError("random_algebra: search tree has no effect algebra");

  std::vector<ElementId> perm(order);
  for (std::size_t i = 0; i < order; ++i) perm[i] = id(i);
  shuffle(perm);
  return relabel(FiniteEffectAlgebra(std::move(*result), 0, 1), perm);
}

// ---------------------------------------------------------------------------
// Named catalog.

namespace {

std::vector<ElementId> ids(std::initializer_list<std::size_t> v) {
  std::vector<ElementId> out;
  for (std::size_t x : v) out.push_back(id(x));
  return out;
}

std::vector<ElementId> range(std::size_t from, std::size_t to) {
  std::vector<ElementId> out;
  for (std::size_t x = from; x < to; ++x) out.push_back(id(x));
  return out;
}

CatalogEntry chain_entry(std::size_t n) {
  ExpectedReport x;
  x.sharp = ids({0, n});
  x.meager = range(0, n);
  x.hypermeager = range(0, n / 2 + 1);
  x.center = ids({0, n});
  x.block_count = 1;
  x.homogeneous = true;
  x.rdp = true;
  x.lattice = true;
  x.orthoalgebra = n == 1;
  return {"chain" + std::to_string(n), make_chain(n), x};
}

CatalogEntry boolean_entry(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  ExpectedReport x;
  x.sharp = range(0, n);
  x.meager = ids({0});
  x.hypermeager = ids({0});
  x.center = range(0, n);
  x.block_count = 1;
  x.homogeneous = true;
  x.rdp = true;
  x.lattice = true;
  x.orthoalgebra = true;
  return {"boolean" + std::to_string(k), make_boolean(k), x};
}

ExpectedReport horizontal_expected(std::vector<ElementId> sharp, std::vector<ElementId> meager,
                                   std::vector<ElementId> hypermeager, std::size_t blocks) {
  ExpectedReport x;
  x.sharp = std::move(sharp);
  x.meager = std::move(meager);
  x.hypermeager = std::move(hypermeager);
  x.center = ids({0, 1});
  x.block_count = blocks;
  x.homogeneous = true;
  x.rdp = false;
  x.lattice = true;
  x.orthoalgebra = false;
  return x;
}

// Six elements 0, 1, a, b, p, q with a+a = b+b = p, a+b = q, a+q = b+p = 1.
// b <= a+a <= b' but b does not split under a.
FiniteEffectAlgebra non_homogeneous_min();

}  // namespace

std::vector<CatalogEntry> named_catalog() {
  std::vector<CatalogEntry> out;
  for (std::size_t n : {1, 2, 3, 5, 6}) out.push_back(chain_entry(n));
  for (std::size_t k : {2, 3, 4}) out.push_back(boolean_entry(k));

  out.push_back({"diamond", horizontal_sum({make_chain(2), make_chain(2)}),
                 horizontal_expected(ids({0, 1}), ids({0, 2, 3}), ids({0, 2, 3}), 2)});
  out.push_back({"triple_diamond", horizontal_sum({make_chain(2), make_chain(2), make_chain(2)}),
                 horizontal_expected(ids({0, 1}), ids({0, 2, 3, 4}), ids({0, 2, 3, 4}), 3)});
  out.push_back({"boolean2_hsum_chain2", horizontal_sum({make_boolean(2), make_chain(2)}),
                 horizontal_expected(ids({0, 1, 2, 3}), ids({0, 4}), ids({0, 4}), 2)});
  out.push_back({"chain2_hsum_chain3", horizontal_sum({make_chain(2), make_chain(3)}),
                 horizontal_expected(ids({0, 1}), ids({0, 2, 3, 4}), ids({0, 2, 3}), 2)});

  {
    ExpectedReport x;
    x.sharp = ids({0, 1, 4, 5});
    x.meager = ids({0, 2});
    x.hypermeager = ids({0, 2});
    x.center = ids({0, 1, 4, 5});
    x.block_count = 1;
    x.homogeneous = true;
    x.rdp = true;
    x.lattice = true;
    x.orthoalgebra = false;
    out.push_back({"chain2_x_chain1", direct_product(make_chain(2), make_chain(1)), x});
  }
  {
    ExpectedReport x;
    x.sharp = ids({0, 2, 6, 8});
    x.meager = ids({0, 1, 3, 4});
    x.hypermeager = ids({0, 1, 3, 4});
    x.center = ids({0, 2, 6, 8});
    x.block_count = 1;
    x.homogeneous = true;
    x.rdp = true;
    x.lattice = true;
    x.orthoalgebra = false;
    out.push_back({"chain2_x_chain2", direct_product(make_chain(2), make_chain(2)), x});
  }
  {
    ExpectedReport x;
    x.homogeneous = false;
    out.push_back({"non_homogeneous_min", non_homogeneous_min(), x});
  }
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  for (auto& e : named_catalog()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

Verdict check_expected(const ExpectedReport& x, const StructureReport& r) {
  Verdict v;
  auto set_field = [&](const char* field, const std::optional<std::vector<ElementId>>& want, const ElementSet& got) {
    if (want && *want != members(got)) v.violations.push_back({field, members(got), "differs from expected"});
  };
  auto flag = [&](const char* field, std::optional<bool> want, bool got) {
    if (want && *want != got) v.violations.push_back({field, {}, got ? "holds, expected not" : "fails, expected to hold"});
  };
  set_field("sharp", x.sharp, r.sharp);
  set_field("meager", x.meager, r.meager);
  set_field("hypermeager", x.hypermeager, r.hypermeager);
  set_field("center", x.center, r.center);
  if (x.block_count && *x.block_count != r.blocks.size()) {
    v.violations.push_back({"blocks", {}, "expected " + std::to_string(*x.block_count) + " blocks, got " +
                                              std::to_string(r.blocks.size())});
  }
  flag("homogeneous", x.homogeneous, r.homogeneous.holds);
  flag("rdp", x.rdp, r.rdp.holds);
  flag("lattice", x.lattice, r.lattice.holds);
  flag("orthoalgebra", x.orthoalgebra, r.orthoalgebra.holds);
  return v;
}

namespace {

FiniteEffectAlgebra non_homogeneous_min() {
  enum : ElementId { z, o, a, b, p, q };
  PartialOpTable t(6);
  for (ElementId x = 0; x < 6; ++x) t.set(z, x, x);
  t.set(a, a, p);
  t.set(b, b, p);
  t.set(a, b, q);
  t.set(a, q, o);
  t.set(b, p, o);
  return FiniteEffectAlgebra(std::move(t), z, o, {"0", "1", "a", "b", "p", "q"});
}

}  // namespace

}  // namespace efalg
