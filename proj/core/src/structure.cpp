#include "efalg/structure.hpp"

#include <algorithm>
#include <set>

namespace efalg {

namespace {

ElementId id(std::size_t i) { return static_cast<ElementId>(i); }

// Bound sets: elements of `carrier` below (or above) both x and y.
std::optional<ElementId> greatest(const PartialAlgebra& p, const ElementSet& lower) {
  for (auto m = lower.find_first(); m != ElementSet::npos; m = lower.find_next(m)) {
    if (lower.is_subset_of(p.down_set(id(m)))) return id(m);
  }
  return std::nullopt;
}

std::optional<ElementId> least(const PartialAlgebra& p, const ElementSet& upper) {
  for (auto m = upper.find_first(); m != ElementSet::npos; m = upper.find_next(m)) {
    if (upper.is_subset_of(p.up_set(id(m)))) return id(m);
  }
  return std::nullopt;
}

ElementSet upper_bounds(const PartialAlgebra& p, const ElementSet& carrier, const ElementSet& s) {
  ElementSet ub = carrier;
  for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x)) ub &= p.up_set(id(x));
  return ub;
}

}  // namespace

std::optional<ElementId> poset_meet(const PartialAlgebra& p, ElementId x, ElementId y) {
  return greatest(p, p.down_set(x) & p.down_set(y));
}

std::optional<ElementId> poset_join(const PartialAlgebra& p, ElementId x, ElementId y) {
  return least(p, p.up_set(x) & p.up_set(y));
}

std::optional<ElementId> meet_within(const PartialAlgebra& p, const ElementSet& carrier, ElementId x,
                                     ElementId y) {
  return greatest(p, p.down_set(x) & p.down_set(y) & carrier);
}

std::optional<ElementId> join_within(const PartialAlgebra& p, const ElementSet& carrier, ElementId x,
                                     ElementId y) {
  return least(p, p.up_set(x) & p.up_set(y) & carrier);
}

std::optional<ElementId> maximum_of(const PartialAlgebra& p, const ElementSet& s) { return greatest(p, s); }

std::optional<ElementId> minimum_of(const PartialAlgebra& p, const ElementSet& s) { return least(p, s); }

std::optional<ElementId> supremum_within(const PartialAlgebra& p, const ElementSet& carrier,
                                         const ElementSet& s) {
  return least(p, upper_bounds(p, carrier, s));
}

OrderTables::OrderTables(const PartialAlgebra& p) : OrderTables(p, p.all()) {}

OrderTables::OrderTables(const PartialAlgebra& p, const ElementSet& carrier)
    : order_(p.order()), meet_(order_ * order_, kUndefined), join_(order_ * order_, kUndefined) {
  for (auto x = carrier.find_first(); x != ElementSet::npos; x = carrier.find_next(x)) {
    for (auto y = carrier.find_first(); y <= x; y = carrier.find_next(y)) {
      const auto m = meet_within(p, carrier, id(x), id(y));
      const auto j = join_within(p, carrier, id(x), id(y));
      meet_[x * order_ + y] = meet_[y * order_ + x] = m.value_or(kUndefined);
      join_[x * order_ + y] = join_[y * order_ + x] = j.value_or(kUndefined);
    }
  }
}

ElementSet sharp_elements(const FiniteEffectAlgebra& e) {
  ElementSet sharp(e.order());
  for (std::size_t x = 0; x < e.order(); ++x) {
    if (poset_meet(e, id(x), e.orthosupplement(id(x))) == e.zero()) sharp.set(x);
  }
  return sharp;
}

ElementSet meager_elements(const FiniteEffectAlgebra& e) { return meager_elements(e, sharp_elements(e)); }

ElementSet meager_elements(const FiniteEffectAlgebra& e, const ElementSet& sharp) {
  ElementSet nonzero_sharp = sharp;
  nonzero_sharp.reset(e.zero());
  ElementSet meager(e.order());
  for (std::size_t x = 0; x < e.order(); ++x) {
    if (!e.down_set(id(x)).intersects(nonzero_sharp)) meager.set(x);
  }
  return meager;
}

ElementSet hypermeager_elements(const FiniteEffectAlgebra& e) {
  ElementSet hyper(e.order());
  for (std::size_t y = 0; y < e.order(); ++y) {
    hyper |= e.down_set(id(y)) & e.down_set(e.orthosupplement(id(y)));
  }
  return hyper;
}

namespace {

bool is_principal(const FiniteEffectAlgebra& e, ElementId x) {
  const auto below = members(e.down_set(x));
  for (ElementId y : below) {
    for (ElementId z : below) {
      const auto s = e.sum(y, z);
      if (s && !e.leq(*s, x)) return false;
    }
  }
  return true;
}

}  // namespace

ElementSet principal_elements(const FiniteEffectAlgebra& e) {
  ElementSet principal(e.order());
  for (std::size_t x = 0; x < e.order(); ++x) {
    if (is_principal(e, id(x))) principal.set(x);
  }
  return principal;
}

ElementSet central_elements(const FiniteEffectAlgebra& e) {
  const ElementSet principal = principal_elements(e);
  ElementSet center(e.order());
  for (std::size_t xi = 0; xi < e.order(); ++xi) {
    const ElementId x = id(xi);
    const ElementId xc = e.orthosupplement(x);
    if (!principal.test(x) || !principal.test(xc)) continue;
    bool splits_all = true;
    for (std::size_t y = 0; y < e.order() && splits_all; ++y) {
      bool splits = false;
      const ElementSet candidates = e.down_set(id(y)) & e.down_set(x);
      for (auto y1 = candidates.find_first(); y1 != ElementSet::npos && !splits;
           y1 = candidates.find_next(y1)) {
        const auto y2 = e.ominus(id(y), id(y1));
        splits = y2 && e.leq(*y2, xc);
      }
      splits_all = splits;
    }
    if (splits_all) center.set(x);
  }
  return center;
}

std::optional<std::size_t> ord(const PartialAlgebra& p, ElementId x) {
  if (x == p.zero()) return std::nullopt;
  ElementId acc = x;
  std::size_t n = 1;
  while (auto next = p.sum(acc, x)) {
    acc = *next;
    if (++n > p.order()) return std::nullopt;
  }
  return n;
}

bool is_archimedean(const PartialAlgebra& p) { return check_archimedean(p).holds; }

Classification check_archimedean(const PartialAlgebra& p) {
  for (std::size_t x = 0; x < p.order(); ++x) {
    if (id(x) != p.zero() && !ord(p, id(x))) return {false, {id(x)}};
  }
  return {};
}

bool are_compatible(const PartialAlgebra& p, ElementId x, ElementId y) {
  const ElementSet common = p.down_set(x) & p.down_set(y);
  for (auto q = common.find_first(); q != ElementSet::npos; q = common.find_next(q)) {
    const ElementId r = *p.ominus(y, id(q));
    if (p.defined(x, r)) return true;
  }
  return false;
}

ElementSet subsums(const PartialAlgebra& p, std::span<const ElementId> family) {
  ElementSet sums(p.order());
  sums.set(p.zero());
  for (ElementId f : family) {
    ElementSet next = sums;
    for (auto s = sums.find_first(); s != ElementSet::npos; s = sums.find_next(s)) {
      if (auto t = p.sum(id(s), f)) next.set(*t);
    }
    sums = std::move(next);
  }
  return sums;
}

namespace {

// Depth-first choice of multiplicities along a linear extension of `order`.
// An element can only be a subsum of family members below it, so its coverage
// is settled once everything earlier in the extension is decided.
class CompatibilitySearch {
 public:
  CompatibilitySearch(const PartialAlgebra& p, const ElementSet& m) : p_(p) {
    candidates_ = members(m);
    std::stable_sort(candidates_.begin(), candidates_.end(), [&](ElementId a, ElementId b) {
      return p.down_set(a).count() < p.down_set(b).count();
    });
  }

  bool run() {
    ElementSet sums(p_.order());
    sums.set(p_.zero());
    return extend(0, p_.zero(), sums);
  }

 private:
  bool extend(std::size_t index, ElementId total, const ElementSet& sums) {
    if (index == candidates_.size()) return true;
    const ElementId m = candidates_[index];
    if (m == p_.zero()) return extend(index + 1, total, sums);
    if (sums.test(m) && extend(index + 1, total, sums)) return true;
    ElementSet current = sums;
    ElementId t = total;
    while (auto next_total = p_.sum(t, m)) {
      t = *next_total;
      ElementSet next = current;
      for (auto s = current.find_first(); s != ElementSet::npos; s = current.find_next(s)) {
        if (auto v = p_.sum(id(s), m)) next.set(*v);
      }
      current = std::move(next);
      if (current.test(m) && extend(index + 1, t, current)) return true;
    }
    return false;
  }

  const PartialAlgebra& p_;
  std::vector<ElementId> candidates_;
};

}  // namespace

bool is_internally_compatible(const PartialAlgebra& p, const ElementSet& m) {
  return CompatibilitySearch(p, m).run();
}

namespace {

ElementSet atoms_of(const PartialAlgebra& p) {
  ElementSet atoms(p.order());
  for (std::size_t x = 0; x < p.order(); ++x) {
    if (id(x) != p.zero() && p.down_set(id(x)).count() == 2) atoms.set(x);
  }
  return atoms;
}

// Multisets of atoms (as nondecreasing sequences) whose sum is exactly `target`.
void atomic_decompositions(const PartialAlgebra& p, const std::vector<ElementId>& atoms, std::size_t start,
                           ElementId total, ElementId target, std::vector<ElementId>& family,
                           std::vector<std::vector<ElementId>>& out) {
  if (total == target) {
    out.push_back(family);
    return;
  }
  for (std::size_t i = start; i < atoms.size(); ++i) {
    const auto next = p.sum(total, atoms[i]);
    if (!next || !p.leq(*next, target)) continue;
    family.push_back(atoms[i]);
    atomic_decompositions(p, atoms, i, *next, target, family, out);
    family.pop_back();
  }
}

bool lex_less(const ElementSet& a, const ElementSet& b) { return members(a) < members(b); }

}  // namespace

// Any internally compatible set lies in the subsums of some orthogonal family,
// and refining a family member into atoms only enlarges its subsums. Blocks
// are therefore the maximal subsum sets of atomic decompositions of 1.
std::vector<ElementSet> blocks(const FiniteEffectAlgebra& e) {
  const auto atoms = members(atoms_of(e));
  std::vector<std::vector<ElementId>> decompositions;
  std::vector<ElementId> family;
  atomic_decompositions(e, atoms, 0, e.zero(), e.one(), family, decompositions);

  std::vector<ElementSet> candidates;
  for (const auto& d : decompositions) {
    ElementSet s = subsums(e, d);
    if (std::find(candidates.begin(), candidates.end(), s) == candidates.end()) {
      candidates.push_back(std::move(s));
    }
  }
  std::vector<ElementSet> result;
  for (const auto& c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const ElementSet& d) {
      return c != d && c.is_subset_of(d);
    });
    if (!dominated) result.push_back(c);
  }
  std::sort(result.begin(), result.end(), lex_less);
  return result;
}

namespace {

template <typename Restrict>
Classification riesz_search(const FiniteEffectAlgebra& e, const ElementSet& carrier, Restrict restrict) {
  const auto elems = members(carrier);
  for (ElementId u : elems) {
    for (ElementId v1 : elems) {
      for (ElementId v2 : elems) {
        const auto s = e.sum(v1, v2);
        if (!s || !carrier.test(*s) || !e.leq(u, *s) || !restrict(u, *s)) continue;
        bool splits = false;
        const ElementSet first = e.down_set(u) & e.down_set(v1) & carrier;
        for (auto u1 = first.find_first(); u1 != ElementSet::npos && !splits; u1 = first.find_next(u1)) {
          const auto u2 = e.ominus(u, id(u1));
          splits = u2 && carrier.test(*u2) && e.leq(*u2, v2);
        }
        if (!splits) return {false, {u, v1, v2}};
      }
    }
  }
  return {};
}

}  // namespace

Classification check_rdp(const FiniteEffectAlgebra& e) {
  return riesz_search(e, e.all(), [](ElementId, ElementId) { return true; });
}

bool has_rdp(const FiniteEffectAlgebra& e, const ElementSet& carrier) {
  return riesz_search(e, carrier, [](ElementId, ElementId) { return true; }).holds;
}

Classification check_homogeneous(const FiniteEffectAlgebra& e) {
  return riesz_search(e, e.all(),
                      [&](ElementId u, ElementId s) { return e.leq(s, e.orthosupplement(u)); });
}

Classification check_lattice(const PartialAlgebra& p) {
  for (std::size_t x = 0; x < p.order(); ++x) {
    for (std::size_t y = x + 1; y < p.order(); ++y) {
      if (!poset_meet(p, id(x), id(y)) || !poset_join(p, id(x), id(y))) return {false, {id(x), id(y)}};
    }
  }
  return {};
}

Classification check_orthoalgebra(const FiniteEffectAlgebra& e) {
  for (std::size_t x = 0; x < e.order(); ++x) {
    if (id(x) != e.zero() && e.defined(id(x), id(x))) return {false, {id(x)}};
  }
  return {};
}

Classification check_sharply_dominating(const FiniteEffectAlgebra& e) {
  const SharpBounds b = sharp_bounds(e);
  for (std::size_t x = 0; x < e.order(); ++x) {
    if (!b.hat(id(x)) || !b.tilde(id(x))) return {false, {id(x)}};
  }
  return {};
}

bool has_rdp(const FiniteEffectAlgebra& e) { return check_rdp(e).holds; }
bool is_homogeneous(const FiniteEffectAlgebra& e) { return check_homogeneous(e).holds; }
bool is_lattice(const PartialAlgebra& p) { return check_lattice(p).holds; }
bool is_sharply_dominating(const FiniteEffectAlgebra& e) { return check_sharply_dominating(e).holds; }

std::optional<ElementId> SharpBounds::tilde(ElementId x) const noexcept {
  if (below[x] == kUndefined) return std::nullopt;
  return below[x];
}

std::optional<ElementId> SharpBounds::hat(ElementId x) const noexcept {
  if (above[x] == kUndefined) return std::nullopt;
  return above[x];
}

SharpBounds sharp_bounds(const FiniteEffectAlgebra& e) { return sharp_bounds(e, sharp_elements(e)); }

SharpBounds sharp_bounds(const FiniteEffectAlgebra& e, const ElementSet& sharp) {
  SharpBounds b;
  b.below.resize(e.order());
  b.above.resize(e.order());
  for (std::size_t x = 0; x < e.order(); ++x) {
    b.below[x] = maximum_of(e, e.down_set(id(x)) & sharp).value_or(kUndefined);
    b.above[x] = minimum_of(e, e.up_set(id(x)) & sharp).value_or(kUndefined);
  }
  return b;
}

std::pair<ElementId, ElementId> decompose(const FiniteEffectAlgebra& e, ElementId x) {
  if (auto sd = check_sharply_dominating(e); !sd) {
    throw HypothesisError("sharply dominating", sd.witness,
                          "algebra is not sharply dominating: element " + e.name(sd.witness.front()) +
                              " lacks a sharp bound");
  }
  const ElementId below = *sharp_bounds(e).tilde(x);
  return {below, *e.ominus(x, below)};
}

ElementSet sums_below(const PartialAlgebra& p, ElementId bound) {
  const auto parts = members(p.down_set(bound));
  ElementSet reached(p.order());
  reached.set(p.zero());
  std::vector<ElementId> frontier{p.zero()};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId s : frontier) {
      for (ElementId w : parts) {
        if (auto t = p.sum(s, w); t && !reached.test(*t)) {
          reached.set(*t);
          next.push_back(*t);
        }
      }
    }
    frontier = std::move(next);
  }
  return reached;
}

ElementSet vartheta(const FiniteEffectAlgebra& e, ElementId u) { return vartheta(e, meager_elements(e), u); }

ElementSet vartheta(const FiniteEffectAlgebra& e, const ElementSet& meager, ElementId u) {
  const ElementSet v = sums_below(e, e.orthosupplement(u)) & meager & e.down_set(u);
  ElementSet out = v;
  for (auto x = v.find_first(); x != ElementSet::npos; x = v.find_next(x)) out.set(*e.ominus(u, id(x)));
  return out;
}

ElementSet theta(const FiniteEffectAlgebra& e, const ElementSet& a) {
  const ElementSet meager = meager_elements(e);
  ElementSet out(e.order());
  for (auto u = a.find_first(); u != ElementSet::npos; u = a.find_next(u)) out |= vartheta(e, meager, id(u));
  return out;
}

ElementSet sigma_closure(const FiniteEffectAlgebra& e, const ElementSet& a) {
  ElementSet current = a;
  for (std::size_t step = 0; step <= e.order(); ++step) {
    ElementSet next = theta(e, current) | current;
    if (next == current) return current;
    current = std::move(next);
  }
  throw ConsistencyError("sigma closure did not stabilise within order steps");
}

Verdict heyting_block_check(const FiniteEffectAlgebra& e, const ElementSet& b) {
  Verdict verdict;
  auto fail = [&](std::string clause, std::vector<ElementId> witness, std::string detail) {
    verdict.violations.push_back({std::move(clause), std::move(witness), std::move(detail)});
    return verdict;
  };
  if (auto h = check_homogeneous(e); !h) return fail("hypothesis", h.witness, "algebra is not homogeneous");
  if (auto sd = check_sharply_dominating(e); !sd) {
    return fail("hypothesis", sd.witness, "algebra is not sharply dominating");
  }
  if (!is_sub_effect_algebra(e, b)) return fail("sub-effect-algebra", members(b), "not a sub-effect algebra");

  const auto sub = sub_effect_algebra(e, b);
  const auto& blk = sub.algebra;
  const auto& up = sub.to_parent;
  auto lift = [&](std::vector<ElementId> local) {
    for (auto& x : local) x = up[x];
    return local;
  };

  if (auto l = check_lattice(blk); !l) return fail("lattice", lift(l.witness), "block is not a lattice");
  if (auto r = check_rdp(blk); !r) return fail("rdp", lift(r.witness), "block lacks RDP");
  if (auto a = check_archimedean(blk); !a) return fail("archimedean", lift(a.witness), "block is not Archimedean");

  const OrderTables tables(blk);
  const auto n = static_cast<ElementId>(blk.order());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        const ElementId lhs = *tables.meet(x, *tables.join(y, z));
        const ElementId rhs = *tables.join(*tables.meet(x, y), *tables.meet(x, z));
        if (lhs != rhs) return fail("distributive", {up[x], up[y], up[z]}, "meet does not distribute over join");
      }
    }
  }

  const SharpBounds bounds = sharp_bounds(e);
  std::vector<ElementId> star(n);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId parent = e.orthosupplement(*bounds.hat(up[x]));
    const auto local = sub.local(parent);
    if (!local) return fail("pseudocomplement", {up[x], parent}, "(hat x)' lies outside the block");
    star[x] = *local;
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const bool disjoint = tables.meet(x, y) == blk.zero();
      if (disjoint != blk.leq(x, star[y])) {
        return fail("pseudocomplement", {up[x], up[y]}, "x ^ y = 0 disagrees with x <= y*");
      }
    }
  }
  ElementSet heyting_center(n);
  for (ElementId x = 0; x < n; ++x) heyting_center.set(star[x]);
  const ElementSet center = central_elements(blk);
  if (heyting_center != center) {
    return fail("heyting-center", lift(members(heyting_center ^ center)), "Heyting center differs from center");
  }
  return verdict;
}

StructureReport analyze(const FiniteEffectAlgebra& e) {
  StructureReport r;
  r.sharp = sharp_elements(e);
  r.meager = meager_elements(e, r.sharp);
  r.hypermeager = hypermeager_elements(e);
  r.principal = principal_elements(e);
  r.center = central_elements(e);
  r.homogeneous = check_homogeneous(e);
  r.rdp = check_rdp(e);
  r.lattice = check_lattice(e);
  r.archimedean = check_archimedean(e);
  r.orthoalgebra = check_orthoalgebra(e);
  r.bounds = sharp_bounds(e, r.sharp);
  r.sharply_dominating = {};
  for (std::size_t x = 0; x < e.order(); ++x) {
    if (r.bounds.below[x] == kUndefined || r.bounds.above[x] == kUndefined) {
      r.sharply_dominating = {false, {id(x)}};
      break;
    }
  }
  r.blocks = blocks(e);
  r.block_theory_applies = r.homogeneous.holds;
  r.ord.resize(e.order());
  for (std::size_t x = 0; x < e.order(); ++x) r.ord[x] = ord(e, id(x));
  return r;
}

bool qualifies_for_triple(const StructureReport& report) {
  return report.homogeneous.holds && report.sharply_dominating.holds;
}

}  // namespace efalg
