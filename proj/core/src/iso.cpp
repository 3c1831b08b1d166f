#include "efalg/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "efalg/io.hpp"
#include "efalg/structure.hpp"

namespace efalg {

namespace {

using Invariant = std::vector<std::size_t>;

std::vector<std::size_t> heights(const PartialAlgebra& p) {
  const std::size_t n = p.order();
  std::vector<ElementId> by_size(n);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](ElementId a, ElementId b) { return p.down_set(a).count() < p.down_set(b).count(); });
  std::vector<std::size_t> h(n, 0);
  for (ElementId x : by_size) {
    for (ElementId y : members(p.down_set(x))) {
      if (y != x) h[x] = std::max(h[x], h[y] + 1);
    }
  }
  return h;
}

std::vector<Invariant> invariants(const PartialAlgebra& p, const ElementSet* sharp) {
  const std::size_t n = p.order();
  const auto h = heights(p);
  std::vector<Invariant> inv(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<ElementId>(xi);
    std::size_t degree = 0;
    for (std::size_t y = 0; y < n; ++y) degree += p.defined(x, static_cast<ElementId>(y)) ? 1 : 0;
    const auto o = ord(p, x);
    inv[xi] = {o ? *o : 0,
               h[xi],
               sharp ? static_cast<std::size_t>(sharp->test(xi)) : 0,
               p.down_set(x).count(),
               p.up_set(x).count(),
               degree};
  }
  return inv;
}

std::optional<IsoWitness> backtrack(const PartialAlgebra& a, const PartialAlgebra& b, const std::vector<Invariant>& ia,
                                 const std::vector<Invariant>& ib) {
  const std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;
  {
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::map<Invariant, std::size_t> class_size;
  for (const auto& v : ia) ++class_size[v];
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId x, ElementId y) { return class_size[ia[x]] < class_size[ia[y]]; });

  std::vector<ElementId> fwd(n, kUndefined);
  std::vector<ElementId> back(n, kUndefined);

  auto consistent = [&](ElementId x) {
    for (std::size_t yi = 0; yi < n; ++yi) {
      const auto y = static_cast<ElementId>(yi);
      if (fwd[y] == kUndefined) continue;
      const ElementId sa = a.table().at(x, y);
      const ElementId sb = b.table().at(fwd[x], fwd[y]);
      if ((sa == kUndefined) != (sb == kUndefined)) return false;
      if (sa == kUndefined) continue;
      if (fwd[sa] != kUndefined && fwd[sa] != sb) return false;
      if (back[sb] != kUndefined && back[sb] != sa) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const ElementId x = order[depth];
    for (std::size_t ci = 0; ci < n; ++ci) {
      const auto c = static_cast<ElementId>(ci);
      if (back[c] != kUndefined || ib[c] != ia[x]) continue;
      fwd[x] = c;
      back[c] = x;
      if (consistent(x) && self(self, depth + 1)) return true;
      fwd[x] = kUndefined;
      back[c] = kUndefined;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return IsoWitness{fwd};
}

}  // namespace

bool is_isomorphism(const PartialAlgebra& a, const PartialAlgebra& b, const std::vector<ElementId>& mapping) {
  const std::size_t n = a.order();
  if (b.order() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (ElementId m : mapping) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  if (mapping[a.zero()] != b.zero()) return false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ElementId s = a.table().at(static_cast<ElementId>(x), static_cast<ElementId>(y));
      const ElementId t = b.table().at(mapping[x], mapping[y]);
      if ((s == kUndefined) != (t == kUndefined)) return false;
      if (s != kUndefined && mapping[s] != t) return false;
    }
  }
  return true;
}

bool is_isomorphism(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b,
                    const std::vector<ElementId>& mapping) {
  return is_isomorphism(static_cast<const PartialAlgebra&>(a), static_cast<const PartialAlgebra&>(b), mapping) &&
         mapping[a.one()] == b.one();
}

std::optional<IsoWitness> find_isomorphism(const FiniteEffectAlgebra& a, const FiniteEffectAlgebra& b) {
  if (a.order() != b.order()) return std::nullopt;
  const ElementSet sa = sharp_elements(a);
  const ElementSet sb = sharp_elements(b);
  auto w = backtrack(a, b, invariants(a, &sa), invariants(b, &sb));
  if (w && !is_isomorphism(a, b, w->mapping)) throw ConsistencyError("isomorphism search returned a non-witness");
  return w;
}

std::optional<IsoWitness> find_isomorphism(const FiniteGeneralizedEffectAlgebra& a,
                                           const FiniteGeneralizedEffectAlgebra& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto w = backtrack(a, b, invariants(a, nullptr), invariants(b, nullptr));
  if (w && !is_isomorphism(a, b, w->mapping)) throw ConsistencyError("isomorphism search returned a non-witness");
  return w;
}

namespace {

// Individualization-refinement. Colours are ranks 0..k-1; equal rank means
// same cell, and the ranks are assigned by isomorphism-invariant signatures.
class Canonizer {
 public:
  explicit Canonizer(const FiniteEffectAlgebra& e) : e_(e), n_(e.order()) {}

  std::vector<ElementId> run() {
    const ElementSet sharp = sharp_elements(e_);
    const auto inv = invariants(e_, &sharp);
    std::vector<std::size_t> colour(n_);
    std::vector<Invariant> keys = inv;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t x = 0; x < n_; ++x) {
      colour[x] = std::lower_bound(keys.begin(), keys.end(), inv[x]) - keys.begin();
    }
    explore(refine(colour));
    return best_labels_;
  }

 private:
  std::vector<std::size_t> refine(std::vector<std::size_t> colour) const {
    std::size_t cells = count(colour);
    while (true) {
      std::vector<std::vector<std::size_t>> sig(n_);
      for (std::size_t x = 0; x < n_; ++x) {
        std::vector<std::size_t> pairs;
        for (std::size_t y = 0; y < n_; ++y) {
          const ElementId s = e_.table().at(static_cast<ElementId>(x), static_cast<ElementId>(y));
          if (s != kUndefined) pairs.push_back(colour[y] * n_ + colour[s]);
        }
        std::sort(pairs.begin(), pairs.end());
        sig[x].push_back(colour[x]);
        sig[x].insert(sig[x].end(), pairs.begin(), pairs.end());
      }
      auto keys = sig;
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (std::size_t x = 0; x < n_; ++x) colour[x] = std::lower_bound(keys.begin(), keys.end(), sig[x]) - keys.begin();
      if (keys.size() == cells) return colour;
      cells = keys.size();
    }
  }

  static std::size_t count(const std::vector<std::size_t>& colour) {
    auto c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void explore(const std::vector<std::size_t>& colour) {
    if (count(colour) == n_) {
      leaf(colour);
      return;
    }
    std::vector<std::size_t> size(n_, 0);
    for (std::size_t c : colour) ++size[c];
    std::size_t target = 0;
    while (size[target] < 2) ++target;
    for (std::size_t x = 0; x < n_; ++x) {
      if (colour[x] != target) continue;
      std::vector<std::size_t> next(n_);
      for (std::size_t y = 0; y < n_; ++y) next[y] = 2 * colour[y] + (colour[y] == target && y != x ? 1 : 0);
      explore(refine(rank(next)));
    }
  }

  static std::vector<std::size_t> rank(const std::vector<std::size_t>& v) {
    auto keys = v;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::size_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::lower_bound(keys.begin(), keys.end(), v[i]) - keys.begin();
    return out;
  }

  void leaf(const std::vector<std::size_t>& colour) {
    std::vector<ElementId> labels(n_);
    for (std::size_t x = 0; x < n_; ++x) labels[x] = static_cast<ElementId>(colour[x]);
    std::vector<ElementId> cells(n_ * n_ + 2);
    cells[0] = labels[e_.zero()];
    cells[1] = labels[e_.one()];
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const ElementId s = e_.table().at(static_cast<ElementId>(x), static_cast<ElementId>(y));
        cells[2 + labels[x] * n_ + labels[y]] = s == kUndefined ? kUndefined : labels[s];
      }
    }
    if (best_labels_.empty() || cells < best_cells_) {
      best_cells_ = std::move(cells);
      best_labels_ = std::move(labels);
    }
  }

  const FiniteEffectAlgebra& e_;
  std::size_t n_;
  std::vector<ElementId> best_cells_;
  std::vector<ElementId> best_labels_;
};

}  // namespace

std::vector<ElementId> canonical_labeling(const FiniteEffectAlgebra& e) { return Canonizer(e).run(); }

FiniteEffectAlgebra relabel(const FiniteEffectAlgebra& e, const std::vector<ElementId>& perm) {
  const std::size_t n = e.order();
  PartialOpTable t(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const ElementId s = e.table().at(static_cast<ElementId>(x), static_cast<ElementId>(y));
      if (s != kUndefined) t.set_cell(perm[x], perm[y], perm[s]);
    }
  }
  return FiniteEffectAlgebra(std::move(t), perm[e.zero()], perm[e.one()]);
}

std::string canonical_form(const FiniteEffectAlgebra& e) { return serialize(relabel(e, canonical_labeling(e))); }

}  // namespace efalg
