#include "efalg/triple.hpp"

#include <algorithm>
#include <sstream>

#include "efalg/iso.hpp"

namespace efalg {

namespace {

ElementId id(std::size_t i) { return static_cast<ElementId>(i); }

std::vector<ElementId> inverse_map(const std::vector<ElementId>& to_source, std::size_t source_order) {
  std::vector<ElementId> inv(source_order, kUndefined);
  for (std::size_t i = 0; i < to_source.size(); ++i) inv[to_source[i]] = id(i);
  return inv;
}

}  // namespace

TripleRep extract_triple(const FiniteEffectAlgebra& e) { return extract_triple(e, analyze(e)); }

TripleRep extract_triple(const FiniteEffectAlgebra& e, const StructureReport& report) {
  if (!report.homogeneous) {
    throw HypothesisError("homogeneous", report.homogeneous.witness,
                          "algebra is not homogeneous (u, v1, v2 witness has no splitting)");
  }
  if (!report.sharply_dominating) {
    throw HypothesisError("sharply dominating", report.sharply_dominating.witness,
                          "algebra is not sharply dominating");
  }
  auto sharp = sub_effect_algebra(e, report.sharp);
  auto meager = sub_generalized(e, report.meager);

  const auto meager_local = inverse_map(meager.to_parent, e.order());
  std::vector<ElementSet> h(sharp.to_parent.size(), ElementSet(meager.to_parent.size()));
  for (std::size_t s = 0; s < sharp.to_parent.size(); ++s) {
    const ElementSet below = e.down_set(sharp.to_parent[s]) & report.meager;
    for (ElementId x : members(below)) h[s].set(meager_local[x]);
  }
  TripleBackMaps back{sharp.to_parent, meager.to_parent};
  return TripleRep{std::move(sharp.algebra), std::move(meager.algebra), std::move(h), std::move(back)};
}

TripleRep strip_back_maps(TripleRep t) {
  t.back_maps.reset();
  return t;
}

TripleMaps::TripleMaps(const TripleRep& t)
    : sharp_order_(t.sharp_algebra.order()),
      meager_order_(t.meager_algebra.order()),
      meager_tables_(t.meager_algebra) {
  const auto& sh = t.sharp_algebra;
  const auto& mea = t.meager_algebra;
  const std::size_t ns = sharp_order_;
  const std::size_t nm = meager_order_;
  if (t.h.size() != ns) throw ConsistencyError("h is not defined on every sharp element");

  // M1
  hat_.resize(nm);
  for (std::size_t x = 0; x < nm; ++x) {
    ElementSet over(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      if (t.h[s].test(x)) over.set(s);
    }
    const auto least = minimum_of(sh, over);
    if (!least) throw ConsistencyError("meager element " + mea.name(id(x)) + " has no least sharp bound in h");
    hat_[x] = *least;
  }

  // M2
  const ElementSet everything = mea.all();
  pi_.assign(ns * nm, kUndefined);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t x = 0; x < nm; ++x) {
      const ElementSet below = mea.down_set(id(x)) & t.h[s];
      const auto z = supremum_within(mea, everything, below);
      if (z && t.h[s].test(*z)) pi_[s * nm + x] = *z;
    }
  }

  // M3
  r_.resize(nm);
  for (std::size_t xi = 0; xi < nm; ++xi) {
    const ElementId x = id(xi);
    const ElementId top = hat_[x];
    const ElementSet& allowed = t.h[top];
    std::vector<ElementId> found;
    for (std::size_t yi = 0; yi < nm; ++yi) {
      const ElementId y = id(yi);
      if (hat_[y] != top) continue;
      const auto m = meager_tables_.meet(x, y);
      if (!m) continue;
      const auto joined = mea.sum(x, *mea.ominus(y, *m));
      if (!joined || !allowed.test(*joined)) continue;
      bool characterised = true;
      for (auto z = allowed.find_first(); z != ElementSet::npos && characterised; z = allowed.find_next(z)) {
        const auto zx = mea.sum(id(z), x);
        const bool lhs = zx && allowed.test(*zx);
        const auto rest = mea.ominus(y, id(z));
        const bool rhs = rest && hat_[*rest] == top;
        characterised = lhs == rhs;
      }
      if (characterised) found.push_back(y);
    }
    if (found.size() != 1) {
      throw ConsistencyError("R(" + mea.name(x) + ") has " + std::to_string(found.size()) +
                             " candidates, expected exactly one");
    }
    r_[xi] = found.front();
  }

  // M4
  s_set_.assign(nm * nm, ElementSet(ns));
  s_.assign(nm * nm, kUndefined);
  for (std::size_t x = 0; x < nm; ++x) {
    for (std::size_t y = 0; y < nm; ++y) {
      ElementSet& cand = s_set_[x * nm + y];
      for (std::size_t z = 0; z < ns; ++z) {
        const ElementId a = pi_[z * nm + x];
        const ElementId b = pi_[z * nm + y];
        if (a == kUndefined || b == kUndefined) continue;
        if (hat_[a] == z && r_[a] == b) cand.set(z);
      }
      s_[x * nm + y] = maximum_of(sh, cand).value_or(kUndefined);
    }
  }
}

std::optional<ElementId> TripleMaps::pi(ElementId s, ElementId x) const {
  const ElementId v = pi_[s * meager_order_ + x];
  if (v == kUndefined) return std::nullopt;
  return v;
}

std::optional<ElementId> TripleMaps::s_map(ElementId x, ElementId y) const {
  const ElementId v = s_[x * meager_order_ + y];
  if (v == kUndefined) return std::nullopt;
  return v;
}

ElementId widehat_triple(const TripleRep& t, ElementId x) { return TripleMaps(t).widehat(x); }
std::optional<ElementId> pi_s(const TripleRep& t, ElementId s, ElementId x) { return TripleMaps(t).pi(s, x); }
ElementId r_map(const TripleRep& t, ElementId x) { return TripleMaps(t).r_map(x); }
std::optional<ElementId> s_map(const TripleRep& t, ElementId x, ElementId y) { return TripleMaps(t).s_map(x, y); }

std::optional<ElementId> TeaAlgebra::index_of(ElementId sharp, ElementId meager) const {
  const std::pair<ElementId, ElementId> key{sharp, meager};
  const auto it = std::lower_bound(carrier.begin(), carrier.end(), key);
  if (it == carrier.end() || *it != key) return std::nullopt;
  return id(it - carrier.begin());
}

namespace {

// Conditions (i)-(iv) of the Tea sum, evaluated in order; nullopt when any
// stage is undefined.
std::optional<std::pair<ElementId, ElementId>> tea_sum(const TripleRep& t, const TripleMaps& maps,
                                                       std::pair<ElementId, ElementId> x,
                                                       std::pair<ElementId, ElementId> y) {
  const auto& sh = t.sharp_algebra;
  const auto& mea = t.meager_algebra;
  const auto s = maps.s_map(x.second, y.second);
  if (!s) return std::nullopt;
  const ElementId parts[] = {x.first, y.first, *s};
  const auto zs = sh.orthogonal_sum(parts);
  if (!zs) return std::nullopt;
  const auto a = maps.pi(*s, x.second);
  const auto b = maps.pi(*s, y.second);
  if (!a || !b) return std::nullopt;
  const auto da = mea.ominus(x.second, *a);
  const auto db = mea.ominus(y.second, *b);
  if (!da || !db) return std::nullopt;
  const auto zm = mea.sum(*da, *db);
  if (!zm) return std::nullopt;
  if (!t.h[sh.orthosupplement(*zs)].test(*zm)) return std::nullopt;
  return std::pair{*zs, *zm};
}

}  // namespace

TeaAlgebra reconstruct_tea(const TripleRep& t) {
  const auto& sh = t.sharp_algebra;
  const auto& mea = t.meager_algebra;
  const TripleMaps maps(t);

  std::vector<std::pair<ElementId, ElementId>> carrier;
  for (std::size_t s = 0; s < sh.order(); ++s) {
    const ElementSet& allowed = t.h[sh.orthosupplement(id(s))];
    for (std::size_t m = 0; m < mea.order(); ++m) {
      if (allowed.test(m)) carrier.emplace_back(id(s), id(m));
    }
  }

  auto locate = [&](ElementId s, ElementId m) -> std::optional<ElementId> {
    const std::pair<ElementId, ElementId> key{s, m};
    const auto it = std::lower_bound(carrier.begin(), carrier.end(), key);
    if (it == carrier.end() || *it != key) return std::nullopt;
    return id(it - carrier.begin());
  };

  const auto zero = locate(sh.zero(), mea.zero());
  const auto one = locate(sh.one(), mea.zero());
  if (!zero || !one) throw ConsistencyError("Tea carrier lacks (0,0) or (1,0)");

  PartialOpTable table(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    for (std::size_t j = 0; j < carrier.size(); ++j) {
      const auto z = tea_sum(t, maps, carrier[i], carrier[j]);
      if (!z) continue;
      const auto k = locate(z->first, z->second);
      if (!k) throw ConsistencyError("Tea sum left the carrier");
      table.set_cell(id(i), id(j), *k);
    }
  }

  std::vector<std::string> names;
  names.reserve(carrier.size());
  for (const auto& [s, m] : carrier) names.push_back("(" + sh.name(s) + "," + mea.name(m) + ")");

  if (auto verdict = verify_effect_algebra(table, *zero, *one); !verdict.ok()) {
    std::ostringstream msg;
    msg << "reconstructed Tea is not an effect algebra:";
    for (const auto& v : verdict.violations) {
      msg << " " << v.axiom << " at";
      for (ElementId w : v.witness) msg << " " << names[w];
      msg << ";";
    }
    throw ConsistencyError(msg.str());
  }
  return TeaAlgebra{std::move(carrier), FiniteEffectAlgebra(std::move(table), *zero, *one, std::move(names))};
}

RoundtripReport verify_roundtrip(const FiniteEffectAlgebra& e) { return verify_roundtrip(e, extract_triple(e)); }

RoundtripReport verify_roundtrip(const FiniteEffectAlgebra& e, const TripleRep& t) {
  if (!t.back_maps) throw InputError("verify_roundtrip needs a triple with back-maps");
  RoundtripReport report;
  auto fail = [&](std::string why, std::vector<ElementId> witness) {
    report.ok = false;
    report.failure = std::move(why);
    report.witness = std::move(witness);
    return report;
  };

  try {
    report.tea.emplace(reconstruct_tea(t));
  } catch (const ConsistencyError& err) {
    return fail(std::string("reconstruction failed: ") + err.what(), {});
  } catch (const AxiomError& err) {
    return fail(std::string("reconstruction failed: ") + err.what(), {});
  }
  const TeaAlgebra& tea = *report.tea;
  const auto sharp_local = inverse_map(t.back_maps->sharp_to_source, e.order());
  const auto meager_local = inverse_map(t.back_maps->meager_to_source, e.order());
  const SharpBounds bounds = sharp_bounds(e);

  const std::size_t n = e.order();
  report.phi.assign(n, kUndefined);
  std::vector<bool> hit(tea.carrier.size(), false);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const ElementId x = id(xi);
    const auto below = bounds.tilde(x);
    if (!below) return fail("x has no greatest sharp element below it", {x});
    const ElementId rest = *e.ominus(x, *below);
    const ElementId s = sharp_local[*below];
    const ElementId m = meager_local[rest];
    if (s == kUndefined || m == kUndefined) return fail("decomposition of x leaves the triple carriers", {x});
    const auto image = tea.index_of(s, m);
    if (!image) return fail("phi(x) is not in the Tea carrier", {x});
    if (hit[*image]) return fail("phi is not injective", {x});
    hit[*image] = true;
    report.phi[xi] = *image;
  }
  if (tea.carrier.size() != n) {
    return fail("phi is not surjective: Tea has " + std::to_string(tea.carrier.size()) + " elements, E has " +
                    std::to_string(n),
                {});
  }
  if (report.phi[e.zero()] != tea.algebra.zero()) return fail("phi(0) is not (0,0)", {e.zero()});
  if (report.phi[e.one()] != tea.algebra.one()) return fail("phi(1) is not (1,0)", {e.one()});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto lhs = e.sum(id(x), id(y));
      const auto rhs = tea.algebra.sum(report.phi[x], report.phi[y]);
      if (lhs.has_value() != rhs.has_value()) {
        return fail(lhs ? "x+y defined in E but phi(x)+phi(y) undefined in Tea"
                        : "phi(x)+phi(y) defined in Tea but x+y undefined in E",
                    {id(x), id(y)});
      }
      if (lhs && report.phi[*lhs] != *rhs) return fail("phi(x+y) differs from phi(x)+phi(y)", {id(x), id(y)});
    }
  }
  report.ok = true;
  return report;
}

Verdict check_triple_isomorphism(const TripleRep& a, const TripleRep& b, const std::vector<ElementId>& sharp_map,
                                 const std::vector<ElementId>& meager_map) {
  Verdict v;
  if (!is_isomorphism(a.sharp_algebra, b.sharp_algebra, sharp_map)) {
    v.violations.push_back({"sharp-isomorphism", {}, "sharp map is not an isomorphism"});
  }
  if (!is_isomorphism(a.meager_algebra, b.meager_algebra, meager_map)) {
    v.violations.push_back({"meager-isomorphism", {}, "meager map is not an isomorphism"});
  }
  if (!v.ok()) return v;
  for (std::size_t s = 0; s < a.h.size(); ++s) {
    for (std::size_t x = 0; x < a.meager_algebra.order(); ++x) {
      if (a.h[s].test(x) != b.h[sharp_map[s]].test(meager_map[x])) {
        v.violations.push_back({"h-commutes", {id(s), id(x)}, "membership in h differs"});
        return v;
      }
    }
  }
  return v;
}

}  // namespace efalg
