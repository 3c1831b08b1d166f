#include "efalg/suite.hpp"

#include <iomanip>
#include <sstream>

#include "efalg/catalog.hpp"
#include "efalg/iso.hpp"
#include "efalg/parallel.hpp"
#include "efalg/structure.hpp"
#include "efalg/triple.hpp"

namespace efalg {

namespace {

struct AnchorSpec {
  const char* anchor;
  const char* statement;
};

constexpr AnchorSpec kAnchors[] = {
    {"report", "Sh ^ Mea = {0}, HMea <= Mea, C <= Sh, blocks contain 1 and are internally compatible"},
    {"principal-sharp", "central => principal => sharp"},
    {"center-boolean", "C(E) is a sub-effect algebra forming a Boolean algebra"},
    {"down-sets", "Mea and HMea are down-sets and generalized effect algebras"},
    {"ordinffin", "k*y in HMea for k <= ord(y)/2"},
    {"archim", "E, Mea(E), HMea(E) Archimedean together"},
    {"gejzapulm", "central c: c^(x+y) = (c^x)+(c^y), x^(c+d) = (x^c)+(x^d)"},
    {"gejzasum(i)", "orthoalgebra => homogeneous"},
    {"gejzasum(ii)", "lattice => homogeneous"},
    {"gejzasum(iii)", "RDP <=> homogeneous and compatible"},
    {"gejzasum(iv)", "blocks are sub-effect algebras with RDP, maximal internally compatible"},
    {"gejzasum(v)", "compatible pairs lie in a block; blocks cover E"},
    {"gejzasum(vi)", "Sh(E) is a sub-effect algebra"},
    {"gejzasum(vii)", "C(B) = Sh(E) ^ B"},
    {"gejzasum(viii)", "[0,x] ^ [0,x'] inside the block of x"},
    {"xshom", "u <= v1+v2 <= u', v1 sharp => u <= v2, u ^ v1 = 0"},
    {"modyjem", "three characterisations of sharpness agree"},
    {"soucethat", "y <= w sharp => k*y <= w"},
    {"hatrozdilu", "hat(x - x~) = hat(hat x - x) = hat x - x~"},
    {"suplem", "hat x - x = x' - (hat x)' = x' - (x')~ and dual"},
    {"dusuplem", "y <= hat x - x iff y <= x' and hat(x+y) = hat x; dual"},
    {"xssuplem", "interval intersection identities"},
    {"exssuplem", "sum of parts under x' and x lies under x - x~"},
    {"jmpy2", "hat x - x meager; x+y sharp => hat x = x+y"},
    {"jpy2", "x = x~ + (x - x~) is the unique sharp+meager decomposition"},
    {"cduya", "maximal family under x' sums to meager x"},
    {"corcduya", "x = x~ + maximal family sum; [x~,x], [x,hat x] inside blocks"},
    {"duscduya", "[0,x] inside blocks for meager x; Mea(B) <= Mea(E)"},
    {"ocmdcduya", "[0,x] is an MV-effect algebra for meager x"},
    {"blockua", "sigma(B) = Theta(B) = B"},
    {"dusminimax", "Mea(E) is a meet semilattice"},
    {"meetmodjen", "x ^_B y = 0 => hat x ^ hat y = 0"},
    {"blocksar", "every block is a lattice"},
    {"archimde", "qualifying algebras are Archimedean"},
    {"ycoveredhea", "every block is a Heyting effect algebra with x* = (hat x)'"},
    {"modjen", "meets and joins of meager elements in a block"},
    {"modchov", "compatibility of meager elements, three ways"},
    {"m1", "triple hat agrees with E"},
    {"m2", "triple projection agrees with the meet in E"},
    {"m3", "triple R(x) = hat x - x"},
    {"m4", "triple S agrees with the top of the candidate set in E"},
    {"pommeag", "x+y from S and the meager remainders"},
    {"tripletheor", "phi: E -> Tea(E) is an isomorphism"},
    {"triple-purity", "reconstruction ignores back-maps"},
    {"triple-idempotence", "triple of Tea(E) is isomorphic to the triple of E"},
};

constexpr std::size_t kAnchorCount = std::size(kAnchors);

std::size_t anchor_index(std::string_view name) {
  for (std::size_t i = 0; i < kAnchorCount; ++i) {
    if (name == kAnchors[i].anchor) return i;
  }
  throw ConsistencyError("unknown suite anchor " + std::string(name));
}

struct Tally {
  bool applied = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct AlgebraResult {
  std::vector<Tally> tallies;
  bool qualifying = false;
  std::size_t s_without_top = 0;
  std::vector<std::string> s_without_top_examples;
};

class Recorder {
 public:
  explicit Recorder(const NamedAlgebra& a) : a_(a) { result_.tallies.resize(kAnchorCount); }

  class Scope {
   public:
    Scope(Recorder& r, Tally& t) : r_(r), t_(t) { t_.applied = true; }

    template <typename Witness>
    void check(bool ok, Witness&& witness) {
      ++t_.checks;
      if (ok) return;
      if (t_.failures++ == 0) t_.first_failure = r_.a_.name + ": " + witness();
    }

   private:
    Recorder& r_;
    Tally& t_;
  };

  Scope operator[](std::string_view anchor) { return Scope(*this, result_.tallies[anchor_index(anchor)]); }

  AlgebraResult& result() { return result_; }

 private:
  const NamedAlgebra& a_;
  AlgebraResult result_;
};

ElementId id(std::size_t i) { return static_cast<ElementId>(i); }

bool subset(const ElementSet& a, const ElementSet& b) { return a.is_subset_of(b); }

class AlgebraChecks {
 public:
  AlgebraChecks(const NamedAlgebra& a, Recorder& rec)
      : a_(a), e_(a.algebra), rec_(rec), r_(analyze(e_)), order_(e_), n_(e_.order()) {
    for (std::size_t x = 0; x < n_; ++x) all_.push_back(id(x));
  }

  void run() {
    structural();
    archimedean();
    central();
    gejzasum();
    if (r_.homogeneous) homogeneous();
    if (sharp_subalgebra()) sharp_lemmas();
    if (qualifying()) {
      rec_.result().qualifying = true;
      qualifying_lemmas();
      triple_lemmas();
    }
  }

 private:
  std::string nm(ElementId x) const { return e_.name(x); }
  std::string w(std::initializer_list<std::pair<const char*, ElementId>> xs) const {
    std::string out;
    for (const auto& [label, x] : xs) {
      if (!out.empty()) out += " ";
      out += std::string(label) + "=" + nm(x);
    }
    return out;
  }
  std::optional<ElementId> meet(ElementId x, ElementId y) const { return order_.meet(x, y); }
  std::optional<ElementId> join(ElementId x, ElementId y) const { return order_.join(x, y); }
  ElementId sup(ElementId x) const { return e_.orthosupplement(x); }
  std::optional<ElementId> hat(ElementId x) const { return r_.bounds.hat(x); }
  std::optional<ElementId> tilde(ElementId x) const { return r_.bounds.tilde(x); }
  ElementSet meet_set(ElementId a, ElementId b) const { return e_.down_set(a) & e_.down_set(b); }
  bool qualifying() const { return qualifies_for_triple(r_); }
  bool sharp_subalgebra() const { return is_sub_effect_algebra(e_, r_.sharp); }

  void structural() {
    auto s = rec_["report"];
    s.check((r_.sharp & r_.meager) == make_set(n_, std::vector<ElementId>{e_.zero()}),
            [&] { return std::string("Sh ^ Mea differs from {0}"); });
    s.check(subset(r_.hypermeager, r_.meager), [&] { return std::string("HMea not inside Mea"); });
    s.check(subset(r_.center, r_.sharp), [&] { return std::string("C(E) not inside Sh(E)"); });
    for (const auto& b : r_.blocks) {
      s.check(b.test(e_.one()) && is_internally_compatible(e_, b), [&] { return std::string("bad block"); });
    }

    auto p = rec_["principal-sharp"];
    p.check(subset(r_.center, r_.principal), [&] { return std::string("central element not principal"); });
    p.check(subset(r_.principal, r_.sharp), [&] { return std::string("principal element not sharp"); });

    auto c = rec_["center-boolean"];
    const bool sub = is_sub_effect_algebra(e_, r_.center);
    c.check(sub, [&] { return std::string("C(E) is not a sub-effect algebra"); });
    if (sub) {
      const auto ce = sub_effect_algebra(e_, r_.center);
      c.check(check_orthoalgebra(ce.algebra).holds && check_lattice(ce.algebra).holds && check_rdp(ce.algebra).holds,
              [&] { return std::string("C(E) is not a Boolean algebra"); });
    }

    auto d = rec_["down-sets"];
    for (const ElementSet* set : {&r_.meager, &r_.hypermeager}) {
      for (ElementId x : members(*set)) {
        d.check(subset(e_.down_set(x), *set), [&] { return w({{"x", x}}) + " has a non-member below"; });
      }
      const auto [table, to_parent] = restrict_table(e_, *set);
      ElementId zero = 0;
      for (std::size_t i = 0; i < to_parent.size(); ++i) {
        if (to_parent[i] == e_.zero()) zero = id(i);
      }
      d.check(verify_generalized(table, zero).ok(), [&] { return std::string("restriction fails GE axioms"); });
    }

    auto o = rec_["ordinffin"];
    for (ElementId y : all_) {
      if (y == e_.zero()) continue;
      const std::size_t n = *r_.ord[y];
      for (std::size_t k = 1; 2 * k <= n; ++k) {
        const auto ky = e_.multiple(y, k);
        o.check(ky && r_.hypermeager.test(*ky), [&] { return w({{"y", y}}) + " k=" + std::to_string(k); });
      }
    }
  }

  void archimedean() {
    auto s = rec_["archim"];
    const bool whole = r_.archimedean.holds;
    const bool mea = check_archimedean(sub_generalized(e_, r_.meager).algebra).holds;
    const bool hmea = check_archimedean(sub_generalized(e_, r_.hypermeager).algebra).holds;
    s.check(whole == mea && mea == hmea, [&] { return std::string("Archimedean flags disagree"); });
  }

  void central() {
    auto s = rec_["gejzapulm"];
    for (ElementId c : members(r_.center)) {
      for (ElementId x : all_) {
        for (ElementId y : all_) {
          const auto xy = e_.sum(x, y);
          if (!xy) continue;
          const auto lhs = meet(c, *xy);
          const auto cx = meet(c, x);
          const auto cy = meet(c, y);
          const auto rhs = cx && cy ? e_.sum(*cx, *cy) : std::nullopt;
          s.check(lhs && rhs && *lhs == *rhs, [&] { return w({{"c", c}, {"x", x}, {"y", y}}); });
        }
      }
      for (ElementId d : members(r_.center)) {
        const auto cd = e_.sum(c, d);
        if (!cd) continue;
        for (ElementId x : all_) {
          const auto lhs = meet(x, *cd);
          const auto xc = meet(x, c);
          const auto xd = meet(x, d);
          const auto rhs = xc && xd ? e_.sum(*xc, *xd) : std::nullopt;
          s.check(lhs && rhs && *lhs == *rhs, [&] { return w({{"c", c}, {"d", d}, {"x", x}}); });
        }
      }
    }
  }

  void gejzasum() {
    if (r_.orthoalgebra) {
      rec_["gejzasum(i)"].check(r_.homogeneous.holds, [&] { return std::string("orthoalgebra not homogeneous"); });
    }
    if (r_.lattice) {
      rec_["gejzasum(ii)"].check(r_.homogeneous.holds, [&] { return std::string("lattice not homogeneous"); });
    }
    const bool compatible = is_internally_compatible(e_, e_.all());
    rec_["gejzasum(iii)"].check(r_.rdp.holds == (r_.homogeneous.holds && compatible),
                                [&] { return std::string("RDP differs from homogeneous and compatible"); });
    if (!r_.homogeneous) return;

    auto iv = rec_["gejzasum(iv)"];
    for (const auto& b : r_.blocks) {
      const bool sub = is_sub_effect_algebra(e_, b);
      iv.check(sub && has_rdp(e_, b), [&] { return std::string("block is not a sub-effect algebra with RDP"); });
      for (ElementId x : all_) {
        if (b.test(x)) continue;
        ElementSet bigger = b;
        bigger.set(x);
        iv.check(!is_internally_compatible(e_, bigger), [&] { return "block extends by " + w({{"x", x}}); });
      }
    }

    auto v = rec_["gejzasum(v)"];
    ElementSet cover(n_);
    for (const auto& b : r_.blocks) cover |= b;
    v.check(cover.all(), [&] { return std::string("blocks do not cover E"); });
    for (ElementId x : all_) {
      for (ElementId y : all_) {
        if (!are_compatible(e_, x, y)) continue;
        bool inside = false;
        for (const auto& b : r_.blocks) inside = inside || (b.test(x) && b.test(y));
        v.check(inside, [&] { return w({{"x", x}, {"y", y}}) + " in no common block"; });
      }
    }

    rec_["gejzasum(vi)"].check(sharp_subalgebra(), [&] { return std::string("Sh(E) not a sub-effect algebra"); });

    auto vii = rec_["gejzasum(vii)"];
    for (const auto& b : r_.blocks) {
      if (!is_sub_effect_algebra(e_, b)) continue;
      const auto sub = sub_effect_algebra(e_, b);
      ElementSet center(n_);
      for (ElementId x : members(central_elements(sub.algebra))) center.set(sub.to_parent[x]);
      vii.check(center == (r_.sharp & b), [&] { return std::string("C(B) differs from Sh(E) ^ B"); });
    }

    auto viii = rec_["gejzasum(viii)"];
    for (const auto& b : r_.blocks) {
      for (ElementId x : members(b)) {
        viii.check(subset(meet_set(x, sup(x)), b), [&] { return w({{"x", x}}); });
      }
    }
  }

  void homogeneous() {
    auto xs = rec_["xshom"];
    for (ElementId v1 : members(r_.sharp)) {
      for (ElementId v2 : all_) {
        const auto s = e_.sum(v1, v2);
        if (!s) continue;
        for (ElementId u : all_) {
          if (!e_.leq(u, *s) || !e_.leq(*s, sup(u))) continue;
          xs.check(e_.leq(u, v2) && meet(u, v1) == e_.zero(), [&] { return w({{"u", u}, {"v1", v1}, {"v2", v2}}); });
        }
      }
    }

    auto mj = rec_["modyjem"];
    for (ElementId v : all_) {
      const bool c1 = r_.sharp.test(v);
      bool c2 = true;
      bool c3 = true;
      for (ElementId wv : members(e_.down_set(v))) {
        const ElementId z = *e_.ominus(v, wv);
        const ElementSet both = meet_set(wv, sup(wv));
        for (ElementId y : members(both)) c2 = c2 && e_.leq(y, z);
        c3 = c3 && both == meet_set(wv, z);
      }
      mj.check(c1 == c2 && c2 == c3, [&] { return w({{"v", v}}); });
    }

    auto st = rec_["soucethat"];
    for (ElementId wv : members(r_.sharp)) {
      for (ElementId y : members(e_.down_set(wv))) {
        if (y == e_.zero()) continue;
        for (std::size_t k = 1;; ++k) {
          const auto ky = e_.multiple(y, k);
          if (!ky) break;
          st.check(e_.leq(*ky, wv), [&] { return w({{"y", y}, {"w", wv}}) + " k=" + std::to_string(k); });
        }
      }
    }

    auto xss = rec_["xssuplem"];
    for (ElementId x : all_) {
      const ElementSet base = meet_set(x, sup(x));
      const auto lo = tilde(x);
      const auto hi = hat(x);
      if (lo) {
        const ElementId d = *e_.ominus(x, *lo);
        xss.check(base == meet_set(d, sup(x)) && base == meet_set(d, sup(d)), [&] { return "(i) " + w({{"x", x}}); });
      }
      if (hi) {
        const ElementId d = *e_.ominus(*hi, x);
        xss.check(base == meet_set(x, d) && base == meet_set(sup(d), d), [&] { return "(ii) " + w({{"x", x}}); });
      }
      if (lo && hi) {
        xss.check(base == meet_set(*e_.ominus(x, *lo), *e_.ominus(*hi, x)), [&] { return "(iii) " + w({{"x", x}}); });
      }
    }

    auto ex = rec_["exssuplem"];
    for (ElementId x : all_) {
      const auto lo = tilde(x);
      if (!lo) continue;
      const ElementSet sums = sums_below(e_, sup(x)) & e_.down_set(x);
      const ElementId rest = *e_.ominus(x, *lo);
      for (ElementId s : members(sums)) {
        ex.check(e_.leq(s, rest) && tilde(*e_.ominus(x, s)) == lo, [&] { return w({{"x", x}, {"sum", s}}); });
      }
    }

    auto cd = rec_["cduya"];
    for (ElementId x : members(r_.meager)) {
      for (ElementId s : members(sums_below(e_, sup(x)) & e_.down_set(x))) {
        if (!maximal_family_sum(x, s)) continue;
        cd.check(s == x, [&] { return w({{"x", x}, {"sum", s}}); });
      }
    }
  }

  // No nonzero t <= x' fits under x - s.
  bool maximal_family_sum(ElementId x, ElementId s) const {
    const ElementSet room = meet_set(sup(x), *e_.ominus(x, s));
    return room.count() == 1;
  }

  void sharp_lemmas() {
    auto hr = rec_["hatrozdilu"];
    auto sp = rec_["suplem"];
    auto ds = rec_["dusuplem"];
    auto jm = rec_["jmpy2"];
    auto jp = rec_["jpy2"];
    for (ElementId x : all_) {
      const auto lo = tilde(x);
      const auto hi = hat(x);
      if (lo && hi) {
        const ElementId target = *e_.ominus(*hi, *lo);
        hr.check(hat(*e_.ominus(x, *lo)) == target && hat(*e_.ominus(*hi, x)) == target, [&] { return w({{"x", x}}); });
      }
      if (hi) {
        const auto lo_c = tilde(sup(x));
        const ElementId d = *e_.ominus(*hi, x);
        sp.check(lo_c && e_.ominus(sup(x), sup(*hi)) == d && e_.ominus(sup(x), *lo_c) == d,
                 [&] { return "(i) " + w({{"x", x}}); });
        for (ElementId y : all_) {
          const bool lhs = e_.leq(y, d);
          const auto xy = e_.sum(x, y);
          const bool rhs = xy && hat(*xy) == hi;
          ds.check(lhs == rhs, [&] { return "(i) " + w({{"x", x}, {"y", y}}); });
        }
      }
      if (lo) {
        const auto hi_c = hat(sup(x));
        const ElementId d = *e_.ominus(x, *lo);
        sp.check(hi_c && e_.ominus(sup(*lo), sup(x)) == d && e_.ominus(*hi_c, sup(x)) == d,
                 [&] { return "(ii) " + w({{"x", x}}); });
        for (ElementId y : all_) {
          const bool lhs = e_.leq(y, d);
          const bool rhs = e_.leq(y, x) && tilde(*e_.ominus(x, y)) == lo;
          ds.check(lhs == rhs, [&] { return "(ii) " + w({{"x", x}, {"y", y}}); });
        }

        const ElementId m = *e_.ominus(x, *lo);
        std::size_t decompositions = 0;
        for (ElementId s : members(r_.sharp)) {
          const auto rest = e_.ominus(x, s);
          if (rest && r_.meager.test(*rest)) ++decompositions;
        }
        bool ok = r_.meager.test(m) && decompositions == 1 && meet(*lo, m) == e_.zero();
        if (r_.lattice) ok = ok && join(*lo, m) == x;
        jp.check(ok, [&] { return w({{"x", x}}); });
      }
      if (r_.meager.test(x) && hi) {
        jm.check(r_.meager.test(*e_.ominus(*hi, x)), [&] { return "(i) " + w({{"x", x}}); });
        for (ElementId y : members(r_.meager)) {
          const auto z = e_.sum(x, y);
          if (z && r_.sharp.test(*z)) jm.check(*hi == *z, [&] { return "(ii) " + w({{"x", x}, {"y", y}}); });
        }
      }
    }
  }

  void qualifying_lemmas() {
    rec_["archimde"].check(r_.archimedean.holds, [&] { return std::string("not Archimedean"); });

    auto cc = rec_["corcduya"];
    for (ElementId x : all_) {
      for (ElementId s : members(sums_below(e_, sup(x)) & e_.down_set(x))) {
        if (!maximal_family_sum(x, s)) continue;
        cc.check(e_.sum(*tilde(x), s) == x, [&] { return w({{"x", x}, {"sum", s}}); });
      }
    }
    for (const auto& b : r_.blocks) {
      for (ElementId x : members(b)) {
        const ElementSet lower = e_.up_set(*tilde(x)) & e_.down_set(x);
        const ElementSet upper = e_.up_set(x) & e_.down_set(*hat(x));
        cc.check(subset(lower, b) && subset(upper, b), [&] { return "block interval " + w({{"x", x}}); });
      }
    }

    auto du = rec_["duscduya"];
    for (const auto& b : r_.blocks) {
      for (ElementId x : members(b & r_.meager)) {
        du.check(subset(e_.down_set(x), b), [&] { return w({{"x", x}}); });
      }
      const auto sub = sub_effect_algebra(e_, b);
      ElementSet mea_b(n_);
      for (ElementId x : members(meager_elements(sub.algebra))) mea_b.set(sub.to_parent[x]);
      du.check(subset(mea_b, r_.meager), [&] { return std::string("Mea(B) not inside Mea(E)"); });
    }

    auto oc = rec_["ocmdcduya"];
    for (ElementId x : members(r_.meager)) {
      if (x == e_.zero()) continue;
      const auto interval = interval_algebra(e_, x);
      oc.check(check_lattice(interval.algebra).holds && check_rdp(interval.algebra).holds,
               [&] { return w({{"x", x}}); });
    }

    auto bu = rec_["blockua"];
    for (const auto& b : r_.blocks) {
      bu.check(theta(e_, b) == b && sigma_closure(e_, b) == b, [&] { return std::string("block not closed"); });
    }

    auto dm = rec_["dusminimax"];
    for (ElementId x : members(r_.meager)) {
      for (ElementId y : members(r_.meager)) {
        dm.check(meet_within(e_, r_.meager, x, y).has_value(), [&] { return w({{"x", x}, {"y", y}}); });
      }
    }

    auto mm = rec_["meetmodjen"];
    auto bs = rec_["blocksar"];
    auto hy = rec_["ycoveredhea"];
    for (const auto& b : r_.blocks) {
      for (ElementId x : members(b)) {
        for (ElementId y : members(b)) {
          if (meet_within(e_, b, x, y) != e_.zero()) continue;
          mm.check(meet(*hat(x), *hat(y)) == e_.zero(), [&] { return w({{"x", x}, {"y", y}}); });
        }
      }
      bs.check(check_lattice(sub_effect_algebra(e_, b).algebra).holds, [&] { return std::string("block not a lattice"); });
      const Verdict v = heyting_block_check(e_, b);
      hy.check(v.ok(), [&] { return v.to_string(); });
    }

    modjen();
    modchov();
  }

  void modjen() {
    auto mj = rec_["modjen"];
    for (const auto& b : r_.blocks) {
      const ElementSet mea_b = b & r_.meager;
      for (ElementId y : members(mea_b)) {
        for (ElementId v : members(b)) {
          const auto m = meet(v, y);
          mj.check(m && m == meet_within(e_, b, v, y), [&] { return "(i) " + w({{"v", v}, {"y", y}}); });
        }
        for (ElementId x : members(mea_b)) {
          if (hat(x) != hat(y)) continue;
          const ElementId h = *hat(x);
          const auto m = meet(x, y);
          const auto rest = m ? e_.ominus(h, *m) : std::nullopt;
          mj.check(rest && r_.meager.test(*rest), [&] { return "(ii) " + w({{"x", x}, {"y", y}}); });
          const auto j_mea = join_within(e_, r_.meager, x, y);
          const auto j_b = join_within(e_, b, x, y);
          const auto j_int = join_within(e_, e_.down_set(h), x, y);
          mj.check(j_mea && j_mea == j_b && j_b == j_int, [&] { return "(iii) " + w({{"x", x}, {"y", y}}); });
          mj.check(m && hat(*m) == h, [&] { return "(iv) " + w({{"x", x}, {"y", y}}); });
        }
      }
      for (ElementId x : members(mea_b)) {
        for (ElementId v : members(b)) {
          if (!e_.leq(x, v)) continue;
          const auto [vs, vm] = decompose(e_, v);
          const auto a = meet(x, vs);
          const auto c = meet(x, vm);
          mj.check(a && c && e_.sum(*a, *c) == x, [&] { return "(v) " + w({{"x", x}, {"v", v}}); });
        }
      }
    }
  }

  void modchov() {
    auto mc = rec_["modchov"];
    const auto mea = sub_generalized(e_, r_.meager);
    for (std::size_t li = 0; li < mea.to_parent.size(); ++li) {
      for (std::size_t lj = 0; lj < mea.to_parent.size(); ++lj) {
        const ElementId x = mea.to_parent[li];
        const ElementId y = mea.to_parent[lj];
        const bool c1 = are_compatible(e_, x, y);
        const bool c2 = are_compatible(mea.algebra, id(li), id(lj));
        const auto j = join_within(e_, r_.meager, x, y);
        const auto m = meet(x, y);
        const bool c3 = j && m && e_.ominus(*j, y) == e_.ominus(x, *m);
        mc.check(c1 == c2 && c2 == c3, [&] { return w({{"x", x}, {"y", y}}); });
      }
    }
  }

  void triple_lemmas() {
    const TripleRep t = extract_triple(e_, r_);
    const auto& back = *t.back_maps;
    const auto& sh_src = back.sharp_to_source;
    const auto& mea_src = back.meager_to_source;
    std::vector<ElementId> sh_local(n_, kUndefined);
    std::vector<ElementId> mea_local(n_, kUndefined);
    for (std::size_t i = 0; i < sh_src.size(); ++i) sh_local[sh_src[i]] = id(i);
    for (std::size_t i = 0; i < mea_src.size(); ++i) mea_local[mea_src[i]] = id(i);

    const TripleMaps maps(t);
    const std::size_t nm = mea_src.size();
    const std::size_t ns = sh_src.size();

    auto m1 = rec_["m1"];
    auto m3 = rec_["m3"];
    for (std::size_t lx = 0; lx < nm; ++lx) {
      const ElementId x = mea_src[lx];
      m1.check(sh_src[maps.widehat(id(lx))] == hat(x), [&] { return w({{"x", x}}); });
      m3.check(e_.ominus(*hat(x), x) == mea_src[maps.r_map(id(lx))], [&] { return w({{"x", x}}); });
    }

    auto m2 = rec_["m2"];
    for (std::size_t ls = 0; ls < ns; ++ls) {
      const ElementId s = sh_src[ls];
      for (std::size_t lx = 0; lx < nm; ++lx) {
        const ElementId x = mea_src[lx];
        const ElementSet parts = meet_set(x, s) & r_.meager;
        const auto z = supremum_within(e_, r_.meager, parts);
        m2.check(z.has_value(), [&] { return "(i) join missing " + w({{"s", s}, {"x", x}}); });
        const auto m = meet(x, s);
        if (m) {
          m2.check(r_.meager.test(*m) && z == m, [&] { return "(i) " + w({{"s", s}, {"x", x}}); });
        }
        if (are_compatible(e_, x, s)) {
          m2.check(m && z == m, [&] { return "(ii) " + w({{"s", s}, {"x", x}}); });
        }
        const auto p = maps.pi(id(ls), id(lx));
        if (m) {
          m2.check(p && mea_src[*p] == *m, [&] { return "projection " + w({{"s", s}, {"x", x}}); });
        }
        if (p) {
          m2.check(m && mea_src[*p] == *m, [&] { return "projection defined without meet " + w({{"s", s}, {"x", x}}); });
        }
      }
    }

    auto m4 = rec_["m4"];
    auto pm = rec_["pommeag"];
    for (std::size_t lx = 0; lx < nm; ++lx) {
      for (std::size_t ly = 0; ly < nm; ++ly) {
        const ElementId x = mea_src[lx];
        const ElementId y = mea_src[ly];
        ElementSet direct(ns);
        for (std::size_t ls = 0; ls < ns; ++ls) {
          const ElementId z = sh_src[ls];
          const auto zx = meet(z, x);
          const auto zy = meet(z, y);
          if (zx && zy && e_.sum(*zx, *zy) == z) direct.set(ls);
        }
        const ElementSet& via_triple = maps.s_candidates(id(lx), id(ly));
        const auto top = maximum_of(t.sharp_algebra, direct);
        const auto s = maps.s_map(id(lx), id(ly));
        m4.check(direct == via_triple && top == s, [&] { return w({{"x", x}, {"y", y}}); });
        if (!top) {
          auto& res = rec_.result();
          if (res.s_without_top++ < 3) res.s_without_top_examples.push_back(a_.name + ": " + w({{"x", x}, {"y", y}}));
        }

        const auto xy = e_.sum(x, y);
        std::optional<ElementId> rhs;
        if (s) {
          const auto px = maps.pi(*s, id(lx));
          const auto py = maps.pi(*s, id(ly));
          if (px && py) {
            const auto dx = t.meager_algebra.ominus(id(lx), *px);
            const auto dy = t.meager_algebra.ominus(id(ly), *py);
            const auto zm = dx && dy ? t.meager_algebra.sum(*dx, *dy) : std::nullopt;
            if (zm && t.h[t.sharp_algebra.orthosupplement(*s)].test(*zm)) rhs = e_.sum(sh_src[*s], mea_src[*zm]);
          }
        }
        pm.check(xy.has_value() == rhs.has_value() && (!xy || *xy == *rhs), [&] { return w({{"x", x}, {"y", y}}); });
      }
    }

    const RoundtripReport rt = verify_roundtrip(e_, t);
    rec_["tripletheor"].check(rt.ok, [&] { return rt.failure; });
    if (!rt.ok) return;

    const TeaAlgebra pure = reconstruct_tea(strip_back_maps(t));
    rec_["triple-purity"].check(pure.carrier == rt.tea->carrier && pure.algebra.table() == rt.tea->algebra.table(),
                                [&] { return std::string("tables differ"); });

    auto id_check = rec_["triple-idempotence"];
    const FiniteEffectAlgebra& tea = rt.tea->algebra;
    const TripleRep t2 = extract_triple(tea);
    std::vector<ElementId> tea_sh_local(tea.order(), kUndefined);
    std::vector<ElementId> tea_mea_local(tea.order(), kUndefined);
    for (std::size_t i = 0; i < t2.back_maps->sharp_to_source.size(); ++i) {
      tea_sh_local[t2.back_maps->sharp_to_source[i]] = id(i);
    }
    for (std::size_t i = 0; i < t2.back_maps->meager_to_source.size(); ++i) {
      tea_mea_local[t2.back_maps->meager_to_source[i]] = id(i);
    }
    std::vector<ElementId> sharp_map(ns);
    std::vector<ElementId> meager_map(nm);
    for (std::size_t i = 0; i < ns; ++i) sharp_map[i] = tea_sh_local[rt.phi[sh_src[i]]];
    for (std::size_t i = 0; i < nm; ++i) meager_map[i] = tea_mea_local[rt.phi[mea_src[i]]];
    const bool sized = t2.sharp_algebra.order() == ns && t2.meager_algebra.order() == nm;
    const Verdict v = sized ? check_triple_isomorphism(t, t2, sharp_map, meager_map) : Verdict{{{"size", {}, ""}}};
    id_check.check(v.ok(), [&] { return v.to_string(); });
  }

  const NamedAlgebra& a_;
  const FiniteEffectAlgebra& e_;
  Recorder& rec_;
  const StructureReport r_;
  const OrderTables order_;
  const std::size_t n_;
  std::vector<ElementId> all_;
};

AlgebraResult check_algebra(const NamedAlgebra& a) {
  Recorder rec(a);
  AlgebraChecks(a, rec).run();
  return std::move(rec.result());
}

}  // namespace

std::vector<NamedAlgebra> suite_universe(std::size_t max_order, std::size_t jobs) {
  std::vector<NamedAlgebra> out;
  for (auto& entry : named_catalog()) out.push_back({entry.name, std::move(entry.algebra)});
  for (std::size_t n = 2; n <= max_order; ++n) {
    auto level = enumerate_order(n, jobs, std::max(max_order, kDefaultEnumerationBound));
    for (std::size_t i = 0; i < level.size(); ++i) {
      out.push_back({"enum" + std::to_string(n) + "_" + std::to_string(i), std::move(level[i])});
    }
  }
  return out;
}

bool SuiteReport::ok() const {
  for (const auto& a : anchors) {
    if (a.failures != 0) return false;
  }
  return true;
}

SuiteReport run_suite(const std::vector<NamedAlgebra>& universe, std::size_t jobs) {
  auto results = parallel_map<AlgebraResult>(universe.size(), jobs,
                                             [&](std::size_t i) { return check_algebra(universe[i]); });
  SuiteReport report;
  report.algebras = universe.size();
  for (const auto& spec : kAnchors) {
    AnchorResult a;
    a.anchor = spec.anchor;
    a.statement = spec.statement;
    report.anchors.push_back(std::move(a));
  }
  for (const auto& res : results) {
    if (res.qualifying) ++report.qualifying;
    report.s_without_top += res.s_without_top;
    for (const auto& ex : res.s_without_top_examples) {
      if (report.s_without_top_examples.size() < 5) report.s_without_top_examples.push_back(ex);
    }
    for (std::size_t k = 0; k < kAnchorCount; ++k) {
      const Tally& t = res.tallies[k];
      AnchorResult& a = report.anchors[k];
      if (t.applied) ++a.algebras;
      a.checks += t.checks;
      a.failures += t.failures;
      if (a.first_failure.empty() && !t.first_failure.empty()) a.first_failure = t.first_failure;
    }
  }
  return report;
}

std::string format_suite(const SuiteReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "anchor" << std::setw(6) << "result" << std::right << std::setw(10)
      << "algebras" << std::setw(10) << "checks" << std::setw(10) << "failures"
      << "  statement\n";
  for (const auto& a : report.anchors) {
    const char* verdict = a.failures != 0 ? "FAIL" : (a.checks == 0 ? "n/a" : "pass");
    out << std::left << std::setw(20) << a.anchor << std::setw(6) << verdict << std::right << std::setw(10)
        << a.algebras << std::setw(10) << a.checks << std::setw(10) << a.failures << "  " << a.statement << "\n";
    if (!a.first_failure.empty()) out << "    first failure: " << a.first_failure << "\n";
  }
  out << "algebras: " << report.algebras << ", qualifying for the triple: " << report.qualifying
      << ", meager pairs whose S-candidates lack a top: " << report.s_without_top << "\n";
  for (const auto& ex : report.s_without_top_examples) out << "    no top: " << ex << "\n";
  out << (report.ok() ? "suite: pass\n" : "suite: FAIL\n");
  return out.str();
}

}  // namespace efalg
