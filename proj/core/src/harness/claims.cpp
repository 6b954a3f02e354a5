#include "graded_lab/harness/claims.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "graded_lab/errors.hpp"

namespace graded_lab::harness {

namespace {

using S = ClaimScope;

std::vector<ClaimSpec> make_registry() {
  std::vector<ClaimSpec> r;
  auto add = [&](std::string id, std::string statement, ClaimScope scope, bool integer, std::string interpretation = {}) {
    r.push_back(ClaimSpec{std::move(id), std::move(statement), scope, integer, std::move(interpretation), std::nullopt});
  };
  auto example = [&](std::string id, std::string statement, Json instance) {
    r.push_back(ClaimSpec{std::move(id), std::move(statement), S::Example, false, {}, std::move(instance)});
  };
  add("lem1", "a graded primal submodule is graded weakly primal", S::Submodule, true);
  add("rem1.1", "0 is graded weakly prime to every graded submodule", S::Submodule, true);
  add("rem1.2", "a homogeneous element graded prime to N is graded weakly prime to N", S::Submodule, true);
  add("rem1.3", "every element not weakly prime to N lies in GW(N)", S::Submodule, true,
      "W(N) ranges over all of R, GW(N) over h(R)");
  example("exm1.1", "over Z, N = 12Z is weakly primal with GW(N) = Z and not primal",
          Json{{"zinstance", {{"m", 12}}}});
  example("exm1.2", "N = 8Z/24Z in Z/24Z is primal but not weakly primal; 2, 4 in GW(N) and 6 is weakly prime to N",
          Json{{"zinstance", {{"n", 24}, {"d", 8}}}});
  example("exm1.3", "N = 0 in Z_12 has GW(N) empty, is weakly primal, and is not primal since 3, 4 lie in G(N)",
          Json{{"zinstance", {{"n", 12}, {"d", 12}}}});
  example("exm1.4", "for N = 8Z/32Z in Z/32Z, 4 is not prime to N but is graded weakly prime to N",
          Json{{"zinstance", {{"n", 32}, {"d", 8}}}});
  add("lem2.1", "(N :_R M) is contained in GW(N)", S::Submodule, true,
      "homogeneous members of (N :_R M) are compared with GW(N) + {0}, since 0 is never in GW(N)");
  add("lem2.2", "gw((N :_R M)) is contained in GW(N)", S::Submodule, true);
  add("prop1", "N is P-weakly primal exactly when the colon description by P holds", S::Submodule, false,
      "P ranges over the graded ideals; N is P-weakly primal when GW(N) + {0} is an ideal equal to P");
  add("thm1", "over a cyclic module, N weakly primal makes (N :_R M) a weakly primal ideal with gw((N :_R M)) = GW(N)",
      S::Submodule, false);
  add("thm2", "if N is weakly primal then GW(N) + {0} is a graded weakly prime ideal", S::Submodule, true,
      "properness of the ideal is not part of the check");
  add("thm3", "N weakly primal with (N :_R M) in P and (N :_R M)N != 0 is primal", S::Submodule, false,
      "P is bound to the adjoint ideal GW(N) + {0}");
  add("thm4.1", "a graded weakly primary submodule is graded weakly primal", S::Submodule, true);
  add("thm4.2", "a graded weakly prime submodule is graded weakly primal", S::Submodule, true);
  add("rem2", "for a multiplication module and a graded ideal P containing (0 :_R M), (PM :_R M) = P", S::Instance,
      false);
  add("prop2", "for a multiplication module, PM is weakly primal when P is a weakly primal ideal containing (0 :_R M)",
      S::Instance, false);
  add("thm5", "a faithful multiplication module over a WP-ring is a WP-module", S::Instance, false,
      "products of at most max_factor_len ideals; both the any-ideal and the proper-ideals conventions are checked");
  add("prop3.1", "over a faithful module, a P-weakly primal N has (N :_R M) in P", S::Submodule, false);
  add("prop3.2", "over a faithful module, a 0-weakly primal N has M/N faithful", S::Submodule, false,
      "0-weakly primal means GW(N) is empty");
  add("thm6.1", "N weakly primal with GW(N) disjoint from S: a nonzero n/s in N_S has n in N", S::Submodule, false,
      "n ranges over h(M) and s over S");
  add("thm6.2", "N weakly primal with GW(N) disjoint from S: (N :_R L)_S = (N_S :_{R_S} L_S) for every graded L",
      S::Submodule, false);
  add("prop4", "a P-weakly primal submodule of M_S contracts to a (P contracted)-weakly primal submodule of M",
      S::Instance, false);
  add("thm7.1", "N P-weakly primal with P disjoint from S makes N_S a P_S-weakly primal submodule", S::Submodule,
      false);
  add("thm7.2", "N P-weakly primal with P disjoint from S has N = N_S contracted to M", S::Submodule, false);
  add("thm8",
      "for a proper graded weakly prime P disjoint from S, extension and contraction are inverse bijections between "
      "P-weakly primal submodules of M and P_S-weakly primal submodules of M_S",
      S::Instance, false, "the correspondence is taken to be N -> N_S with inverse N' -> N' contracted to M");
  return r;
}

std::string fmt(const Subset& s) {
  std::ostringstream o;
  o << '{';
  bool first = true;
  for (Elem e : s) {
    o << (first ? "" : ",") << e;
    first = false;
  }
  o << '}';
  return o.str();
}

Subset with_zero(Subset s, Elem zero) {
  s.insert(zero);
  return s;
}

/// Tracks cases of one (claim, instance) pair. The first refutation keeps its certificate.
class Tally {
 public:
  explicit Tally(ClaimResult& r) : r_(r) {}
  void unmet() { ++r_.cases; }
  void met() {
    ++r_.cases;
    ++r_.cases_met;
  }
  void refute(std::string detail, Json certificate) {
    ++r_.cases_refuted;
    if (r_.status == ClaimStatus::Refuted) return;
    r_.status = ClaimStatus::Refuted;
    r_.detail = std::move(detail);
    r_.certificate = std::move(certificate);
  }
  bool refuted() const { return r_.status == ClaimStatus::Refuted; }
  void finish(const std::string& confirmed_detail = {}) {
    if (r_.status == ClaimStatus::Refuted) {
      if (r_.cases_refuted > 1) r_.detail += " (" + std::to_string(r_.cases_refuted) + " cases refuted)";
      return;
    }
    if (r_.status == ClaimStatus::BudgetExceeded) return;
    if (r_.cases_met > 0) {
      r_.status = ClaimStatus::Confirmed;
      r_.detail = confirmed_detail.empty() ? std::to_string(r_.cases_met) + " of " + std::to_string(r_.cases) +
                                                 " cases meet the hypothesis; all hold"
                                           : confirmed_detail;
    } else {
      r_.status = ClaimStatus::HypothesisUnmet;
      if (r_.detail.empty()) r_.detail = "hypothesis unmet in all " + std::to_string(r_.cases) + " cases";
    }
  }

 private:
  ClaimResult& r_;
};

/// Adds facts showing that `a` (named `name`) is not closed: a sum or a multiple leaving it.
bool closure_failure(CertificateBuilder& cb, const GradedRing& R, const Subset& a, const std::string& name,
                     std::string* detail = nullptr) {
  for (Elem x : a) {
    for (Elem y : a) {
      if (a.contains(R.add(x, y))) continue;
      cb.fact("member", {{"x", x}, {"A", name}}, true);
      cb.fact("member", {{"x", y}, {"A", name}}, true);
      cb.fact("sum_in", {{"a", x}, {"b", y}, {"A", name}}, false);
      if (detail) *detail = std::to_string(x) + "+" + std::to_string(y) + " leaves " + name;
      return true;
    }
  }
  for (Elem r = 0; r < R.order(); ++r) {
    for (Elem x : a) {
      if (a.contains(R.mul(r, x))) continue;
      cb.fact("member", {{"x", x}, {"A", name}}, true);
      cb.fact("scalar_in", {{"r", r}, {"a", x}, {"A", name}}, false);
      if (detail) *detail = std::to_string(r) + "*" + std::to_string(x) + " leaves " + name;
      return true;
    }
  }
  return false;
}

/// Facts for "N is not weakly primal": the adjoint set and a closure failure.
void not_weakly_primal_facts(CertificateBuilder& cb, const GradedRing& R, const std::string& n, const Flags& f,
                             std::string* detail = nullptr) {
  cb.fact("weakly_primal", {{"N", n}}, false);
  const std::string a = cb.ring_set("GW0", with_zero(f.gw, R.zero()));
  cb.fact("gw_union_zero_equals", {{"N", n}, {"S", a}}, true);
  closure_failure(cb, R, with_zero(f.gw, R.zero()), a, detail);
}

std::optional<Elem> w_witness(const GradedModule& M, const Subset& n, Elem x) {
  for (Elem m = 0; m < M.order(); ++m) {
    const Elem xm = M.act(x, m);
    if (!n.contains(m) && xm != M.zero() && n.contains(xm)) return m;
  }
  return std::nullopt;
}

std::optional<Elem> g_witness(const GradedModule& M, const Subset& n, Elem x) {
  for (Elem m : M.homogeneous()) {
    if (!n.contains(m) && n.contains(M.act(x, m))) return m;
  }
  return std::nullopt;
}

using Eval = std::function<void(ClaimContext&, Tally&, ClaimResult&)>;

CertificateBuilder builder(const ClaimContext& cx, const std::string& claim) {
  return CertificateBuilder(claim, cx.instance().descriptor);
}

// ---- submodule-level claims -------------------------------------------------------------

void eval_lem1(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    if (!f.primal) {
      t.unmet();
      continue;
    }
    t.met();
    if (f.weakly_primal) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string name = cb.module_set("N", n);
    cb.fact("primal", {{"N", name}}, true);
    std::string why;
    not_weakly_primal_facts(cb, R, name, f, &why);
    t.refute("N=" + fmt(n) + " is primal but not weakly primal: " + why, cb.build());
  }
}

void eval_rem1_1(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    t.met();
    const Flags& f = cx.flags(n);
    if (!f.gw.contains(R.zero())) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string name = cb.module_set("N", n);
    cb.fact("ngwp_witness", {{"x", R.zero()}, {"m", *f.gw_witness[R.zero()]}, {"N", name}}, true);
    t.refute("0 lies in GW(" + fmt(n) + ")", cb.build());
  }
}

void eval_rem1_2(ClaimContext& cx, Tally& t, ClaimResult& r) {
  for (const Subset& n : cx.submodules()) {
    t.met();
    const Flags& f = cx.flags(n);
    for (Elem x : f.gw) {
      if (f.g.contains(x)) continue;
      CertificateBuilder cb = builder(cx, r.claim);
      const std::string name = cb.module_set("N", n);
      cb.fact("ngwp_witness", {{"x", x}, {"m", *f.gw_witness[x]}, {"N", name}}, true);
      cb.fact("in_g", {{"x", x}, {"N", name}}, false);
      t.refute(std::to_string(x) + " is graded prime but not graded weakly prime to " + fmt(n), cb.build());
      break;
    }
  }
}

void eval_rem1_3(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedModule& M = *cx.module();
  for (const Subset& n : cx.submodules()) {
    t.met();
    const Flags& f = cx.flags(n);
    for (Elem x : f.w) {
      if (f.gw.contains(x)) continue;
      CertificateBuilder cb = builder(cx, r.claim);
      const std::string name = cb.module_set("N", n);
      cb.fact("nwp_witness", {{"x", x}, {"m", *w_witness(M, n, x)}, {"N", name}}, true);
      cb.fact("in_gw", {{"x", x}, {"N", name}}, false);
      t.refute(std::to_string(x) + " lies in W(" + fmt(n) + ") but not in GW", cb.build());
      break;
    }
  }
}

void eval_lem2_1(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    t.met();
    const Flags& f = cx.flags(n);
    const Subset& c = cx.colon(n);
    for (Elem x : c) {
      if (x == R.zero() || !R.is_homogeneous(x) || f.gw.contains(x)) continue;
      CertificateBuilder cb = builder(cx, r.claim);
      const std::string name = cb.module_set("N", n);
      const std::string cn = cb.ring_set("C", c);
      const std::string an = cb.ring_set("GW0", with_zero(f.gw, R.zero()));
      cb.fact("colon_equals", {{"N", name}, {"S", cn}}, true);
      cb.fact("member", {{"x", x}, {"A", cn}}, true);
      cb.fact("homogeneous", {{"x", x}}, true);
      cb.fact("gw_union_zero_equals", {{"N", name}, {"S", an}}, true);
      cb.fact("member", {{"x", x}, {"A", an}}, false);
      t.refute(std::to_string(x) + " lies in (N :_R M) but not in GW(N) + {0} for N=" + fmt(n), cb.build());
      break;
    }
  }
}

void eval_lem2_2(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    t.met();
    const Flags& f = cx.flags(n);
    const Subset& c = cx.colon(n);
    const Subset gw = cx.ops().gw_ideal(cx.ring(), c);
    for (Elem x : gw) {
      if (f.gw.contains(x)) continue;
      Elem y = 0;
      for (Elem h : R.homogeneous()) {
        const Elem xh = R.mul(x, h);
        if (!c.contains(h) && xh != R.zero() && c.contains(xh)) {
          y = h;
          break;
        }
      }
      CertificateBuilder cb = builder(cx, r.claim);
      const std::string name = cb.module_set("N", n);
      const std::string cn = cb.ring_set("C", c);
      cb.fact("colon_equals", {{"N", name}, {"S", cn}}, true);
      cb.fact("ngwp_ideal_witness", {{"x", x}, {"y", y}, {"P", cn}}, true);
      cb.fact("in_gw", {{"x", x}, {"N", name}}, false);
      t.refute(std::to_string(x) + " lies in gw((N :_R M)) but not in GW(N) for N=" + fmt(n), cb.build());
      break;
    }
  }
}

void eval_prop1(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    const Subset adj = with_zero(f.gw, R.zero());
    for (const Subset& p : cx.ideals()) {
      t.met();
      const bool lhs = f.weakly_primal && adj == p;
      const bool rhs = cx.ops().characterization(cx.module(), n, p);
      if (lhs == rhs) continue;
      CertificateBuilder cb = builder(cx, r.claim);
      const std::string name = cb.module_set("N", n);
      const std::string pn = cb.ring_set("P", p);
      cb.fact("weakly_primal", {{"N", name}}, f.weakly_primal);
      cb.fact("gw_union_zero_equals", {{"N", name}, {"S", pn}}, adj == p);
      cb.fact("characterization", {{"N", name}, {"P", pn}}, rhs);
      t.refute("N=" + fmt(n) + ", P=" + fmt(p) + ": P-weakly primal is " + (lhs ? "true" : "false") +
                   " but the colon description is " + (rhs ? "true" : "false"),
               cb.build());
    }
  }
}

void eval_thm1(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  const bool cyclic = cx.cyclic();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    if (!cyclic || !f.weakly_primal) {
      t.unmet();
      continue;
    }
    t.met();
    const Subset& c = cx.colon(n);
    const Subset gwc = cx.ops().gw_ideal(cx.ring(), c);
    const bool primal_ideal = cx.ops().is_ideal(cx.ring(), with_zero(gwc, R.zero()));
    const bool equal = gwc == f.gw;
    if (primal_ideal && equal) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string name = cb.module_set("N", n);
    const std::string cn = cb.ring_set("C", c);
    cb.fact("cyclic", Json::object(), true);
    cb.fact("weakly_primal", {{"N", name}}, true);
    cb.fact("colon_equals", {{"N", name}, {"S", cn}}, true);
    std::string what;
    if (!primal_ideal) {
      cb.fact("weakly_primal_ideal", {{"P", cn}}, false);
      what = "(N :_R M) = " + fmt(c) + " is not a weakly primal ideal";
    } else {
      const std::string x = cb.ring_set("gwC", gwc);
      const std::string y = cb.ring_set("GW", f.gw);
      cb.fact("gw_ideal_equals", {{"P", cn}, {"S", x}}, true);
      cb.fact("gw_equals", {{"N", name}, {"S", y}}, true);
      cb.fact("equal", {{"A", x}, {"B", y}}, false);
      what = "gw((N :_R M)) = " + fmt(gwc) + " differs from GW(N) = " + fmt(f.gw);
    }
    t.refute("N=" + fmt(n) + ": " + what, cb.build());
  }
}

void eval_thm2(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    if (!f.weakly_primal) {
      t.unmet();
      continue;
    }
    t.met();
    const Subset p = with_zero(f.gw, R.zero());
    if (cx.ops().weakly_prime_ideal(cx.ring(), p)) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string name = cb.module_set("N", n);
    const std::string pn = cb.ring_set("P", p);
    cb.fact("weakly_primal", {{"N", name}}, true);
    cb.fact("gw_union_zero_equals", {{"N", name}, {"S", pn}}, true);
    cb.fact("weakly_prime_ideal", {{"P", pn}}, false);
    std::string pair;
    for (Elem x : R.homogeneous()) {
      for (Elem y : R.homogeneous()) {
        const Elem xy = R.mul(x, y);
        if (pair.empty() && xy != R.zero() && p.contains(xy) && !p.contains(x) && !p.contains(y)) {
          cb.fact("prime_pair_witness", {{"x", x}, {"y", y}, {"P", pn}}, true);
          pair = std::to_string(x) + "*" + std::to_string(y);
        }
      }
    }
    t.refute("N=" + fmt(n) + ": GW(N) + {0} = " + fmt(p) + " is not weakly prime (" + pair + ")", cb.build());
  }
}

void eval_thm3(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  const GradedModule& M = *cx.module();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    const Subset p = with_zero(f.gw, R.zero());
    const Subset& c = cx.colon(n);
    const Subset cn_set = cx.ops().ideal_times(cx.module(), c, n);
    const bool nonzero = cn_set.size() > 1 || !cn_set.contains(M.zero());
    if (!f.weakly_primal || !c.is_subset_of(p) || !nonzero) {
      t.unmet();
      continue;
    }
    t.met();
    if (f.primal) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string name = cb.module_set("N", n);
    const std::string pn = cb.ring_set("P", p);
    const std::string cn = cb.ring_set("C", c);
    cb.fact("weakly_primal", {{"N", name}}, true);
    cb.fact("gw_union_zero_equals", {{"N", name}, {"S", pn}}, true);
    cb.fact("colon_equals", {{"N", name}, {"S", cn}}, true);
    cb.fact("subset", {{"A", cn}, {"B", pn}}, true);
    cb.fact("product_nonzero", {{"I", cn}, {"N", name}}, true);
    cb.fact("primal", {{"N", name}}, false);
    const std::string g0 = cb.ring_set("G0", with_zero(f.g, R.zero()));
    cb.fact("g_union_zero_equals", {{"N", name}, {"S", g0}}, true);
    std::string why;
    closure_failure(cb, R, with_zero(f.g, R.zero()), g0, &why);
    t.refute("N=" + fmt(n) + " meets the hypotheses but is not primal: " + why, cb.build());
  }
}

void eval_thm4(ClaimContext& cx, Tally& t, ClaimResult& r, bool prime) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    if (!(prime ? f.weakly_prime : f.weakly_primary)) {
      t.unmet();
      continue;
    }
    t.met();
    if (f.weakly_primal) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string name = cb.module_set("N", n);
    cb.fact(prime ? "weakly_prime" : "weakly_primary", {{"N", name}}, true);
    std::string why;
    not_weakly_primal_facts(cb, R, name, f, &why);
    t.refute("N=" + fmt(n) + " is weakly " + (prime ? "prime" : "primary") + " but not weakly primal: " + why,
             cb.build());
  }
}

void eval_prop3(ClaimContext& cx, Tally& t, ClaimResult& r, bool second) {
  const GradedRing& R = *cx.ring();
  const bool faithful = cx.faithful();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    if (!faithful || !f.weakly_primal || (second && !f.gw.empty())) {
      t.unmet();
      continue;
    }
    t.met();
    const Subset p = with_zero(f.gw, R.zero());
    const Subset& c = cx.colon(n);
    const bool holds = second ? cx.ops().quotient_faithful(cx.module(), n) : c.is_subset_of(p);
    if (holds) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string name = cb.module_set("N", n);
    const std::string pn = cb.ring_set("P", p);
    cb.fact("faithful", Json::object(), true);
    cb.fact("weakly_primal", {{"N", name}}, true);
    cb.fact("gw_union_zero_equals", {{"N", name}, {"S", pn}}, true);
    if (second) {
      cb.fact("quotient_faithful", {{"N", name}}, false);
      t.refute("N=" + fmt(n) + " is 0-weakly primal but M/N is not faithful", cb.build());
    } else {
      const std::string cn = cb.ring_set("C", c);
      cb.fact("colon_equals", {{"N", name}, {"S", cn}}, true);
      cb.fact("subset", {{"A", cn}, {"B", pn}}, false);
      t.refute("N=" + fmt(n) + ": (N :_R M) = " + fmt(c) + " is not inside P = " + fmt(p), cb.build());
    }
  }
}

// ---- localization claims ----------------------------------------------------------------

void eval_thm6_1(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedModule& M = *cx.module();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    for (const Subset& s : cx.s_sets()) {
      if (!f.weakly_primal || f.gw.intersects(s)) {
        t.unmet();
        continue;
      }
      t.met();
      auto view = cx.local(s);
      const Subset ns = view->extend_module(n);
      bool done = false;
      for (Elem m : M.homogeneous()) {
        if (n.contains(m)) continue;
        for (Elem d : s) {
          const Elem cls = view->module_class_of(m, d);
          if (cls == view->module->zero() || !ns.contains(cls)) continue;
          CertificateBuilder cb = builder(cx, r.claim);
          const std::string name = cb.module_set("N", n);
          const std::string gw = cb.ring_set("GW", f.gw);
          cb.localize(s, *view);
          const std::string nsn = cb.local_module_set("NS", ns);
          cb.fact("weakly_primal", {{"N", name}}, true);
          cb.fact("gw_equals", {{"N", name}, {"S", gw}}, true);
          cb.fact("disjoint", {{"A", gw}, {"B", "S"}}, true);
          cb.fact("extend_equals", {{"N", name}, {"S", nsn}}, true);
          cb.fact("module_homogeneous", {{"m", m}}, true);
          cb.fact("class_nonzero", {{"m", m}, {"s", d}}, true);
          cb.fact("class_in", {{"m", m}, {"s", d}, {"N", nsn}}, true);
          cb.fact("member", {{"x", m}, {"A", name}}, false);
          t.refute("N=" + fmt(n) + ", S=" + fmt(s) + ": " + std::to_string(m) + "/" + std::to_string(d) +
                       " is a nonzero element of N_S with numerator outside N",
                   cb.build());
          done = true;
          break;
        }
        if (done) break;
      }
    }
  }
}

void eval_thm6_2(ClaimContext& cx, Tally& t, ClaimResult& r) {
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    for (const Subset& s : cx.s_sets()) {
      if (!f.weakly_primal || f.gw.intersects(s)) {
        t.unmet();
        continue;
      }
      t.met();
      auto view = cx.local(s);
      const Subset ns = view->extend_module(n);
      for (const Subset& l : cx.all_submodules()) {
        const Subset c = cx.ops().colon_ring(cx.module(), n, l);
        const Subset cs = view->extend_ring(c);
        const Subset ls = view->extend_module(l);
        const Subset d = cx.ops().colon_ring(view->module, ns, ls);
        if (cs == d) continue;
        CertificateBuilder cb = builder(cx, r.claim);
        const std::string name = cb.module_set("N", n);
        const std::string ln = cb.module_set("L", l);
        const std::string gw = cb.ring_set("GW", f.gw);
        const std::string cn = cb.ring_set("C", c);
        cb.localize(s, *view);
        const std::string nsn = cb.local_module_set("NS", ns);
        const std::string lsn = cb.local_module_set("LS", ls);
        const std::string csn = cb.local_ring_set("CS", cs);
        const std::string dn = cb.local_ring_set("D", d);
        cb.fact("weakly_primal", {{"N", name}}, true);
        cb.fact("gw_equals", {{"N", name}, {"S", gw}}, true);
        cb.fact("disjoint", {{"A", gw}, {"B", "S"}}, true);
        cb.fact("colon_equals", {{"N", name}, {"L", ln}, {"S", cn}}, true);
        cb.fact("extend_ideal_equals", {{"P", cn}, {"S", csn}}, true);
        cb.fact("extend_equals", {{"N", name}, {"S", nsn}}, true);
        cb.fact("extend_equals", {{"N", ln}, {"S", lsn}}, true);
        cb.fact("colon_equals", {{"N", nsn}, {"L", lsn}, {"S", dn}}, true, "local");
        cb.fact("equal", {{"A", csn}, {"B", dn}}, false);
        t.refute("N=" + fmt(n) + ", S=" + fmt(s) + ", L=" + fmt(l) + ": (N :_R L)_S differs from (N_S :_{R_S} L_S)",
                 cb.build());
        break;
      }
    }
  }
}

void eval_thm7(ClaimContext& cx, Tally& t, ClaimResult& r, bool second) {
  const GradedRing& R = *cx.ring();
  for (const Subset& n : cx.submodules()) {
    const Flags& f = cx.flags(n);
    const Subset p = with_zero(f.gw, R.zero());
    for (const Subset& s : cx.s_sets()) {
      if (!f.weakly_primal || p.intersects(s)) {
        t.unmet();
        continue;
      }
      t.met();
      auto view = cx.local(s);
      const Subset ns = view->extend_module(n);
      const Subset ps = view->extend_ring(p);
      bool holds = false;
      Subset back;
      const Flags* lf = nullptr;
      if (second) {
        back = view->contract_module(ns);
        holds = back == n;
      } else {
        lf = &cx.local_flags(s, ns);
        holds = lf->weakly_primal && with_zero(lf->gw, view->ring->zero()) == ps;
      }
      if (holds) continue;
      CertificateBuilder cb = builder(cx, r.claim);
      const std::string name = cb.module_set("N", n);
      const std::string pn = cb.ring_set("P", p);
      cb.localize(s, *view);
      const std::string nsn = cb.local_module_set("NS", ns);
      cb.fact("weakly_primal", {{"N", name}}, true);
      cb.fact("gw_union_zero_equals", {{"N", name}, {"S", pn}}, true);
      cb.fact("disjoint", {{"A", pn}, {"B", "S"}}, true);
      cb.fact("extend_equals", {{"N", name}, {"S", nsn}}, true);
      if (second) {
        const std::string bn = cb.module_set("C", back);
        cb.fact("contract_equals", {{"N", nsn}, {"S", bn}}, true);
        cb.fact("equal", {{"A", bn}, {"B", name}}, false);
        t.refute("N=" + fmt(n) + ", S=" + fmt(s) + ": N_S contracts to " + fmt(back), cb.build());
      } else {
        const std::string psn = cb.local_ring_set("PS", ps);
        cb.fact("extend_ideal_equals", {{"P", pn}, {"S", psn}}, true);
        const bool adj = with_zero(lf->gw, view->ring->zero()) == ps;
        cb.fact("weakly_primal", {{"N", nsn}}, lf->weakly_primal, "local");
        cb.fact("gw_union_zero_equals", {{"N", nsn}, {"S", psn}}, adj, "local");
        t.refute("N=" + fmt(n) + ", S=" + fmt(s) + ": N_S is " + (lf->weakly_primal ? "" : "not ") +
                     "weakly primal" + (adj ? "" : " and its adjoint is not P_S"),
                 cb.build());
      }
    }
  }
}

// ---- instance-level claims --------------------------------------------------------------

void eval_rem2_prop2(ClaimContext& cx, Tally& t, ClaimResult& r, bool prop2) {
  const GradedRing& R = *cx.ring();
  const bool mult = cx.multiplication();
  const Subset& ann = cx.annihilator();
  const Subset all = cx.module()->all();
  for (const Subset& p : cx.ideals()) {
    const bool contains_ann = ann.is_subset_of(p);
    bool p_weakly_primal = false;
    if (prop2 && mult && contains_ann) {
      p_weakly_primal = cx.ops().is_ideal(cx.ring(), with_zero(cx.ops().gw_ideal(cx.ring(), p), R.zero()));
    }
    if (!mult || !contains_ann || (prop2 && !p_weakly_primal)) {
      t.unmet();
      continue;
    }
    t.met();
    const Subset pm = cx.ops().ideal_times(cx.module(), p, all);
    const Subset c = cx.colon(pm);
    const bool holds = prop2 ? cx.flags(pm).weakly_primal : c == p;
    if (holds) continue;
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string pn = cb.ring_set("P", p);
    const std::string an = cb.ring_set("Ann", ann);
    const std::string mn = cb.module_set("M", all);
    const std::string pmn = cb.module_set("PM", pm);
    cb.fact("multiplication", Json::object(), true);
    cb.fact("ann_equals", {{"S", an}}, true);
    cb.fact("subset", {{"A", an}, {"B", pn}}, true);
    cb.fact("ideal_times_equals", {{"I", pn}, {"N", mn}, {"S", pmn}}, true);
    if (prop2) {
      cb.fact("weakly_primal_ideal", {{"P", pn}}, true);
      std::string why;
      not_weakly_primal_facts(cb, R, pmn, cx.flags(pm), &why);
      t.refute("P=" + fmt(p) + ": PM = " + fmt(pm) + " is not weakly primal: " + why, cb.build());
    } else {
      const std::string cn = cb.ring_set("C", c);
      cb.fact("colon_equals", {{"N", pmn}, {"S", cn}}, true);
      cb.fact("equal", {{"A", cn}, {"B", pn}}, false);
      t.refute("P=" + fmt(p) + ": (PM :_R M) = " + fmt(c), cb.build());
    }
  }
}

void eval_thm5(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const std::size_t len = cx.budget().max_factor_len;
  std::string detail;
  for (FactorConvention conv : {FactorConvention::AnyIdeal, FactorConvention::ProperIdeals}) {
    const std::string cname(to_string(conv));
    if (!detail.empty()) detail += "; ";
    if (!cx.faithful() || !cx.multiplication()) {
      t.unmet();
      detail += cname + ": module not faithful multiplication";
      continue;
    }
    const WpReport ring = cx.ops().wp_ring(cx.ring(), len, conv);
    for (const auto& f : ring.factorizations) {
      if (f) cx.factorizations().push_back({cx.instance().name, cx.instance().descriptor, false, conv, *f});
    }
    if (!ring.is_wp) {
      t.unmet();
      detail += cname + ": ring is not WP";
      continue;
    }
    t.met();
    const WpReport module = cx.ops().wp_module(cx.module(), len, conv);
    for (const auto& f : module.factorizations) {
      if (f) cx.factorizations().push_back({cx.instance().name, cx.instance().descriptor, true, conv, *f});
    }
    if (module.is_wp) {
      detail += cname + ": WP-module";
      continue;
    }
    detail += cname + ": not a WP-module";
    CertificateBuilder cb = builder(cx, r.claim);
    const std::string nn = cb.module_set("N", *module.first_unfactorable);
    const Json args = {{"max_len", len}, {"convention", cname}};
    cb.fact("faithful", Json::object(), true);
    cb.fact("multiplication", Json::object(), true);
    cb.fact("wp_ring", args, true);
    Json fa = args;
    fa["N"] = nn;
    cb.fact("factorizable", fa, false);
    t.refute(cname + ": N=" + fmt(*module.first_unfactorable) + " has no weakly primal factorization of length <= " +
                 std::to_string(len),
             cb.build());
  }
  t.finish(r.status == ClaimStatus::Refuted || r.cases_met == 0 ? std::string() : detail);
  if (r.status == ClaimStatus::HypothesisUnmet) r.detail = detail;
}

void eval_prop4(ClaimContext& cx, Tally& t, ClaimResult& r) {
  for (const Subset& s : cx.s_sets()) {
    auto view = cx.local(s);
    const GradedRing& RS = *view->ring;
    for (const Subset& np : cx.local_submodules(s)) {
      const Flags& lf = cx.local_flags(s, np);
      if (!lf.weakly_primal) {
        t.unmet();
        continue;
      }
      t.met();
      const Subset pp = with_zero(lf.gw, RS.zero());
      const Subset c = view->contract_module(np);
      const Subset q = view->contract_ring(pp);
      const Flags& f = cx.flags(c);
      const bool adj = with_zero(f.gw, cx.ring()->zero()) == q;
      if (f.weakly_primal && adj) continue;
      CertificateBuilder cb = builder(cx, r.claim);
      const std::string cn = cb.module_set("C", c);
      const std::string qn = cb.ring_set("Q", q);
      cb.localize(s, *view);
      const std::string npn = cb.local_module_set("NL", np);
      const std::string ppn = cb.local_ring_set("PL", pp);
      cb.fact("weakly_primal", {{"N", npn}}, true, "local");
      cb.fact("gw_union_zero_equals", {{"N", npn}, {"S", ppn}}, true, "local");
      cb.fact("contract_equals", {{"N", npn}, {"S", cn}}, true);
      cb.fact("contract_ideal_equals", {{"P", ppn}, {"S", qn}}, true);
      cb.fact("weakly_primal", {{"N", cn}}, f.weakly_primal);
      cb.fact("gw_union_zero_equals", {{"N", cn}, {"S", qn}}, adj);
      t.refute("S=" + fmt(s) + ": a weakly primal submodule of M_S contracts to " + fmt(c) + ", which is " +
                   (f.weakly_primal ? "weakly primal with adjoint other than " + fmt(q) : "not weakly primal"),
               cb.build());
    }
  }
}

void eval_thm8(ClaimContext& cx, Tally& t, ClaimResult& r) {
  const GradedRing& R = *cx.ring();
  for (const Subset& p : cx.ideals()) {
    const bool proper = p.size() != R.order();
    const bool prime = proper && cx.ops().weakly_prime_ideal(cx.ring(), p);
    for (const Subset& s : cx.s_sets()) {
      if (!prime || p.intersects(s)) {
        t.unmet();
        continue;
      }
      t.met();
      auto view = cx.local(s);
      const Subset ps = view->extend_ring(p);
      const Elem lzero = view->ring->zero();

      auto start = [&]() {
        CertificateBuilder cb = builder(cx, r.claim);
        const std::string pn = cb.ring_set("P", p);
        cb.localize(s, *view);
        const std::string psn = cb.local_ring_set("PS", ps);
        cb.fact("proper", {{"P", pn}}, true);
        cb.fact("weakly_prime_ideal", {{"P", pn}}, true);
        cb.fact("disjoint", {{"A", pn}, {"B", "S"}}, true);
        cb.fact("extend_ideal_equals", {{"P", pn}, {"S", psn}}, true);
        return cb;
      };

      bool failed = false;
      for (const Subset& n : cx.all_submodules()) {
        const Flags& f = cx.flags(n);
        if (!f.weakly_primal || with_zero(f.gw, R.zero()) != p) continue;
        const Subset ns = view->extend_module(n);
        const Flags& lf = cx.local_flags(s, ns);
        const bool adj = with_zero(lf.gw, lzero) == ps;
        const Subset back = view->contract_module(ns);
        if (lf.weakly_primal && adj && back == n) continue;
        CertificateBuilder cb = start();
        const std::string name = cb.module_set("N", n);
        const std::string nsn = cb.local_module_set("NS", ns);
        cb.fact("weakly_primal", {{"N", name}}, true);
        cb.fact("gw_union_zero_equals", {{"N", name}, {"S", "P"}}, true);
        cb.fact("extend_equals", {{"N", name}, {"S", nsn}}, true);
        if (!(lf.weakly_primal && adj)) {
          cb.fact("weakly_primal", {{"N", nsn}}, lf.weakly_primal, "local");
          cb.fact("gw_union_zero_equals", {{"N", nsn}, {"S", "PS"}}, adj, "local");
          t.refute("P=" + fmt(p) + ", S=" + fmt(s) + ": N=" + fmt(n) + " is P-weakly primal but N_S is not P_S-weakly primal",
                   cb.build());
        } else {
          const std::string bn = cb.module_set("C", back);
          cb.fact("contract_equals", {{"N", nsn}, {"S", bn}}, true);
          cb.fact("equal", {{"A", bn}, {"B", name}}, false);
          t.refute("P=" + fmt(p) + ", S=" + fmt(s) + ": N=" + fmt(n) + " is not recovered from N_S", cb.build());
        }
        failed = true;
        break;
      }
      if (failed) continue;
      for (const Subset& np : cx.local_submodules(s)) {
        const Flags& lf = cx.local_flags(s, np);
        if (!lf.weakly_primal || with_zero(lf.gw, lzero) != ps) continue;
        const Subset c = view->contract_module(np);
        const Flags& f = cx.flags(c);
        const bool adj = with_zero(f.gw, R.zero()) == p;
        const Subset again = view->extend_module(c);
        if (f.weakly_primal && adj && again == np) continue;
        CertificateBuilder cb = start();
        const std::string npn = cb.local_module_set("NL", np);
        const std::string cn = cb.module_set("C", c);
        cb.fact("weakly_primal", {{"N", npn}}, true, "local");
        cb.fact("gw_union_zero_equals", {{"N", npn}, {"S", "PS"}}, true, "local");
        cb.fact("contract_equals", {{"N", npn}, {"S", cn}}, true);
        if (!(f.weakly_primal && adj)) {
          cb.fact("weakly_primal", {{"N", cn}}, f.weakly_primal);
          cb.fact("gw_union_zero_equals", {{"N", cn}, {"S", "P"}}, adj);
          t.refute("P=" + fmt(p) + ", S=" + fmt(s) + ": a P_S-weakly primal submodule of M_S contracts to " + fmt(c) +
                       ", which is not P-weakly primal",
                   cb.build());
        } else {
          const std::string en = cb.local_module_set("E", again);
          cb.fact("extend_equals", {{"N", cn}, {"S", en}}, true);
          cb.fact("equal", {{"A", en}, {"B", npn}}, false);
          t.refute("P=" + fmt(p) + ", S=" + fmt(s) + ": a P_S-weakly primal submodule of M_S is not the extension of "
                       "its contraction",
                   cb.build());
        }
        break;
      }
    }
  }
}

// ---- (Z, mZ) ---------------------------------------------------------------------------

void eval_integer(const std::string& id, ClaimContext& cx, Tally& t, ClaimResult& r) {
  const long m = *cx.instance().integer_modulus;
  const auto z = cx.ops().integer(m);
  auto fail = [&](const std::string& detail, const std::vector<std::pair<std::string, Json>>& facts,
                  const std::vector<bool>& expect) {
    CertificateBuilder cb = builder(cx, r.claim);
    for (std::size_t i = 0; i < facts.size(); ++i) cb.fact(facts[i].first, facts[i].second, expect[i], "integer");
    t.refute(detail, cb.build());
  };
  auto gw0 = [&](long x) { return x == 0 || z->in_gw(x); };
  const long lo = -2 * m, hi = 2 * m;
  if (id == "lem1" || id == "thm4.1" || id == "thm4.2") {
    const bool hyp = id == "lem1" ? z->primal() : id == "thm4.1" ? z->weakly_primary() : z->weakly_prime();
    const std::string hname = id == "lem1" ? "int_primal" : id == "thm4.1" ? "int_weakly_primary" : "int_weakly_prime";
    if (!hyp) return t.unmet();
    t.met();
    if (!z->weakly_primal()) {
      fail("mZ satisfies the hypothesis but is not weakly primal",
           {{hname, Json::object()}, {"int_weakly_primal", Json::object()}}, {true, false});
    }
    return;
  }
  if (id == "thm2") {
    if (!z->weakly_primal()) return t.unmet();
    t.met();
    for (long x = lo; x <= hi; ++x) {
      for (long y = lo; y <= hi; ++y) {
        if (x * y == 0 || !gw0(x * y) || gw0(x) || gw0(y)) continue;
        return fail(std::to_string(x) + "*" + std::to_string(y) + " lies in GW(mZ) but neither factor does",
                    {{"int_weakly_primal", Json::object()},
                     {"int_in_gw", {{"x", x * y}}},
                     {"int_in_gw", {{"x", x}}},
                     {"int_in_gw", {{"x", y}}}},
                    {true, true, false, false});
      }
    }
    return;
  }
  t.met();
  for (long x = lo; x <= hi; ++x) {
    if (id == "rem1.1" && x == 0 && z->in_gw(0)) {
      return fail("0 lies in GW(mZ)", {{"int_in_gw", {{"x", 0}}}}, {true});
    }
    if (id == "rem1.2" && z->in_gw(x) && !z->in_g(x)) {
      return fail(std::to_string(x) + " lies in GW(mZ) but not in G(mZ)",
                  {{"int_in_gw", {{"x", x}}}, {"int_in_g", {{"x", x}}}}, {true, false});
    }
    if (id == "rem1.3" && z->in_w(x) && !z->in_gw(x)) {
      return fail(std::to_string(x) + " lies in W(mZ) but not in GW(mZ)",
                  {{"int_in_w", {{"x", x}}}, {"int_in_gw", {{"x", x}}}}, {true, false});
    }
    if (id == "lem2.1" && x != 0 && x % m == 0 && !z->in_gw(x)) {
      return fail(std::to_string(x) + " lies in (mZ :_Z Z) but not in GW(mZ)",
                  {{"int_colon_member", {{"x", x}}}, {"int_in_gw", {{"x", x}}}}, {true, false});
    }
    if (id == "lem2.2" && x != 0 && x % m != 0) {
      // Over Z the module is the ring, so gw((mZ :_Z Z)) = gw(mZ) is computed by the same witnesses.
      const auto y = z->ngwp_witness(x);
      if (y && !z->in_gw(x)) {
        return fail(std::to_string(x) + " lies in gw(mZ) but not in GW(mZ)",
                    {{"int_ngwp_witness", {{"x", x}, {"y", *y}}}, {"int_in_gw", {{"x", x}}}}, {true, false});
      }
    }
  }
}

// ---- examples ---------------------------------------------------------------------------

void part(ClaimResult& r, std::string statement, bool asserted, bool computed) {
  r.parts.push_back({std::move(statement), asserted, computed});
}

void eval_exm1_1(ClaimContext& cx, ClaimResult& r) {
  const long m = *cx.instance().integer_modulus;
  const auto z = cx.ops().integer(m);
  CertificateBuilder cb = builder(cx, r.claim);
  const auto w3 = z->ngwp_witness(3);
  cb.fact("int_in_gw", {{"x", 3}}, z->in_gw(3), "integer");
  if (w3) cb.fact("int_ngwp_witness", {{"x", 3}, {"y", 4}}, true, "integer");
  part(r, "3 is not graded weakly prime to N (3*4 = 12 in N, 4 not in N)", true, z->in_gw(3));

  std::optional<long> outside;
  for (long x = -2 * m; x <= 2 * m && !outside; ++x) {
    if (x != 0 && !z->in_gw(x)) outside = x;
  }
  if (outside) cb.fact("int_in_gw", {{"x", *outside}}, false, "integer");
  part(r, "GW(N) = Z", true, !outside.has_value());

  cb.fact("int_weakly_primal", Json::object(), z->weakly_primal(), "integer");
  if (!z->weakly_primal()) {
    bool found = false;
    for (long a = 1; a <= 2 * m && !found; ++a) {
      for (long b = a; b <= 2 * m && !found; ++b) {
        if (z->in_gw(a) && z->in_gw(b) && a + b != 0 && !z->in_gw(a + b)) {
          cb.fact("int_in_gw", {{"x", a}}, true, "integer");
          cb.fact("int_in_gw", {{"x", b}}, true, "integer");
          cb.fact("int_in_gw", {{"x", a + b}}, false, "integer");
          found = true;
        }
      }
    }
  }
  part(r, "N is graded weakly primal", true, z->weakly_primal());
  cb.fact("int_primal", Json::object(), z->primal(), "integer");
  part(r, "N is not graded primal", true, !z->primal());
  r.certificate = cb.build();
}

void eval_table_example(ClaimContext& cx, ClaimResult& r) {
  const Subset n = *cx.instance().fixed_submodule;
  const Flags& f = cx.flags(n);
  const GradedModule& M = *cx.module();
  CertificateBuilder cb = builder(cx, r.claim);
  const std::string name = cb.module_set("N", n);
  auto ngwp = [&](Elem x, Elem m, const std::string& text) {
    const Elem xm = M.act(x, m);
    const bool w = !n.contains(m) && xm != M.zero() && n.contains(xm);
    cb.fact("ngwp_witness", {{"x", x}, {"m", m}, {"N", name}}, w);
    cb.fact("in_gw", {{"x", x}, {"N", name}}, f.gw.contains(x));
    part(r, text, true, f.gw.contains(x));
  };
  auto primality = [&](bool weakly) {
    cb.fact(weakly ? "weakly_primal" : "primal", {{"N", name}}, weakly ? f.weakly_primal : f.primal);
  };
  if (r.claim == "exm1.2") {
    primality(false);
    part(r, "N is graded primal", true, f.primal);
    ngwp(2, 4, "2 is in GW(N) (2*4 = 8 in N, 4 not in N)");
    ngwp(4, 2, "4 is in GW(N) (4*2 = 8 in N, 2 not in N)");
    cb.fact("in_gw", {{"x", 6}, {"N", name}}, f.gw.contains(6));
    part(r, "6 = 2+4 is graded weakly prime to N", true, !f.gw.contains(6));
    primality(true);
    if (!f.weakly_primal) not_weakly_primal_facts(cb, *cx.ring(), name, f);
    part(r, "N is not graded weakly primal", true, !f.weakly_primal);
  } else if (r.claim == "exm1.3") {
    const std::string e = cb.ring_set("Empty", Subset(cx.ring()->order()));
    cb.fact("gw_equals", {{"N", name}, {"S", e}}, f.gw.empty());
    part(r, "GW(N) is empty", true, f.gw.empty());
    primality(true);
    part(r, "N is graded weakly primal", true, f.weakly_primal);
    for (Elem x : {Elem{3}, Elem{4}}) {
      cb.fact("in_g", {{"x", x}, {"N", name}}, f.g.contains(x));
      if (auto m = g_witness(M, n, x)) cb.fact("not_prime_witness", {{"x", x}, {"m", *m}, {"N", name}}, true);
      part(r, std::to_string(x) + " is in G(N)", true, f.g.contains(x));
    }
    cb.fact("in_g", {{"x", 1}, {"N", name}}, f.g.contains(1));
    part(r, "1 = 4-3 is graded prime to N", true, !f.g.contains(1));
    primality(false);
    part(r, "N is not graded primal", true, !f.primal);
  } else if (r.claim == "exm1.4") {
    cb.fact("in_g", {{"x", 4}, {"N", name}}, f.g.contains(4));
    if (auto m = g_witness(M, n, 4)) cb.fact("not_prime_witness", {{"x", 4}, {"m", *m}, {"N", name}}, true);
    part(r, "4 is not graded prime to N", true, f.g.contains(4));
    cb.fact("member", {{"x", 8}, {"A", name}}, n.contains(8));
    cb.fact("in_gw", {{"x", 4}, {"N", name}}, f.gw.contains(4));
    if (f.gw.contains(4)) {
      cb.fact("ngwp_witness", {{"x", 4}, {"m", *f.gw_witness[4]}, {"N", name}}, true);
    }
    part(r, "4 is graded weakly prime to N", true, !f.gw.contains(4));
  }
  r.certificate = cb.build();
}

const std::map<std::string, Eval>& evaluators() {
  static const std::map<std::string, Eval> table = {
      {"lem1", eval_lem1},
      {"rem1.1", eval_rem1_1},
      {"rem1.2", eval_rem1_2},
      {"rem1.3", eval_rem1_3},
      {"lem2.1", eval_lem2_1},
      {"lem2.2", eval_lem2_2},
      {"prop1", eval_prop1},
      {"thm1", eval_thm1},
      {"thm2", eval_thm2},
      {"thm3", eval_thm3},
      {"thm4.1", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_thm4(c, t, r, false); }},
      {"thm4.2", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_thm4(c, t, r, true); }},
      {"rem2", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_rem2_prop2(c, t, r, false); }},
      {"prop2", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_rem2_prop2(c, t, r, true); }},
      {"thm5", eval_thm5},
      {"prop3.1", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_prop3(c, t, r, false); }},
      {"prop3.2", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_prop3(c, t, r, true); }},
      {"thm6.1", eval_thm6_1},
      {"thm6.2", eval_thm6_2},
      {"prop4", eval_prop4},
      {"thm7.1", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_thm7(c, t, r, false); }},
      {"thm7.2", [](ClaimContext& c, Tally& t, ClaimResult& r) { eval_thm7(c, t, r, true); }},
      {"thm8", eval_thm8},
  };
  return table;
}

}  // namespace

const std::vector<ClaimSpec>& registry() {
  static const std::vector<ClaimSpec> r = make_registry();
  return r;
}

const ClaimSpec* find_claim(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ClaimContext::ClaimContext(Instance instance, const AlgebraOps& ops, const Budget& budget)
    : inst_(std::move(instance)), ops_(ops), budget_(budget) {}

const std::vector<Subset>& ClaimContext::submodules() {
  if (!submodules_) {
    if (inst_.fixed_submodule) {
      submodules_ = std::vector<Subset>{*inst_.fixed_submodule};
    } else if (!inst_.submodules.empty()) {
      submodules_.emplace();
      for (const auto& n : inst_.submodules) submodules_->push_back(n.members());
    } else {
      submodules_ = all_submodules();
    }
  }
  return *submodules_;
}

const std::vector<Subset>& ClaimContext::all_submodules() {
  if (!all_submodules_) all_submodules_ = ops_.submodules(inst_.module);
  return *all_submodules_;
}

const std::vector<Subset>& ClaimContext::ideals() {
  if (!ideals_) {
    if (!inst_.ideals.empty()) {
      ideals_.emplace();
      for (const auto& p : inst_.ideals) ideals_->push_back(p.members());
    } else {
      ideals_ = ops_.ideals(inst_.ring);
    }
  }
  return *ideals_;
}

const std::vector<Subset>& ClaimContext::s_sets() {
  if (!s_sets_) {
    if (!inst_.s_sets.empty()) {
      s_sets_.emplace();
      for (const auto& s : inst_.s_sets) s_sets_->push_back(s.members());
    } else {
      s_sets_ = ops_.multiplicative_sets(inst_.ring);
    }
  }
  return *s_sets_;
}

const Flags& ClaimContext::flags(const Subset& n) {
  auto it = flags_.find(n);
  if (it == flags_.end()) it = flags_.emplace(n, ops_.flags(inst_.module, n)).first;
  return it->second;
}

const Subset& ClaimContext::colon(const Subset& n) {
  auto it = colon_.find(n);
  if (it == colon_.end()) it = colon_.emplace(n, ops_.colon_ring(inst_.module, n, inst_.module->all())).first;
  return it->second;
}

std::shared_ptr<const LocalView> ClaimContext::local(const Subset& s) {
  auto it = local_.find(s);
  if (it == local_.end()) it = local_.emplace(s, ops_.localize(inst_.module, s)).first;
  return it->second;
}

const Flags& ClaimContext::local_flags(const Subset& s, const Subset& n) {
  auto& cache = local_flags_[s];
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ops_.flags(local(s)->module, n)).first;
  return it->second;
}

const std::vector<Subset>& ClaimContext::local_submodules(const Subset& s) {
  auto it = local_submodules_.find(s);
  if (it == local_submodules_.end()) it = local_submodules_.emplace(s, ops_.submodules(local(s)->module)).first;
  return it->second;
}

bool ClaimContext::cyclic() {
  if (!cyclic_) cyclic_ = ops_.is_cyclic(inst_.module);
  return *cyclic_;
}

bool ClaimContext::multiplication() {
  if (!multiplication_) multiplication_ = ops_.is_multiplication(inst_.module);
  return *multiplication_;
}

const Subset& ClaimContext::annihilator() {
  if (!ann_) ann_ = ops_.ann_module(inst_.module);
  return *ann_;
}

bool applies(const ClaimSpec& spec, const Instance& instance) {
  if (spec.scope == ClaimScope::Example) return false;
  if (instance.is_integer()) return spec.integer_applicable;
  if (instance.fixed_submodule) return spec.scope == ClaimScope::Submodule;
  return true;
}

ClaimResult evaluate_claim(const ClaimSpec& spec, ClaimContext& context) {
  ClaimResult r;
  r.claim = spec.id;
  r.instance = context.instance().descriptor;
  r.instance_name = context.instance().name;
  Tally t(r);
  try {
    if (context.instance().is_integer()) {
      eval_integer(spec.id, context, t, r);
    } else {
      evaluators().at(spec.id)(context, t, r);
    }
  } catch (const BudgetExceeded& e) {
    if (r.status != ClaimStatus::Refuted) {
      r.status = ClaimStatus::BudgetExceeded;
      r.detail = e.what();
    }
  }
  if (spec.id != "thm5") t.finish();
  return r;
}

ClaimResult evaluate_example(const ClaimSpec& spec, const AlgebraOps& ops, const Budget& budget) {
  ClaimContext cx(build_instance(*spec.instance), ops, budget);
  ClaimResult r;
  r.claim = spec.id;
  r.instance = cx.instance().descriptor;
  r.instance_name = cx.instance().name;
  if (cx.instance().is_integer()) {
    eval_exm1_1(cx, r);
  } else {
    eval_table_example(cx, r);
  }
  r.cases = r.parts.size();
  r.cases_met = r.parts.size();
  std::size_t disagree = 0;
  for (const auto& p : r.parts) disagree += p.agrees() ? 0 : 1;
  r.cases_refuted = disagree;
  r.status = disagree == 0 ? ClaimStatus::Confirmed : ClaimStatus::Refuted;
  r.detail = disagree == 0 ? "all " + std::to_string(r.parts.size()) + " statements agree"
                           : std::to_string(disagree) + " of " + std::to_string(r.parts.size()) +
                                 " statements disagree with the computation";
  return r;
}

}  // namespace graded_lab::harness
