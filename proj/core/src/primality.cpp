#include "graded_lab/primality.hpp"

namespace graded_lab {

namespace {

WitnessedSet empty_witnessed(std::size_t n) { return {Subset(n), std::vector<std::optional<Elem>>(n)}; }

}  // namespace

GwpCheck is_gwp_to_submodule(Elem x, const GradedSubmodule& n) {
  const GradedModule& M = *n.module();
  const GradedRing& R = *M.ring();
  if (x >= R.order() || !R.is_homogeneous(x)) {
    throw NonHomogeneousScalar("scalar " + std::to_string(x) + " is not homogeneous");
  }
  for (Elem m : M.homogeneous()) {
    if (n.contains(m)) continue;
    const Elem xm = M.act(x, m);
    if (xm != M.zero() && n.contains(xm)) return {false, m};
  }
  return {};
}

WitnessedSet gw_set(const GradedSubmodule& n) {
  const GradedRing& R = *n.module()->ring();
  WitnessedSet out = empty_witnessed(R.order());
  for (Elem x : R.homogeneous()) {
    auto check = is_gwp_to_submodule(x, n);
    if (!check.gwp) {
      out.members.insert(x);
      out.witness[x] = check.witness;
    }
  }
  return out;
}

WitnessedSet g_set(const GradedSubmodule& n) {
  const GradedModule& M = *n.module();
  const GradedRing& R = *M.ring();
  WitnessedSet out = empty_witnessed(R.order());
  for (Elem x : R.homogeneous()) {
    for (Elem m : M.homogeneous()) {
      if (!n.contains(m) && n.contains(M.act(x, m))) {
        out.members.insert(x);
        out.witness[x] = m;
        break;
      }
    }
  }
  return out;
}

WitnessedSet w_set(const GradedSubmodule& n) {
  const GradedModule& M = *n.module();
  const GradedRing& R = *M.ring();
  WitnessedSet out = empty_witnessed(R.order());
  for (Elem x = 0; x < R.order(); ++x) {
    for (Elem m = 0; m < M.order(); ++m) {
      if (n.contains(m)) continue;
      const Elem xm = M.act(x, m);
      if (xm != M.zero() && n.contains(xm)) {
        out.members.insert(x);
        out.witness[x] = m;
        break;
      }
    }
  }
  return out;
}

PrimalityVerdict classify(const GradedSubmodule& n) {
  const GradedModule& M = *n.module();
  const RingPtr& ring = M.ring();
  const GradedRing& R = *ring;
  PrimalityVerdict v;
  v.submodule = n.members();
  v.gw = gw_set(n);
  v.g = g_set(n);
  v.w = w_set(n);

  Subset gw0 = v.gw.members;
  gw0.insert(R.zero());
  v.weakly_primal_failure = is_graded_ideal(R, gw0);
  v.is_weakly_primal = v.weakly_primal_failure.ok;
  if (v.is_weakly_primal) v.adjoint = GradedIdeal::from_members(ring, gw0);

  Subset g0 = v.g.members;
  g0.insert(R.zero());
  v.primal_failure = is_graded_ideal(R, g0);
  v.is_primal = v.primal_failure.ok;

  const Subset colon = colon_into_ring(n).members();
  Subset colon_radical(R.order());
  for (Elem x : R.homogeneous()) {
    Elem p = x;
    for (std::size_t k = 1; k <= R.order(); ++k) {
      if (colon.contains(p)) {
        colon_radical.insert(x);
        break;
      }
      p = R.mul(p, x);
    }
  }
  v.is_weakly_prime = !n.is_whole();
  v.is_weakly_primary = true;
  for (Elem x : R.homogeneous()) {
    for (Elem m : M.homogeneous()) {
      if (n.contains(m)) continue;
      const Elem xm = M.act(x, m);
      if (xm == M.zero() || !n.contains(xm)) continue;
      if (!colon.contains(x) && !v.weakly_prime_counterexample) v.weakly_prime_counterexample = {x, m};
      if (!colon_radical.contains(x) && !v.weakly_primary_counterexample) v.weakly_primary_counterexample = {x, m};
    }
  }
  if (v.weakly_prime_counterexample) v.is_weakly_prime = false;
  if (v.weakly_primary_counterexample) v.is_weakly_primary = false;
  return v;
}

WitnessedSet gw_set_ideal(const GradedIdeal& p) {
  const GradedRing& R = *p.ring();
  WitnessedSet out = empty_witnessed(R.order());
  for (Elem x : R.homogeneous()) {
    for (Elem y : R.homogeneous()) {
      if (p.contains(y)) continue;
      const Elem xy = R.mul(x, y);
      if (xy != R.zero() && p.contains(xy)) {
        out.members.insert(x);
        out.witness[x] = y;
        break;
      }
    }
  }
  return out;
}

bool is_graded_weakly_primal_ideal(const GradedIdeal& p) {
  const GradedRing& R = *p.ring();
  Subset gw0 = gw_set_ideal(p).members;
  gw0.insert(R.zero());
  return is_graded_ideal(R, gw0).ok;
}

CharacterizationResult characterization_check(const GradedSubmodule& n, const Subset& p) {
  const ModulePtr& module = n.module();
  const GradedModule& M = *module;
  const GradedRing& R = *M.ring();
  auto ideal_check = is_graded_ideal(R, p);
  if (!ideal_check) return {false, "P is not a graded ideal: " + ideal_check.failed, std::nullopt};
  for (Elem s : R.homogeneous()) {
    const Subset colon = colon_into_module(n, s).members() & M.homogeneous();
    const Subset escape = n.members() | ann_in_module(s, module).members();
    const bool inside = colon.is_subset_of(escape);
    const bool in_p_star = p.contains(s) && s != R.zero();
    if (!in_p_star && !inside) {
      return {false, "(N :_M p) n h(M) leaves N u (0 :_M p) for p outside P - {0}", s};
    }
    if (in_p_star && inside) {
      return {false, "(N :_M p) n h(M) stays inside N u (0 :_M p) for nonzero p in P", s};
    }
  }
  return {};
}

CharacterizationResult characterization_check(const GradedSubmodule& n, const GradedIdeal& p) {
  return characterization_check(n, p.members());
}

}  // namespace graded_lab
