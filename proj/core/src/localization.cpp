#include "graded_lab/localization.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace graded_lab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr Elem kUnassigned = std::numeric_limits<Elem>::max();

// scale(s, x) is the action of a denominator on a numerator; sub is subtraction of numerators.
template <typename Scale, typename Sub>
FractionClasses build_classes(std::size_t n, Elem zero, std::size_t ring_order, const Subset& s_members,
                              Scale scale, Sub sub) {
  FractionClasses fc;
  fc.denominators = s_members.members();
  fc.den_index.assign(ring_order, kNone);
  for (std::size_t i = 0; i < fc.denominators.size(); ++i) fc.den_index[fc.denominators[i]] = i;
  const std::size_t k = fc.denominators.size();

  fc.torsion = Subset(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem u : fc.denominators) {
      if (scale(u, x) == zero) {
        fc.torsion.insert(x);
        break;
      }
    }
  }
  auto related = [&](Elem a, Elem s, Elem b, Elem t) { return fc.torsion.contains(sub(scale(t, a), scale(s, b))); };

  fc.class_of_pair.assign(n * k, kUnassigned);
  for (Elem a = 0; a < n; ++a) {
    for (std::size_t si = 0; si < k; ++si) {
      if (fc.class_of_pair[a * k + si] != kUnassigned) continue;
      const Elem cls = static_cast<Elem>(fc.representative.size());
      const Elem s = fc.denominators[si];
      fc.representative.emplace_back(a, s);
      for (std::size_t q = a * k + si; q < n * k; ++q) {
        if (fc.class_of_pair[q] != kUnassigned) continue;
        if (related(a, s, static_cast<Elem>(q / k), fc.denominators[q % k])) fc.class_of_pair[q] = cls;
      }
    }
  }

  // The relation must coincide with "same class" on every ordered pair of pairs.
  auto& eq = fc.equivalence;
  const std::size_t total = n * k;
  for (std::size_t p = 0; p < total && eq.ok; ++p) {
    const FractionPair fp{static_cast<Elem>(p / k), fc.denominators[p % k]};
    for (std::size_t q = 0; q < total; ++q) {
      const FractionPair fq{static_cast<Elem>(q / k), fc.denominators[q % k]};
      ++eq.pairs_checked;
      const bool rel = related(fp.first, fp.second, fq.first, fq.second);
      if (rel != (fc.class_of_pair[p] == fc.class_of_pair[q])) {
        eq.ok = false;
        eq.counterexample = std::make_pair(fp, fq);
        break;
      }
    }
  }
  return fc;
}

std::string fraction_label(const std::string& num, const std::string& den, bool den_is_one) {
  return den_is_one ? num : num + "/" + den;
}

}  // namespace

Elem FractionClasses::class_of(Elem num, Elem den) const {
  if (den >= den_index.size() || den_index[den] == kNone) {
    throw std::invalid_argument("denominator " + std::to_string(den) + " is not in S");
  }
  return class_of_pair[num * denominators.size() + den_index[den]];
}

std::vector<FractionPair> FractionClasses::members(Elem cls) const {
  std::vector<FractionPair> out;
  const std::size_t k = denominators.size();
  for (std::size_t q = 0; q < class_of_pair.size(); ++q) {
    if (class_of_pair[q] == cls) out.emplace_back(static_cast<Elem>(q / k), denominators[q % k]);
  }
  return out;
}

LocalizedRingPtr localize_ring(const RingPtr& ring, const MultiplicativeSet& s) {
  if (s.ring() != ring) throw StructureMismatch("multiplicative set belongs to another ring");
  const GradedRing& R = *ring;
  auto out = std::shared_ptr<LocalizedRing>(new LocalizedRing(s));
  out->base_ = ring;
  out->classes_ = build_classes(
      R.order(), R.zero(), R.order(), s.members(), [&](Elem u, Elem x) { return R.mul(u, x); },
      [&](Elem a, Elem b) { return R.sub(a, b); });
  const FractionClasses& fc = out->classes_;
  const std::size_t c = fc.class_count();

  RingTables t;
  t.order = c;
  t.add.resize(c * c);
  t.mul.resize(c * c);
  for (Elem x = 0; x < c; ++x) {
    const auto [a, u] = fc.representative[x];
    for (Elem y = 0; y < c; ++y) {
      const auto [b, v] = fc.representative[y];
      const Elem den = R.mul(u, v);
      t.add[x * c + y] = fc.class_of(R.add(R.mul(a, v), R.mul(b, u)), den);
      t.mul[x * c + y] = fc.class_of(R.mul(a, b), den);
    }
  }
  t.zero = fc.class_of(R.zero(), R.one());
  t.one = fc.class_of(R.one(), R.one());
  t.group = R.group();
  t.components.resize(R.group().size());
  for (Degree g = 0; g < R.group().size(); ++g) {
    Subset comp(c);
    for (Elem den : fc.denominators) {
      const Degree shifted = R.group().add(g, *R.degree(den));
      for (Elem r : R.component(shifted)) comp.insert(fc.class_of(r, den));
    }
    t.components[g] = comp.members();
  }
  t.labels.resize(c);
  for (Elem x = 0; x < c; ++x) {
    const auto [a, u] = fc.representative[x];
    t.labels[x] = fraction_label(R.label(a), R.label(u), u == R.one());
  }
  out->ring_ = make_ring(t);
  out->phi_.resize(R.order());
  for (Elem r = 0; r < R.order(); ++r) out->phi_[r] = fc.class_of(r, R.one());
  return out;
}

LocalizedModulePtr localize_module(const ModulePtr& module, const LocalizedRingPtr& lr) {
  if (module->ring() != lr->base()) throw StructureMismatch("module and localized ring have different bases");
  const GradedModule& M = *module;
  const GradedRing& R = *lr->base();
  auto out = std::shared_ptr<LocalizedModule>(new LocalizedModule());
  out->base_ = module;
  out->ring_ = lr;
  out->classes_ = build_classes(
      M.order(), M.zero(), R.order(), lr->s().members(), [&](Elem u, Elem m) { return M.act(u, m); },
      [&](Elem a, Elem b) { return M.sub(a, b); });
  const FractionClasses& fc = out->classes_;
  const FractionClasses& rc = lr->classes();
  const std::size_t c = fc.class_count();
  const std::size_t rs_order = rc.class_count();

  ModuleTables t;
  t.ring = lr->ring();
  t.order = c;
  t.add.resize(c * c);
  t.action.resize(rs_order * c);
  for (Elem x = 0; x < c; ++x) {
    const auto [m, u] = fc.representative[x];
    for (Elem y = 0; y < c; ++y) {
      const auto [m2, v] = fc.representative[y];
      t.add[x * c + y] = fc.class_of(M.add(M.act(v, m), M.act(u, m2)), R.mul(u, v));
    }
  }
  for (Elem rx = 0; rx < rs_order; ++rx) {
    const auto [r, u] = rc.representative[rx];
    for (Elem y = 0; y < c; ++y) {
      const auto [m, v] = fc.representative[y];
      t.action[rx * c + y] = fc.class_of(M.act(r, m), R.mul(u, v));
    }
  }
  t.zero = fc.class_of(M.zero(), R.one());
  t.components.resize(R.group().size());
  for (Degree g = 0; g < R.group().size(); ++g) {
    Subset comp(c);
    for (Elem den : fc.denominators) {
      const Degree shifted = R.group().add(g, *R.degree(den));
      for (Elem m : M.component(shifted)) comp.insert(fc.class_of(m, den));
    }
    t.components[g] = comp.members();
  }
  t.labels.resize(c);
  for (Elem x = 0; x < c; ++x) {
    const auto [m, u] = fc.representative[x];
    t.labels[x] = fraction_label(M.label(m), R.label(u), u == R.one());
  }
  out->module_ = make_module(t);
  out->phi_.resize(M.order());
  for (Elem m = 0; m < M.order(); ++m) out->phi_[m] = fc.class_of(m, R.one());
  return out;
}

LocalizedModulePtr localize_module(const ModulePtr& module, const MultiplicativeSet& s) {
  return localize_module(module, localize_ring(module->ring(), s));
}

GradedSubmodule extend_submodule(const LocalizedModule& lm, const GradedSubmodule& n) {
  if (n.module() != lm.base()) throw StructureMismatch("submodule of another module");
  Subset out(lm.module()->order());
  for (Elem x : n.members()) {
    for (Elem s : lm.classes().denominators) out.insert(lm.class_of(x, s));
  }
  return GradedSubmodule::from_members(lm.module(), std::move(out));
}

GradedIdeal extend_ideal(const LocalizedRing& lr, const GradedIdeal& p) {
  if (p.ring() != lr.base()) throw StructureMismatch("ideal of another ring");
  Subset out(lr.ring()->order());
  for (Elem x : p.members()) {
    for (Elem s : lr.classes().denominators) out.insert(lr.class_of(x, s));
  }
  return GradedIdeal::from_members(lr.ring(), std::move(out));
}

GradedSubmodule contract(const LocalizedModule& lm, const GradedSubmodule& n_prime) {
  if (n_prime.module() != lm.module()) throw StructureMismatch("submodule is not in M_S");
  Subset out(lm.base()->order());
  for (Elem m = 0; m < lm.base()->order(); ++m) {
    if (n_prime.contains(lm.phi(m))) out.insert(m);
  }
  return GradedSubmodule::from_members(lm.base(), std::move(out));
}

GradedIdeal contract_ideal(const LocalizedRing& lr, const GradedIdeal& p_prime) {
  if (p_prime.ring() != lr.ring()) throw StructureMismatch("ideal is not in R_S");
  Subset out(lr.base()->order());
  for (Elem r = 0; r < lr.base()->order(); ++r) {
    if (p_prime.contains(lr.phi(r))) out.insert(r);
  }
  return GradedIdeal::from_members(lr.base(), std::move(out));
}

HomomorphismCheck check_phi(const LocalizedRing& lr) {
  const GradedRing& R = *lr.base();
  const GradedRing& RS = *lr.ring();
  if (lr.phi(R.one()) != RS.one()) return {false, "phi(1) != 1", {R.one()}};
  for (Elem a = 0; a < R.order(); ++a) {
    for (Elem b = 0; b < R.order(); ++b) {
      if (lr.phi(R.add(a, b)) != RS.add(lr.phi(a), lr.phi(b))) return {false, "phi(a+b) != phi(a)+phi(b)", {a, b}};
      if (lr.phi(R.mul(a, b)) != RS.mul(lr.phi(a), lr.phi(b))) return {false, "phi(ab) != phi(a)phi(b)", {a, b}};
    }
  }
  for (Degree g = 0; g < R.group().size(); ++g) {
    for (Elem a : R.component(g)) {
      if (!RS.component(g).contains(lr.phi(a))) return {false, "phi moves a homogeneous element off its degree", {a}};
    }
  }
  return {};
}

HomomorphismCheck check_phi(const LocalizedModule& lm) {
  const GradedModule& M = *lm.base();
  const GradedModule& MS = *lm.module();
  const LocalizedRing& lr = *lm.localized_ring();
  for (Elem a = 0; a < M.order(); ++a) {
    for (Elem b = 0; b < M.order(); ++b) {
      if (lm.phi(M.add(a, b)) != MS.add(lm.phi(a), lm.phi(b))) return {false, "phi(m+m') != phi(m)+phi(m')", {a, b}};
    }
  }
  for (Elem r = 0; r < M.ring()->order(); ++r) {
    for (Elem m = 0; m < M.order(); ++m) {
      if (lm.phi(M.act(r, m)) != MS.act(lr.phi(r), lm.phi(m))) return {false, "phi(rm) != (r/1)phi(m)", {r, m}};
    }
  }
  for (Degree g = 0; g < M.ring()->group().size(); ++g) {
    for (Elem m : M.component(g)) {
      if (!MS.component(g).contains(lm.phi(m))) return {false, "phi moves a homogeneous element off its degree", {m}};
    }
  }
  return {};
}

ColonLocalization colon_localization_check(const LocalizedModule& lm, const GradedSubmodule& n,
                                           const GradedSubmodule& l) {
  if (n.module() != lm.base() || l.module() != lm.base()) throw StructureMismatch("submodules of another module");
  const PrimalityVerdict v = classify(n);
  if (!v.is_weakly_primal) throw HypothesisUnmet("N is not weakly primal");
  if (v.gw.members.intersects(lm.localized_ring()->s().members())) throw HypothesisUnmet("GW(N) meets S");
  ColonLocalization out;
  out.extended_colon = extend_ideal(*lm.localized_ring(), colon_into_ring(n, l)).members();
  out.localized_colon = colon_into_ring(extend_submodule(lm, n), extend_submodule(lm, l)).members();
  out.equal = out.extended_colon == out.localized_colon;
  return out;
}

Correspondence correspondence_check(const LocalizedModule& lm, const GradedIdeal& p, std::size_t bound) {
  const LocalizedRing& lr = *lm.localized_ring();
  if (p.ring() != lr.base()) throw StructureMismatch("ideal of another ring");
  if (p.is_unit()) throw HypothesisUnmet("P is the unit ideal");
  if (!is_graded_weakly_prime_ideal(p).holds) throw HypothesisUnmet("P is not graded weakly prime");
  if (p.members().intersects(lr.s().members())) throw HypothesisUnmet("P meets S");

  const Subset p_s = extend_ideal(lr, p).members();
  auto has_adjoint = [](const GradedSubmodule& n, const Subset& ideal) {
    const PrimalityVerdict v = classify(n);
    return v.is_weakly_primal && v.adjoint->members() == ideal;
  };

  Correspondence out;
  std::vector<GradedSubmodule> base_family;
  for (auto& n : enumerate_graded_submodules(lm.base(), bound)) {
    if (has_adjoint(n, p.members())) base_family.push_back(n);
  }
  std::vector<GradedSubmodule> local_family;
  for (auto& n : enumerate_graded_submodules(lm.module(), bound)) {
    if (has_adjoint(n, p_s)) local_family.push_back(n);
  }
  auto in_family = [](const std::vector<GradedSubmodule>& fam, const GradedSubmodule& x) {
    return std::find(fam.begin(), fam.end(), x) != fam.end();
  };
  auto fail = [&](const GradedSubmodule& n, bool localized, std::string reason) {
    if (!out.holds) return;
    out.holds = false;
    out.unmatched = n.members();
    out.unmatched_is_localized = localized;
    out.reason = std::move(reason);
  };

  for (const auto& n : base_family) {
    const GradedSubmodule ext = extend_submodule(lm, n);
    out.pairing.emplace_back(n.members(), ext.members());
    if (!in_family(local_family, ext)) fail(n, false, "N_S is not weakly primal with adjoint P_S");
    else if (!(contract(lm, ext) == n)) fail(n, false, "N_S n M differs from N");
  }
  for (const auto& n : local_family) {
    out.localized_family.push_back(n.members());
    const GradedSubmodule con = contract(lm, n);
    if (!in_family(base_family, con)) fail(n, true, "N' n M is not weakly primal with adjoint P");
    else if (!(extend_submodule(lm, con) == n)) fail(n, true, "(N' n M)_S differs from N'");
  }
  return out;
}

}  // namespace graded_lab
