#include "graded_lab/harness/ops.hpp"

#include <algorithm>

namespace graded_lab::harness {

Subset LocalView::extend_module(const Subset& n) const {
  Subset out(module->order());
  for (Elem x : n) {
    for (Elem s : denominators) out.insert(module_class_of(x, s));
  }
  return out;
}

Subset LocalView::extend_ring(const Subset& p) const {
  Subset out(ring->order());
  for (Elem x : p) {
    for (Elem s : denominators) out.insert(ring_class_of(x, s));
  }
  return out;
}

Subset LocalView::contract_module(const Subset& n) const {
  Subset out(base_module->order());
  for (Elem m = 0; m < base_module->order(); ++m) {
    if (n.contains(phi_module(m))) out.insert(m);
  }
  return out;
}

Subset LocalView::contract_ring(const Subset& p) const {
  Subset out(base_ring->order());
  for (Elem r = 0; r < base_ring->order(); ++r) {
    if (p.contains(phi_ring(r))) out.insert(r);
  }
  return out;
}

namespace {

GradedSubmodule sub(const ModulePtr& m, const Subset& n) { return GradedSubmodule::trusted(m, n); }

std::vector<Subset> members_of(const auto& items) {
  std::vector<Subset> out;
  out.reserve(items.size());
  for (const auto& i : items) out.push_back(i.members());
  return out;
}

class LibraryIntegerOracle final : public IntegerOracle {
 public:
  explicit LibraryIntegerOracle(long m) : model_(m) {}
  long modulus() const override { return model_.modulus(); }
  bool in_gw(long x) const override { return model_.in_gw(x); }
  bool in_g(long x) const override { return model_.in_g(x); }
  bool in_w(long x) const override { return model_.in_w(x); }
  std::optional<long> ngwp_witness(long x) const override { return model_.ngwp_witness(x); }
  bool weakly_primal() const override { return model_.is_weakly_primal(); }
  bool primal() const override { return model_.is_primal(); }
  bool weakly_prime() const override { return model_.is_weakly_prime(); }
  bool weakly_primary() const override { return model_.is_weakly_primary(); }

 private:
  IntegerModel model_;
};

class LibraryOps final : public AlgebraOps {
 public:
  std::string_view name() const override { return "library"; }

  std::vector<Subset> submodules(const ModulePtr& m) const override {
    return members_of(enumerate_graded_submodules(m));
  }
  std::vector<Subset> ideals(const RingPtr& r) const override { return members_of(enumerate_graded_ideals(r)); }
  std::vector<Subset> multiplicative_sets(const RingPtr& r) const override {
    return members_of(enumerate_multiplicative_sets(r));
  }

  bool is_ideal(const RingPtr& r, const Subset& s) const override { return is_graded_ideal(*r, s).ok; }

  Flags flags(const ModulePtr& m, const Subset& n) const override {
    PrimalityVerdict v = classify(sub(m, n));
    Flags f;
    f.gw = std::move(v.gw.members);
    f.gw_witness = std::move(v.gw.witness);
    f.g = std::move(v.g.members);
    f.w = std::move(v.w.members);
    f.weakly_primal = v.is_weakly_primal;
    f.primal = v.is_primal;
    f.weakly_prime = v.is_weakly_prime;
    f.weakly_primary = v.is_weakly_primary;
    return f;
  }

  Subset gw_ideal(const RingPtr& r, const Subset& p) const override {
    return gw_set_ideal(GradedIdeal::from_members(r, p)).members;
  }
  bool weakly_prime_ideal(const RingPtr& r, const Subset& p) const override {
    const GradedIdeal ideal = GradedIdeal::from_members(r, p);
    if (ideal.is_unit()) return true;  // the condition holds vacuously for R itself
    return is_graded_weakly_prime_ideal(ideal).holds;
  }
  bool characterization(const ModulePtr& m, const Subset& n, const Subset& p) const override {
    return characterization_check(sub(m, n), p).holds;
  }

  Subset colon_ring(const ModulePtr& m, const Subset& n, const Subset& l) const override {
    return colon_into_ring(sub(m, n), sub(m, l)).members();
  }
  Subset ann_module(const ModulePtr& m) const override { return ann_of_module(m).members(); }
  Subset ideal_times(const ModulePtr& m, const Subset& ideal, const Subset& n) const override {
    return ideal_times_submodule(GradedIdeal::from_members(m->ring(), ideal), sub(m, n)).members();
  }
  bool is_cyclic(const ModulePtr& m) const override { return graded_lab::is_cyclic(m).has_value(); }
  bool is_multiplication(const ModulePtr& m) const override {
    return graded_lab::is_multiplication(m).is_multiplication;
  }
  bool quotient_faithful(const ModulePtr& m, const Subset& n) const override {
    return is_faithful(quotient_module(sub(m, n)).module);
  }

  std::shared_ptr<const LocalView> localize(const ModulePtr& m, const Subset& s) const override {
    const MultiplicativeSet ms = MultiplicativeSet::from_members(m->ring(), s);
    LocalizedModulePtr lm = localize_module(m, ms);
    const LocalizedRing& lr = *lm->localized_ring();
    auto v = std::make_shared<LocalView>();
    v->base_ring = m->ring();
    v->base_module = m;
    v->ring = lr.ring();
    v->module = lm->module();
    v->denominators = lr.classes().denominators;
    v->den_index = lr.classes().den_index;
    v->ring_class = lr.classes().class_of_pair;
    v->module_class = lm->classes().class_of_pair;
    v->ring_rep = lr.classes().representative;
    v->module_rep = lm->classes().representative;
    v->equivalence_ok = lr.classes().equivalence.ok && lm->classes().equivalence.ok;
    if (!v->equivalence_ok) v->equivalence_detail = "fraction relation differs from its class partition";
    const HomomorphismCheck pr = check_phi(lr), pm = check_phi(*lm);
    v->phi_ok = pr.ok && pm.ok;
    v->phi_detail = pr.ok ? pm.failed : pr.failed;
    return v;
  }

  WpReport wp_ring(const RingPtr& r, std::size_t max_len, FactorConvention c) const override {
    return is_wp_ring(r, max_len, c);
  }
  WpReport wp_module(const ModulePtr& m, std::size_t max_len, FactorConvention c) const override {
    return is_wp_module(m, max_len, c);
  }

  std::shared_ptr<const IntegerOracle> integer(long m) const override {
    return std::make_shared<LibraryIntegerOracle>(m);
  }
};

class ReferenceOps final : public AlgebraOps {
 public:
  std::string_view name() const override { return "reference"; }

  std::vector<Subset> submodules(const ModulePtr& m) const override { return reference::submodules(*m); }
  std::vector<Subset> ideals(const RingPtr& r) const override { return reference::ideals(*r); }
  std::vector<Subset> multiplicative_sets(const RingPtr& r) const override;

  bool is_ideal(const RingPtr& r, const Subset& s) const override { return reference::is_ideal(*r, s); }
  Flags flags(const ModulePtr& m, const Subset& n) const override { return reference::flags(*m, n); }
  Subset gw_ideal(const RingPtr& r, const Subset& p) const override { return reference::gw_ideal(*r, p); }
  bool weakly_prime_ideal(const RingPtr& r, const Subset& p) const override {
    return reference::weakly_prime_ideal(*r, p);
  }
  bool characterization(const ModulePtr& m, const Subset& n, const Subset& p) const override {
    return reference::characterization(*m, n, p);
  }
  Subset colon_ring(const ModulePtr& m, const Subset& n, const Subset& l) const override {
    return reference::colon_ring(*m, n, l);
  }
  Subset ann_module(const ModulePtr& m) const override {
    return reference::colon_ring(*m, Subset(m->order(), {m->zero()}), m->all());
  }
  Subset ideal_times(const ModulePtr& m, const Subset& ideal, const Subset& n) const override {
    return reference::ideal_times(*m, ideal, n);
  }
  bool is_cyclic(const ModulePtr& m) const override {
    for (Elem h : m->homogeneous()) {
      if (reference::submodule_closure(*m, Subset(m->order(), {h})).size() == m->order()) return true;
    }
    return m->order() == 1;
  }
  bool is_multiplication(const ModulePtr& m) const override { return reference::is_multiplication(*m); }
  bool quotient_faithful(const ModulePtr& m, const Subset& n) const override {
    const GradedRing& R = *m->ring();
    for (Elem r = 0; r < R.order(); ++r) {
      if (r == R.zero()) continue;
      bool kills = true;
      for (Elem x = 0; x < m->order() && kills; ++x) kills = n.contains(m->act(r, x));
      if (kills) return false;
    }
    return true;
  }

  std::shared_ptr<const LocalView> localize(const ModulePtr& m, const Subset& s) const override {
    return reference::localize(m, s);
  }

  WpReport wp_ring(const RingPtr& r, std::size_t max_len, FactorConvention c) const override {
    WpReport out;
    for (const Subset& target : reference::ideals(*r)) {
      auto f = reference::find_ideal_factorization(r, target, max_len, c);
      if (!f && out.is_wp) {
        out.is_wp = false;
        out.first_unfactorable = target;
      }
      out.factorizations.push_back(std::move(f));
    }
    return out;
  }
  WpReport wp_module(const ModulePtr& m, std::size_t max_len, FactorConvention c) const override {
    WpReport out;
    for (const Subset& target : reference::submodules(*m)) {
      auto f = reference::find_factorization(m, target, max_len, c);
      if (!f && out.is_wp) {
        out.is_wp = false;
        out.first_unfactorable = target;
      }
      out.factorizations.push_back(std::move(f));
    }
    return out;
  }

  std::shared_ptr<const IntegerOracle> integer(long m) const override { return reference::integer_oracle(m); }
};

std::vector<Subset> ReferenceOps::multiplicative_sets(const RingPtr& r) const {
  const GradedRing& R = *r;
  auto close = [&](Subset s) -> std::optional<Subset> {
    bool grew = true;
    while (grew) {
      grew = false;
      for (Elem a : s.members()) {
        for (Elem b : s.members()) {
          const Elem ab = R.mul(a, b);
          if (ab == R.zero()) return std::nullopt;
          if (!s.contains(ab)) {
            s.insert(ab);
            grew = true;
          }
        }
      }
    }
    return s;
  };
  std::vector<Subset> found;
  if (R.one() == R.zero() || !R.is_homogeneous(R.one())) return found;
  std::vector<Subset> queue{Subset(R.order(), {R.one()})};
  found.push_back(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Elem h : R.homogeneous()) {
      if (h == R.zero() || queue[i].contains(h)) continue;
      Subset next = queue[i];
      next.insert(h);
      auto closed = close(next);
      if (!closed) continue;
      if (std::find(found.begin(), found.end(), *closed) != found.end()) continue;
      found.push_back(*closed);
      queue.push_back(*closed);
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

}  // namespace

const AlgebraOps& library_ops() {
  static const LibraryOps ops;
  return ops;
}

const AlgebraOps& reference_ops() {
  static const ReferenceOps ops;
  return ops;
}

}  // namespace graded_lab::harness
