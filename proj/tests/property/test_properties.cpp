#include <doctest.h>

#include "graded_lab/factorization.hpp"
#include "graded_lab/harness/ops.hpp"
#include "graded_lab/localization.hpp"
#include "graded_lab/primality.hpp"
#include "support/gen.hpp"

using namespace graded_lab;
namespace ref = graded_lab::harness::reference;

namespace {

constexpr int kTrials = 40;

std::vector<GradedSubmodule> submodules_of(const ModulePtr& m) { return enumerate_graded_submodules(m); }

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("direct-sum decomposition reconstructs every element") {
  gen::Source src;
  for (int t = 0; t < kTrials; ++t) {
    auto r = gen::ring(src);
    std::size_t product = 1;
    for (Degree g = 0; g < r->group().size(); ++g) product *= r->component(g).size();
    CHECK(product == r->order());
    for (Elem x = 0; x < r->order(); ++x) {
      Elem sum = r->zero();
      for (Degree g = 0; g < r->group().size(); ++g) {
        CHECK(r->component(g).contains(r->part(x, g)));
        sum = r->add(sum, r->part(x, g));
      }
      CHECK(sum == x);
    }
  }
}

TEST_CASE("ideal_generated_by is idempotent and monotone") {
  gen::Source src(1);
  for (int t = 0; t < kTrials; ++t) {
    auto r = gen::ring(src);
    Subset a = src.subset(r->order(), 0.1) & r->homogeneous();
    Subset b = a | (src.subset(r->order(), 0.1) & r->homogeneous());
    auto ia = ideal_generated_by(r, a);
    CHECK(ideal_generated_by(r, ia.members()) == ia);
    CHECK(ia.members().is_subset_of(ideal_generated_by(r, b).members()));
    CHECK(is_graded_ideal(*r, ia.members()));
    CHECK(ia.members() == ref::ideal_closure(*r, a));
  }
}

TEST_CASE("ideal lists are closed under product and intersection") {
  gen::Source src(2);
  for (int t = 0; t < 15; ++t) {
    auto r = gen::ring(src);
    auto ideals = enumerate_graded_ideals(r);
    std::vector<Subset> naive = ref::ideals(*r);
    REQUIRE(naive.size() == ideals.size());
    for (std::size_t i = 0; i < ideals.size(); ++i) CHECK(naive[i] == ideals[i].members());
    const auto& i1 = src.pick(ideals);
    const auto& i2 = src.pick(ideals);
    auto has = [&](const Subset& s) {
      for (const auto& i : ideals)
        if (i.members() == s) return true;
      return false;
    };
    CHECK(has(ideal_product(i1, i2).members()));
    CHECK(has(ideal_intersection(i1, i2).members()));
    CHECK(ideal_product(i1, i2) == ideal_product(i2, i1));
    CHECK(ideal_product(i1, i2).members() == ref::ideal_product(*r, i1.members(), i2.members()));
  }
}

TEST_CASE("radical contains the homogeneous part of the ideal") {
  gen::Source src(3);
  for (int t = 0; t < kTrials; ++t) {
    auto r = gen::ring(src);
    auto i = src.pick(enumerate_graded_ideals(r));
    Subset rad = homogeneous_radical(i);
    CHECK((i.members() & r->homogeneous()).is_subset_of(rad));
    CHECK(homogeneous_radical(ideal_generated_by(r, rad)) == rad);
  }
}

TEST_CASE("weakly prime ideal test agrees with the naive double loop") {
  gen::Source src(4);
  for (int t = 0; t < kTrials; ++t) {
    auto r = gen::ring(src);
    if (r->order() > 16) continue;
    for (const auto& i : enumerate_graded_ideals(r)) {
      if (i.is_unit()) continue;
      CHECK(is_graded_weakly_prime_ideal(i).holds == ref::weakly_prime_ideal(*r, i.members()));
    }
  }
}

TEST_CASE("colon constructions") {
  gen::Source src(5);
  for (int t = 0; t < kTrials; ++t) {
    auto r = gen::ring(src);
    auto m = gen::module(src, r);
    auto subs = submodules_of(m);
    auto n = src.pick(subs);
    auto col = colon_into_ring(n);
    CHECK(is_graded_ideal(*r, col.members()));
    CHECK(ideal_times_module(col, m).members().is_subset_of(n.members()));
    for (Elem s : r->homogeneous()) {
      auto cs = colon_into_module(n, s);
      CHECK(is_graded_submodule(*m, cs.members()));
      CHECK(n.members().is_subset_of(cs.members()));
      for (Elem x : cs.members()) CHECK(n.contains(m->act(s, x)));
    }
    auto q = quotient_module(n);
    CHECK(q.module->order() * n.size() == m->order());
    CHECK(col.members().is_subset_of(ann_of_module(q.module).members()));
  }
}

TEST_CASE("multiplication modules are exactly those with N = (N:M)M") {
  gen::Source src(6);
  for (int t = 0; t < 20; ++t) {
    auto r = gen::ring(src);
    auto m = gen::module(src, r);
    bool all_equal = true;
    for (const auto& n : submodules_of(m))
      all_equal = all_equal && ideal_times_module(colon_into_ring(n), m) == n;
    CHECK(is_multiplication(m).is_multiplication == all_equal);
    CHECK(ref::is_multiplication(*m) == all_equal);
  }
}

TEST_CASE("primality invariants") {
  gen::Source src(7);
  for (int t = 0; t < kTrials; ++t) {
    auto r = gen::ring(src);
    auto m = gen::module(src, r);
    for (const auto& n : submodules_of(m)) {
      auto v = classify(n);
      CHECK_FALSE(v.gw.contains(r->zero()));
      CHECK(v.gw.members.is_subset_of(v.g.members));
      if (v.is_weakly_prime) CHECK(v.is_weakly_primary);
      if (r->trivially_graded()) CHECK(v.w.members == v.gw.members);
      CHECK(v.adjoint.has_value() == v.is_weakly_primal);
      for (Elem x : v.gw.members) {
        REQUIRE(v.gw.witness[x].has_value());
        const Elem w = *v.gw.witness[x];
        const Elem xw = m->act(x, w);
        CHECK(m->is_homogeneous(w));
        CHECK_FALSE(n.contains(w));
        CHECK(n.contains(xw));
        CHECK(xw != m->zero());
      }
      auto f = ref::flags(*m, n.members());
      CHECK(f.gw == v.gw.members);
      CHECK(f.g == v.g.members);
      CHECK(f.w == v.w.members);
      CHECK(f.weakly_primal == v.is_weakly_primal);
      CHECK(f.primal == v.is_primal);
      CHECK(f.weakly_prime == v.is_weakly_prime);
      CHECK(f.weakly_primary == v.is_weakly_primary);
    }
  }
}

TEST_CASE("localization invariants") {
  gen::Source src(8);
  for (int t = 0; t < 25; ++t) {
    auto r = gen::ring(src);
    auto m = gen::module(src, r);
    auto sets = enumerate_multiplicative_sets(r);
    const auto& s = src.pick(sets);
    auto lm = localize_module(m, s);
    CHECK(lm->classes().equivalence.ok);
    CHECK(lm->localized_ring()->classes().equivalence.ok);
    CHECK(check_phi(*lm).ok);
    CHECK(check_phi(*lm->localized_ring()).ok);
    CHECK(validate_ring(lm->localized_ring()->ring()->tables()).ok());
    auto view = ref::localize(m, s.members());
    CHECK(view->ring->order() == lm->localized_ring()->ring()->order());
    CHECK(view->module->order() == lm->module()->order());
    auto subs = submodules_of(m);
    for (const auto& n : subs) {
      auto ns = extend_submodule(*lm, n);
      CHECK(n.members().is_subset_of(contract(*lm, ns).members()));
      const auto& other = src.pick(subs);
      if (n.members().is_subset_of(other.members()))
        CHECK(ns.members().is_subset_of(extend_submodule(*lm, other).members()));
    }
  }
}

TEST_CASE("characterization agrees with weak primality") {
  gen::Source src(9);
  for (int t = 0; t < kTrials; ++t) {
    auto r = gen::ring(src);
    auto m = gen::module(src, r);
    for (const auto& n : submodules_of(m)) {
      auto v = classify(n);
      Subset p = v.gw.members;
      p.insert(r->zero());
      CHECK(characterization_check(n, p).holds == v.is_weakly_primal);
      CHECK(ref::characterization(*m, n.members(), p) == v.is_weakly_primal);
    }
  }
}

TEST_CASE("factorizations revalidate and the empty product matches weak primality") {
  gen::Source src(10);
  for (int t = 0; t < 15; ++t) {
    auto r = gen::ring(src);
    auto m = gen::module(src, r);
    for (auto c : {FactorConvention::AnyIdeal, FactorConvention::ProperIdeals}) {
      auto rep = is_wp_module(m, 3, c);
      auto subs = submodules_of(m);
      REQUIRE(rep.factorizations.size() == subs.size());
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!rep.factorizations[i]) continue;
        CHECK(revalidate(m, *rep.factorizations[i], c).ok);
        CHECK(rep.factorizations[i]->factors.empty() == classify(subs[i]).is_weakly_primal);
      }
    }
  }
}

}  // TEST_SUITE
