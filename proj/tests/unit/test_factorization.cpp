#include <doctest.h>

#include "graded_lab/factorization.hpp"
#include "graded_lab/harness/ops.hpp"
#include "graded_lab/primality.hpp"
#include "support/helpers.hpp"

using namespace graded_lab;
using testing_support::longs;

TEST_SUITE("factorization") {

TEST_CASE("Z_4 is a WP-ring with one factor per ideal") {
  auto rep = is_wp_ring(make_Zn(4));
  CHECK(rep.is_wp);
  REQUIRE(rep.factorizations.size() == 3);
  for (const auto& f : rep.factorizations) {
    REQUIRE(f.has_value());
    CHECK(f->factors.size() == 1);
    CHECK(f->factors[0] == f->target);
  }
}

TEST_CASE("fields are WP-rings") {
  for (std::size_t p : {2u, 3u, 5u, 7u, 11u}) CHECK(is_wp_ring(make_Zn(p)).is_wp);
}

TEST_CASE("Z_12 search agrees with the naive tuple search") {
  auto r = make_Zn(12);
  for (auto c : {FactorConvention::AnyIdeal, FactorConvention::ProperIdeals}) {
    auto rep = is_wp_ring(r, 4, c);
    auto ideals = enumerate_graded_ideals(r);
    REQUIRE(rep.factorizations.size() == ideals.size());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      auto naive = harness::reference::find_ideal_factorization(r, ideals[i].members(), 4, c);
      CHECK(rep.factorizations[i].has_value() == naive.has_value());
      if (rep.factorizations[i]) CHECK(revalidate(r, *rep.factorizations[i], c).ok);
    }
  }
}

TEST_CASE("a weakly primal submodule factors with no ideal factors") {
  auto m = self_module(make_Zn(12));
  auto n = GradedSubmodule::zero(m);
  REQUIRE(classify(n).is_weakly_primal);
  auto f = weakly_primal_factorization(n);
  REQUIRE(f.found.has_value());
  CHECK(f.found->factors.empty());
  CHECK(f.found->tail == n.members());
}

TEST_CASE("8Z_24 needs at least one ideal factor") {
  auto m = self_module(make_Zn(24));
  auto n = submodule_generated_by(m, std::vector<Elem>{8});
  auto f = weakly_primal_factorization(n);
  CHECK(f.searched > 0);
  if (f.found) {
    CHECK_FALSE(f.found->factors.empty());
    CHECK(revalidate(m, *f.found, FactorConvention::AnyIdeal).ok);
  }
  auto again = weakly_primal_factorization(n);
  CHECK(again.searched == f.searched);
  CHECK(again.found.has_value() == f.found.has_value());
}

TEST_CASE("zero module is a WP-module") {
  auto z = zero_module(make_Zn(6));
  auto rep = is_wp_module(z);
  CHECK(rep.is_wp);
  REQUIRE(rep.factorizations.size() == 1);
  REQUIRE(rep.factorizations[0].has_value());
  CHECK(rep.factorizations[0]->factors.empty());
}

TEST_CASE("tampered factorizations fail revalidation") {
  auto r = make_Zn(24);
  auto m = self_module(r);
  Factorization f;
  f.target = submodule_generated_by(m, std::vector<Elem>{8}).members();
  f.tail = f.target;  // 8Z_24 is not weakly primal
  auto c = revalidate(m, f, FactorConvention::AnyIdeal);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.failed.empty());

  Factorization g;
  g.target = ideal_generated_by(r, std::vector<Elem>{4}).members();
  g.factors = {ideal_generated_by(r, std::vector<Elem>{2}).members()};
  CHECK_FALSE(revalidate(r, g, FactorConvention::AnyIdeal).ok);

  Factorization u;
  u.target = r->all();
  u.factors = {r->all()};
  CHECK(revalidate(r, u, FactorConvention::AnyIdeal).ok);
  CHECK_FALSE(revalidate(r, u, FactorConvention::ProperIdeals).ok);
}

TEST_CASE("check_thm5 guards its hypothesis") {
  auto r = make_Zn(24);
  auto quotient = quotient_module(submodule_generated_by(self_module(r), std::vector<Elem>{12})).module;
  CHECK(check_thm5(quotient).status == ClaimStatus::HypothesisUnmet);
  CHECK(check_thm5(free_module(make_Zn(2), 2)).status == ClaimStatus::HypothesisUnmet);
  auto z4 = check_thm5(self_module(make_Zn(4)));
  CHECK(z4.status == ClaimStatus::Confirmed);
  CHECK(z4.ring.is_wp);
  CHECK(z4.module.is_wp);
}

TEST_CASE("check_rem2") {
  auto r = make_Zn(12);
  auto m = self_module(r);
  for (const auto& p : enumerate_graded_ideals(r)) {
    auto out = check_rem2(m, p);
    CHECK(out.status == ClaimStatus::Confirmed);
    REQUIRE(out.colon.has_value());
    CHECK(*out.colon == p.members());
  }
  auto f = free_module(make_Zn(2), 2);
  CHECK(check_rem2(f, GradedIdeal::zero(f->ring())).status == ClaimStatus::HypothesisUnmet);
}

}  // TEST_SUITE
