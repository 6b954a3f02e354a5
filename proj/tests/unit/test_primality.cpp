#include <doctest.h>

#include "graded_lab/primality.hpp"
#include "oracles/naive.hpp"
#include "support/helpers.hpp"

using namespace graded_lab;
using testing_support::longs;
using testing_support::set_of;

namespace {

GradedSubmodule zn_sub(std::size_t n, Elem g) {
  return submodule_generated_by(self_module(make_Zn(n)), std::vector<Elem>{g});
}

}  // namespace

TEST_SUITE("primality") {

TEST_CASE("is_gwp_to_submodule") {
  auto n = zn_sub(24, 8);
  CHECK(is_gwp_to_submodule(0, n).gwp);
  auto two = is_gwp_to_submodule(2, n);
  CHECK_FALSE(two.gwp);
  REQUIRE(two.witness.has_value());
  CHECK(*two.witness == 4);
  CHECK(is_gwp_to_submodule(6, n).gwp);

  auto n32 = zn_sub(32, 8);
  auto four = is_gwp_to_submodule(4, n32);
  CHECK_FALSE(four.gwp);
  CHECK(four.witness == std::optional<Elem>{2});

  auto q = submodule_generated_by(self_module(make_quadratic(3, 1)), std::vector<Elem>{0});
  CHECK_THROWS_AS(is_gwp_to_submodule(4, q), NonHomogeneousScalar);
}

TEST_CASE("gw_set") {
  CHECK(gw_set(zn_sub(12, 0)).members.empty());
  auto gw = gw_set(zn_sub(24, 8));
  CHECK(longs(gw.members) == std::vector<long>{2, 4, 8, 10, 14, 16, 20, 22});
  CHECK(longs(gw.members) == oracle::Zn{24, 8}.gw());
  for (Elem x : gw.members) {
    REQUIRE(gw.witness[x].has_value());
    CHECK(oracle::Zn{24, 8}.ngwp_pair(x, *gw.witness[x]));
  }
  CHECK(gw_set(zn_sub(24, 1)).members.empty());
}

TEST_CASE("g_set") {
  CHECK(longs(g_set(zn_sub(12, 0)).members) == std::vector<long>{0, 2, 3, 4, 6, 8, 9, 10});
  CHECK(longs(g_set(zn_sub(12, 0)).members) == oracle::Zn{12, 12}.g());
  CHECK_FALSE(g_set(zn_sub(12, 0)).contains(1));
  CHECK(g_set(zn_sub(24, 1)).members.empty());
  auto g = g_set(zn_sub(24, 8));
  CHECK(g.contains(6));
  CHECK_FALSE(gw_set(zn_sub(24, 8)).contains(6));
}

TEST_CASE("w_set") {
  CHECK(w_set(zn_sub(12, 0)).members.empty());
  CHECK(w_set(zn_sub(24, 8)).members == gw_set(zn_sub(24, 8)).members);
  // Over Z_3[x]/(x^2-1) the ungraded set can contain non-homogeneous scalars.
  auto m = self_module(make_quadratic(3, 1));
  bool non_homogeneous_seen = false;
  for (const auto& n : enumerate_graded_submodules(m)) {
    auto w = w_set(n).members;
    CHECK(gw_set(n).members.is_subset_of(w));
    if (!w.is_subset_of(m->ring()->homogeneous())) non_homogeneous_seen = true;
  }
  auto f = free_module(make_quadratic(2, 1), 2);
  for (const auto& n : enumerate_graded_submodules(f)) {
    auto w = w_set(n).members;
    if (!w.is_subset_of(f->ring()->homogeneous())) non_homogeneous_seen = true;
  }
  CHECK(non_homogeneous_seen);
}

TEST_CASE("classify") {
  auto zero12 = classify(zn_sub(12, 0));
  CHECK(zero12.is_weakly_primal);
  REQUIRE(zero12.adjoint.has_value());
  CHECK(longs(zero12.adjoint->members()) == std::vector<long>{0});
  CHECK_FALSE(zero12.is_primal);

  auto eight = classify(zn_sub(24, 8));
  CHECK_FALSE(eight.is_weakly_primal);
  CHECK_FALSE(eight.adjoint.has_value());
  CHECK(eight.is_primal);
  CHECK(eight.weakly_primal_failure.failed == "not closed under addition");
  CHECK_FALSE(eight.is_weakly_prime);
  CHECK(eight.is_weakly_primary);

  auto two4 = classify(zn_sub(4, 2));
  CHECK(two4.is_weakly_primal);
  REQUIRE(two4.adjoint.has_value());
  CHECK(longs(two4.adjoint->members()) == std::vector<long>{0, 2});
}

TEST_CASE("classify agrees with the Z_n oracle") {
  for (long n = 2; n <= 24; ++n)
    for (long d : oracle::divisors(n)) {
      CAPTURE(n);
      CAPTURE(d);
      auto v = classify(zn_sub(static_cast<std::size_t>(n), static_cast<Elem>(d % n)));
      CHECK(longs(v.gw.members) == oracle::Zn{n, d}.gw());
      CHECK(longs(v.g.members) == oracle::Zn{n, d}.g());
      CHECK(v.is_weakly_primal == oracle::weakly_primal_zn(n, d));
      CHECK(v.is_primal == oracle::primal_zn(n, d));
    }
}

TEST_CASE("gw_set_ideal and weakly primal ideals") {
  auto r = make_Zn(4);
  CHECK(gw_set_ideal(GradedIdeal::zero(r)).members.empty());
  CHECK(is_graded_weakly_primal_ideal(GradedIdeal::zero(r)));
  auto two = ideal_generated_by(r, std::vector<Elem>{2});
  auto gw = gw_set_ideal(two);
  CHECK(longs(gw.members) == std::vector<long>{2});
  REQUIRE(gw.witness[2].has_value());
  const Elem y = *gw.witness[2];
  CHECK_FALSE(two.contains(y));
  CHECK(r->mul(2, y) == 2);
  CHECK(is_graded_weakly_primal_ideal(two));
  CHECK(gw_set_ideal(GradedIdeal::unit(r)).members.empty());
  CHECK(is_graded_weakly_primal_ideal(GradedIdeal::unit(r)));
}

TEST_CASE("characterization_check") {
  CHECK(characterization_check(zn_sub(12, 0), set_of(12, {0})).holds);
  auto r24 = make_Zn(24);
  auto c = characterization_check(zn_sub(24, 8), ideal_generated_by(r24, std::vector<Elem>{2}));
  CHECK_FALSE(c.holds);
  CHECK(c.scalar.has_value());
  auto r4 = make_Zn(4);
  CHECK(characterization_check(zn_sub(4, 2), ideal_generated_by(r4, std::vector<Elem>{2})).holds);
  CHECK_FALSE(characterization_check(zn_sub(24, 8), set_of(24, {0, 2, 4})).holds);
}

}  // TEST_SUITE
