#include <doctest.h>

#include "graded_lab/graded_module.hpp"
#include "graded_lab/submodule.hpp"
#include "oracles/naive.hpp"
#include "support/helpers.hpp"

using namespace graded_lab;
using testing_support::has_axiom;
using testing_support::longs;
using testing_support::set_of;

namespace {

GradedSubmodule gen(const ModulePtr& m, std::vector<Elem> g) { return submodule_generated_by(m, g); }

}  // namespace

TEST_SUITE("module_core") {

TEST_CASE("validate_module") {
  CHECK(self_module(make_Zn(24))->order() == 24);
  auto q = self_module(make_quadratic(3, 1));
  CHECK(q->homogeneous().size() == 5);

  ModuleTables t = self_module(make_Zn(4))->tables();
  t.action[2 * 4 + 3] = 0;  // 2 * 3 := 0, so (2*3)*1 = 2 != 2*(3*1) = 0
  auto v = validate_module(t);
  CHECK_FALSE(v.ok());
  CHECK(has_axiom(v.errors, "ActionAssociativity"));
  CHECK_THROWS_AS(make_module(t), ValidationError);

  ModuleTables u = self_module(make_Zn(4))->tables();
  u.action[1 * 4 + 1] = 3;
  CHECK(has_axiom(validate_module(u).errors, "UnitalAction"));
}

TEST_CASE("free, zero and direct-sum modules") {
  auto z2 = make_Zn(2);
  auto f = free_module(z2, 2);
  CHECK(f->order() == 4);
  CHECK(zero_module(z2)->order() == 1);
  auto s = direct_sum(*self_module(z2), *self_module(z2));
  CHECK(s->order() == 4);
  auto fq = free_module(make_quadratic(2, 0), 2);
  CHECK(fq->order() == 16);
  CHECK(fq->homogeneous().size() == 7);
}

TEST_CASE("colon_into_ring") {
  auto m = self_module(make_Zn(24));
  auto n = gen(m, {8});
  CHECK(longs(colon_into_ring(n).members()) == oracle::Zn{24, 8}.colon());
  CHECK(colon_into_ring(GradedSubmodule::whole(m)).is_unit());
  CHECK(colon_into_ring(GradedSubmodule::zero(m)).size() == 1);
  CHECK(colon_into_ring(n, gen(m, {16})).is_unit());
  CHECK(longs(colon_into_ring(n, gen(m, {12})).members()) == std::vector<long>{0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22});
}

TEST_CASE("colon_into_module") {
  auto m = self_module(make_Zn(24));
  auto r = m->ring();
  auto n = gen(m, {8});
  CHECK(longs(colon_into_module(n, Elem{2}).members()) == std::vector<long>{0, 4, 8, 12, 16, 20});
  CHECK(longs(colon_into_module(n, Elem{2}).members()) == oracle::Zn{24, 8}.colon_module(2));
  CHECK(colon_into_module(n, GradedIdeal::unit(r)) == n);
  CHECK(colon_into_module(n, GradedIdeal::zero(r)).is_whole());
}

TEST_CASE("annihilators and faithfulness") {
  auto z24 = make_Zn(24);
  auto m = self_module(z24);
  CHECK(longs(ann_in_module(2, m).members()) == std::vector<long>{0, 12});
  CHECK(is_faithful(m));
  // Z_12 as a Z_24-module.
  auto q = quotient_module(gen(m, {12})).module;
  CHECK(q->order() == 12);
  CHECK(longs(ann_of_module(q).members()) == std::vector<long>{0, 12});
  CHECK_FALSE(is_faithful(q));
}

TEST_CASE("quotient_module") {
  auto m = self_module(make_Zn(24));
  auto q = quotient_module(gen(m, {8}));
  CHECK(q.module->order() == 8);
  CHECK(q.projection[9] == q.projection[1]);
  CHECK(q.representative[q.projection[13]] == 5);
  CHECK(quotient_module(GradedSubmodule::whole(m)).module->order() == 1);
  auto same = quotient_module(GradedSubmodule::zero(m)).module;
  CHECK(same->order() == 24);
  for (Elem r = 0; r < 24; ++r)
    for (Elem x = 0; x < 24; ++x) CHECK(same->act(r, x) == m->act(r, x));
}

TEST_CASE("cyclic and multiplication modules") {
  auto m = self_module(make_Zn(24));
  REQUIRE(is_cyclic(m).has_value());
  CHECK(gen(m, {*is_cyclic(m)}).is_whole());
  CHECK(is_multiplication(m).is_multiplication);

  auto f = free_module(make_Zn(2), 2);
  CHECK_FALSE(is_cyclic(f).has_value());
  auto mult = is_multiplication(f);
  CHECK_FALSE(mult.is_multiplication);
  REQUIRE(mult.first_failure.has_value());
  CHECK(mult.first_failure->size() == 2);
  CHECK(colon_into_ring(*mult.first_failure).size() == 1);

  auto z = zero_module(make_Zn(5));
  CHECK(is_cyclic(z).has_value());
  CHECK(is_multiplication(z).is_multiplication);
  CHECK(is_finitely_generated(f).size() == 2);
}

TEST_CASE("ideal_times_module") {
  auto m = self_module(make_Zn(24));
  auto r = m->ring();
  CHECK(longs(ideal_times_module(ideal_generated_by(r, std::vector<Elem>{8}), m).members()) ==
        std::vector<long>{0, 8, 16});
  CHECK(ideal_times_module(GradedIdeal::unit(r), m).is_whole());
  CHECK(ideal_times_module(GradedIdeal::zero(r), m).size() == 1);
  auto n = gen(m, {6});
  CHECK(longs(ideal_times_submodule(ideal_generated_by(r, std::vector<Elem>{4}), n).members()) ==
        std::vector<long>{0});
}

TEST_CASE("enumerate_graded_submodules") {
  CHECK(enumerate_graded_submodules(self_module(make_Zn(12))).size() == 6);
  CHECK(enumerate_graded_submodules(zero_module(make_Zn(12))).size() == 1);
  CHECK(enumerate_graded_submodules(free_module(make_Zn(2), 2)).size() == 5);
  auto subs = enumerate_graded_submodules(self_module(make_quadratic(3, 1)));
  for (const auto& n : subs) CHECK(is_graded_submodule(*n.module(), n.members()));
  CHECK_THROWS_AS(enumerate_graded_submodules(self_module(make_Zn(70))), BudgetExceeded);
}

TEST_CASE("submodule validation") {
  auto m = self_module(make_Zn(24));
  CHECK(is_graded_submodule(*m, set_of(24, {0, 8, 16})));
  CHECK_FALSE(is_graded_submodule(*m, set_of(24, {0, 8})));
  CHECK_THROWS_AS(GradedSubmodule::from_members(m, set_of(24, {0, 3})), ValidationError);
}

}  // TEST_SUITE
