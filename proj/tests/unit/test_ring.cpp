#include <doctest.h>

#include "graded_lab/graded_ring.hpp"
#include "support/helpers.hpp"

using namespace graded_lab;
using testing_support::has_axiom;
using testing_support::longs;

TEST_SUITE("algebra_core") {

TEST_CASE("Z_24 is a trivially graded ring of order 24") {
  auto r = make_Zn(24);
  CHECK(r->order() == 24);
  CHECK(r->zero() == 0);
  CHECK(r->one() == 1);
  CHECK(r->trivially_graded());
  CHECK(homogeneous_elements(*r).size() == 24);
  CHECK(r->add(20, 7) == 3);
  CHECK(r->mul(5, 7) == 11);
  CHECK(r->neg(5) == 19);
  CHECK(r->power(2, 3) == 8);
  CHECK(r->warnings().empty());
}

TEST_CASE("quadratic ring Z_3[x]/(x^2-1) has five homogeneous elements") {
  auto r = make_quadratic(3, 1);
  CHECK(r->order() == 9);
  CHECK(r->group().size() == 2);
  // c0 + 3 c1: constants 0,1,2 and x = 3, 2x = 6.
  CHECK(longs(homogeneous_elements(*r)) == std::vector<long>{0, 1, 2, 3, 6});
  CHECK(r->mul(3, 3) == 1);
  CHECK(r->degree(3) == Degree{1});
  CHECK(r->degree(2) == Degree{0});
  CHECK_FALSE(r->degree(4).has_value());
  CHECK(r->part(4, 0) == 1);
  CHECK(r->part(4, 1) == 3);
}

TEST_CASE("quadratic ring Z_5[x]/(x^2-2) has nine homogeneous elements") {
  CHECK(homogeneous_elements(*make_quadratic(5, 2)).size() == 9);
}

TEST_CASE("misassigned grading is a GradingViolation") {
  RingTables t = quadratic_tables(3, 1);
  // Constants declared in degree 1: 1 * 1 = 1 should then lie in degree 0.
  t.components = {{0, 3, 6}, {0, 1, 2}};
  auto v = validate_ring(t);
  CHECK_FALSE(v.ok());
  CHECK(has_axiom(v.errors, "GradingViolation"));
  CHECK_THROWS_AS(make_ring(t), ValidationError);
}

TEST_CASE("broken tables name the failed axiom") {
  RingTables t = make_Zn(3)->tables();
  t.mul[2 * 3 + 2] = 2;  // 2 * 2 = 2 breaks distributivity
  auto v = validate_ring(t);
  CHECK_FALSE(v.ok());
  CHECK(has_axiom(v.errors, "NonDistributive"));

  RingTables z = make_Zn(3)->tables();
  std::fill(z.mul.begin(), z.mul.end(), Elem{0});
  z.one.reset();
  CHECK(has_axiom(validate_ring(z).errors, "MissingIdentity"));

  RingTables c = make_Zn(3)->tables();
  c.mul[1 * 3 + 2] = 1;
  CHECK(has_axiom(validate_ring(c).errors, "NonCommutative"));

  RingTables d = make_Zn(4)->tables();
  d.components = {{0, 1}, {0, 2}};
  d.group = GradingGroup::cyclic(2);
  CHECK_FALSE(validate_ring(d).ok());
}

TEST_CASE("tables round trip through validation") {
  for (auto r : {make_Zn(12), make_quadratic(2, 0), make_quadratic(5, 4)}) {
    auto v = validate_ring(r->tables());
    REQUIRE(v.ok());
    CHECK(v.value->order() == r->order());
    CHECK(v.value->homogeneous() == r->homogeneous());
  }
}

TEST_CASE("direct products") {
  auto p = make_product(*make_Zn(2), *make_Zn(3));
  CHECK(p->order() == 6);
  CHECK(p->one() == 1 + 2 * 1);
  CHECK(p->mul(1, 2) == 0);  // (1,0) * (0,1)
  auto q = make_product(*make_quadratic(2, 1), *make_quadratic(2, 0));
  CHECK(q->order() == 16);
  CHECK(q->group().size() == 2);
  CHECK(homogeneous_elements(*q).size() == 7);
}

}  // TEST_SUITE
