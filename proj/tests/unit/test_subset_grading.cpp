#include <doctest.h>

#include <algorithm>

#include "graded_lab/grading_group.hpp"
#include "graded_lab/subset.hpp"

using namespace graded_lab;

TEST_SUITE("algebra_core") {

TEST_CASE("subset membership across word boundaries") {
  Subset s(130, {0, 63, 64, 129});
  CHECK(s.size() == 4);
  CHECK(s.contains(63));
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK_FALSE(s.contains(500));
  CHECK(s.members() == std::vector<Elem>{0, 63, 64, 129});
  s.erase(63);
  CHECK(s.members() == std::vector<Elem>{0, 64, 129});
}

TEST_CASE("subset algebra") {
  Subset a(10, {1, 2, 3});
  Subset b(10, {3, 4});
  CHECK((a | b).members() == std::vector<Elem>{1, 2, 3, 4});
  CHECK((a & b).members() == std::vector<Elem>{3});
  CHECK((a - b).members() == std::vector<Elem>{1, 2});
  CHECK(a.intersects(b));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK((a & b).is_subset_of(a));
  CHECK(a.complement().size() == 7);
  CHECK(Subset::full(70).size() == 70);
  CHECK(Subset::full(70).complement().empty());
  CHECK(Subset(5).first() == 5);
  CHECK(a.first() == 1);
}

TEST_CASE("canonical order is size first, then members") {
  Subset small(8, {5});
  Subset a(8, {0, 7});
  Subset b(8, {1, 2});
  CHECK(canonical_less(small, a));
  CHECK(canonical_less(a, b));
  CHECK_FALSE(canonical_less(b, a));
  CHECK_FALSE(canonical_less(a, a));
  CHECK(SubsetHash{}(a) == SubsetHash{}(Subset(8, {7, 0})));
}

TEST_CASE("grading group arithmetic") {
  GradingGroup g({2, 3});
  CHECK(g.size() == 6);
  for (Degree a = 0; a < g.size(); ++a) {
    CHECK(g.add(a, g.identity()) == a);
    CHECK(g.add(a, g.negate(a)) == g.identity());
    CHECK(g.from_tuple(g.to_tuple(a)) == a);
    for (Degree b = 0; b < g.size(); ++b) {
      CHECK(g.add(a, b) == g.add(b, a));
      for (Degree c = 0; c < g.size(); ++c) CHECK(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
    }
  }
  const Degree x = g.from_tuple({1, 2});
  CHECK(g.to_tuple(g.add(x, x)) == std::vector<int>{0, 1});
  CHECK(GradingGroup::trivial().size() == 1);
  CHECK(GradingGroup::cyclic(4).size() == 4);
  CHECK(GradingGroup::cyclic(4) == GradingGroup({4}));
}

}  // TEST_SUITE
