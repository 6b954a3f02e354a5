#include <doctest.h>

#include "graded_lab/integer_backend.hpp"
#include "graded_lab/primality.hpp"
#include "oracles/naive.hpp"
#include "support/helpers.hpp"

using namespace graded_lab;
using testing_support::longs;

TEST_SUITE("module_core") {

TEST_CASE("zinstance validation") {
  CHECK_NOTHROW(check_zinstance(ZMultiples{12}));
  CHECK_THROWS_AS(check_zinstance(ZMultiples{0}), std::invalid_argument);
  CHECK_THROWS_AS(check_zinstance(ZnQuotient{24, 5}), std::invalid_argument);
  CHECK_NOTHROW(check_zinstance(ZnQuotient{24, 24}));
}

TEST_CASE("table model of (Z_24, 8Z_24)") {
  auto t = zinstance_to_table(ZnQuotient{24, 8});
  CHECK(t.ring->order() == 24);
  CHECK(longs(t.submodule.members()) == std::vector<long>{0, 8, 16});
  CHECK_FALSE(t.surrogate_note.empty());
  auto full = zinstance_to_table(ZnQuotient{12, 12});
  CHECK(full.submodule.size() == 1);
}

TEST_CASE("(Z, 12Z): 3 is not weakly prime with witness 4") {
  IntegerModel z(12);
  auto w = z.ngwp_witness(3);
  REQUIRE(w.has_value());
  CHECK(*w == 4);
  CHECK((3 * *w) % 12 == 0);
  CHECK(*w % 12 != 0);
  CHECK_FALSE(z.in_gw(1));
  CHECK_FALSE(z.in_gw(-1));
  CHECK_FALSE(z.in_gw(0));
  CHECK(z.in_gw(12));
  CHECK(z.in_colon(-24));
  CHECK_FALSE(z.in_colon(6));
}

TEST_CASE("(Z, mZ) residue model agrees with the windowed oracle") {
  for (long m = 1; m <= 16; ++m) {
    IntegerModel z(m);
    oracle::Integers o{m, 4 * m};
    for (long x = -4 * m; x <= 4 * m; ++x) {
      CAPTURE(m);
      CAPTURE(x);
      CHECK(z.in_gw(x) == o.in_gw(x));
      CHECK(z.in_g(x) == o.in_g(x));
      CHECK(z.in_w(x) == o.in_gw(x));
      if (x != 0) CHECK(z.gw_residues().contains(static_cast<Elem>(z.residue(x))) == o.in_gw(x));
    }
  }
}

TEST_CASE("(Z, mZ) flags") {
  // GW(12Z) + {0} is the preimage of the zero divisors of Z_12, which is not an ideal.
  CHECK_FALSE(IntegerModel(12).is_weakly_primal());
  CHECK(IntegerModel(7).is_weakly_primal());
  CHECK(IntegerModel(4).is_weakly_primal());
  CHECK(IntegerModel(9).is_primal());
  CHECK(IntegerModel(7).is_weakly_prime());
  CHECK_FALSE(IntegerModel(4).is_weakly_prime());
  CHECK(IntegerModel(4).is_weakly_primary());
  CHECK_FALSE(IntegerModel(6).is_weakly_primary());
}

TEST_CASE("integer surrogate is Z_m over itself") {
  IntegerModel z(12);
  CHECK(z.modulus() == 12);
  CHECK(z.surrogate().ring->order() == 12);
  CHECK(z.surrogate().submodule.size() == 1);
  CHECK(z.residue(-5) == 7);
}

}  // TEST_SUITE
