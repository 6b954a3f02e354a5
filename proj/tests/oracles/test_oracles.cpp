#include <doctest.h>

#include "graded_lab/harness/ops.hpp"
#include "graded_lab/integer_backend.hpp"
#include "graded_lab/localization.hpp"
#include "graded_lab/primality.hpp"
#include "oracles/naive.hpp"
#include "support/helpers.hpp"

using namespace graded_lab;
using testing_support::longs;

TEST_SUITE("oracles") {

TEST_CASE("quadratic tables match pair arithmetic") {
  for (long n : {2L, 3L, 5L})
    for (long a = 0; a < n; ++a) {
      auto r = make_quadratic(static_cast<std::size_t>(n), static_cast<std::size_t>(a));
      oracle::Quad q{n, a};
      REQUIRE(static_cast<long>(r->order()) == q.order());
      CHECK(r->homogeneous().size() == q.homogeneous_count());
      for (long i = 0; i < q.order(); ++i) {
        CHECK(r->is_homogeneous(static_cast<Elem>(i)) == q.homogeneous(q.elem(i)));
        for (long j = 0; j < q.order(); ++j) {
          CHECK(static_cast<long>(r->add(static_cast<Elem>(i), static_cast<Elem>(j))) ==
                q.index(q.add(q.elem(i), q.elem(j))));
          CHECK(static_cast<long>(r->mul(static_cast<Elem>(i), static_cast<Elem>(j))) ==
                q.index(q.mul(q.elem(i), q.elem(j))));
        }
      }
    }
}

TEST_CASE("(Z_n, dZ_n) over Z agrees with the windowed oracle") {
  for (long n = 1; n <= 32; ++n)
    for (long d : oracle::divisors(n)) {
      CAPTURE(n);
      CAPTURE(d);
      QuotientModel q(ZnQuotient{n, d});
      harness::reference::ZnOracle z{n, d};
      for (long x = -4 * n; x <= 4 * n; ++x) {
        CHECK(q.in_gw(x) == z.in_gw(x));
        CHECK(q.in_g(x) == z.in_g(x));
        CHECK(q.in_w(x) == z.in_w(x));
        CHECK(q.in_colon(x) == z.in_colon(x));
      }
      CHECK(q.is_weakly_primal() == z.weakly_primal());
      CHECK(q.is_primal() == z.primal());
      if (d != 1) {
        CHECK(q.is_weakly_prime() == z.weakly_prime());
        CHECK(q.is_weakly_primary() == z.weakly_primary());
      }
    }
}

TEST_CASE("the Z_n table model decides weak primality over Z_n, not Z") {
  // (Z_4, 2Z_4): GW = {2}; {0, 2} is an ideal of Z_4, but 2 + 2 = 4 is weakly prime over Z.
  QuotientModel q(ZnQuotient{4, 2});
  CHECK(q.residue_verdict().is_weakly_primal);
  CHECK_FALSE(q.is_weakly_primal());
  CHECK_FALSE(harness::reference::ZnOracle{4, 2}.weakly_primal());
  for (long n = 1; n <= 32; ++n)
    for (long d : oracle::divisors(n)) {
      QuotientModel m(ZnQuotient{n, d});
      CHECK(m.is_weakly_primal() == m.residue_verdict().gw.members.empty());
      CHECK(m.is_primal() == m.residue_verdict().is_primal);
    }
}

TEST_CASE("reference Z_n oracle agrees with integer arithmetic") {
  for (long n = 2; n <= 20; ++n)
    for (long d : oracle::divisors(n)) {
      harness::reference::ZnOracle z{n, d};
      oracle::Zn o{n, d};
      auto gw = o.gw();
      for (long x = 0; x < n; ++x)
        CHECK(z.in_gw(x) == (std::find(gw.begin(), gw.end(), x) != gw.end()));
      // Over Z the nonzero multiples of n are weakly prime, so only an empty GW(N) gives an ideal.
      CHECK(z.weakly_primal() == gw.empty());
      CHECK(z.primal() == oracle::primal_zn(n, d));
    }
}

TEST_CASE("reference integer oracle agrees with the residue model") {
  for (long m = 2; m <= 16; ++m) {
    auto o = harness::reference::integer_oracle(m);
    IntegerModel z(m);
    CHECK(o->weakly_primal() == z.is_weakly_primal());
    CHECK(o->primal() == z.is_primal());
    CHECK(o->weakly_prime() == z.is_weakly_prime());
    CHECK(o->weakly_primary() == z.is_weakly_primary());
    for (long x = -2 * m; x <= 2 * m; ++x) {
      CHECK(o->in_gw(x) == z.in_gw(x));
      CHECK(o->in_g(x) == z.in_g(x));
    }
  }
}

TEST_CASE("localized orders of Z_n match union-find over pairs") {
  for (std::size_t n = 2; n <= 18; ++n) {
    auto r = make_Zn(n);
    for (const auto& s : enumerate_multiplicative_sets(r)) {
      auto lr = localize_ring(r, s);
      CHECK(lr->ring()->order() == oracle::localized_order_zn(static_cast<long>(n), longs(s.members())));
    }
  }
}

TEST_CASE("weakly primal ideals of Z_n") {
  for (long n = 2; n <= 24; ++n) {
    auto r = make_Zn(static_cast<std::size_t>(n));
    for (long d : oracle::divisors(n)) {
      auto p = ideal_generated_by(r, std::vector<Elem>{static_cast<Elem>(d % n)});
      // gw(dZ_n) over the ring equals GW(dZ_n) over the module Z_n.
      CHECK(longs(gw_set_ideal(p).members) == oracle::Zn{n, d}.gw());
    }
  }
}

}  // TEST_SUITE
