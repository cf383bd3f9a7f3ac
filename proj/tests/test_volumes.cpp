#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gammalift/volumes.hpp"

#include <vector>

using namespace gammalift;

namespace {

BigRational qpow(long p, long e) {
  BigRational out(1);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out = out * BigRational(p);
  if (e < 0) return BigRational(1) / out;
  return out;
}

} // namespace

TEST_CASE("plain product map gives the telescoping volume") {
  for (long p : {3L, 5L})
    for (long v = 2; v <= 8; ++v)
      for (long u : {1L, 2L}) {
        BigRational V = monomial_fiber_volume({1, 1}, {0}, p, v, u, 2);
        CHECK(V == qpow(p, -1) - qpow(p, -v));
      }
  // A unit target admits no splitting into positive valuations.
  CHECK(monomial_fiber_volume({1, 1}, {0}, 3, 1, 1, 2) == BigRational(0));
  CHECK(monomial_fiber_volume({1, 1}, {0}, 3, 0, 1, 2) == BigRational(0));
}

TEST_CASE("squaring map sees the square class of the unit") {
  // 4 = 2^2 is a square mod 5, 2 is not.
  CHECK(monomial_fiber_volume({2}, {}, 5, 4, 4, 3) == BigRational(2));
  CHECK(monomial_fiber_volume({2}, {}, 5, 4, 2, 3) == BigRational(0));
  CHECK(monomial_fiber_volume({2}, {}, 5, 3, 4, 3) == BigRational(0)); // odd valuation
  CHECK(monomial_fiber_volume({2}, {}, 5, 6, 1, 3) == BigRational(2));
}

TEST_CASE("density twist sharpens the decay") {
  for (long p : {3L, 5L}) {
    BigRational shell = BigRational(p - 1, p);
    CHECK(monomial_fiber_volume({1, 1}, {1}, p, 2, 1, 2) == qpow(p, -2) * shell);
    CHECK(monomial_fiber_volume({1, 1}, {1}, p, 3, 1, 2) ==
          (qpow(p, -2) + qpow(p, -4)) * shell);
  }
}

TEST_CASE("volume is invariant under unit shifts by n_1-th powers") {
  for (long p : {3L, 5L})
    for (long v = 2; v <= 8; ++v)
      for (long w : {2L, 4L, 7L}) {
        if (w % p == 0) continue;
        long shift = ((w * w) % (p * p * p)) * 1; // w^2, and n_1 = 2 below
        BigRational a = monomial_fiber_volume({2, 2}, {0}, p, v, 1, 3);
        BigRational b = monomial_fiber_volume({2, 2}, {0}, p, v, shift, 3);
        CHECK(a == b);
      }
}

TEST_CASE("square classes separate for the doubled product map") {
  // 2 is not a square mod 3 or mod 5.
  for (long p : {3L, 5L}) {
    BigRational square = monomial_fiber_volume({2, 2}, {0}, p, 6, 1, 3);
    BigRational nonsquare = monomial_fiber_volume({2, 2}, {0}, p, 6, 2, 3);
    CHECK(square == BigRational(2) * (qpow(p, -1) + qpow(p, -2)) * BigRational(p - 1, p));
    CHECK(nonsquare == BigRational(0));
  }
}

TEST_CASE("class count must stabilize in the level") {
  // gcd(3, N_level) jumps from 1 to 3 between levels 1 and 2 at p = 3.
  CHECK_THROWS_AS(monomial_fiber_volume({3, 3}, {0}, 3, 6, 1, 1), std::invalid_argument);
  BigRational stable = monomial_fiber_volume({3, 3}, {0}, 3, 6, 1, 2);
  CHECK(stable == BigRational(3) * qpow(3, -1) * BigRational(2, 3));
  CHECK(monomial_fiber_volume({3, 3}, {0}, 3, 6, 1, 3) == stable);
  // A generator of the unit group is not a cube there.
  CHECK(monomial_fiber_volume({3, 3}, {0}, 3, 6, 2, 2) == BigRational(0));
}

TEST_CASE("volume input validation") {
  CHECK_THROWS_AS(monomial_fiber_volume({1, 1}, {0}, 2, 4, 1, 2), std::domain_error);
  CHECK_THROWS_AS(monomial_fiber_volume({1, 1}, {0}, 9, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_fiber_volume({1, 1}, {0}, 3, 4, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_fiber_volume({1, 1}, {}, 3, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_fiber_volume({}, {}, 3, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_fiber_volume({0, 1}, {0}, 3, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_fiber_volume({1, 1}, {-1}, 3, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_fiber_volume({1, 1}, {0}, 3, 4, 1, 0), std::invalid_argument);
}
