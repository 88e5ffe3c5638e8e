#include <random>

#include "doctest.h"
#include "ljmod/arith.hpp"
#include "ljmod/errors.hpp"

using namespace ljmod;
using namespace ljmod::arith;

namespace {

long long naive_lpart(long long n, long long l) {
  long long p = 1;
  while (n % l == 0) {
    n /= l;
    p *= l;
  }
  return p;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("l_part examples and multiplicativity") {
  CHECK(l_part(8, 2) == 8);
  CHECK(l_part(8, 3) == 1);
  CHECK(l_part(36, 3) == 9);
  for (long long l : {2, 3, 5, 7}) {
    for (long long n = 1; n <= 400; ++n)
      for (long long m = 1; m <= 400; m += 7) CHECK(l_part(BigInt(n * m), l) == l_part(n, l) * l_part(m, l));
    std::mt19937_64 rng(static_cast<unsigned>(l));
    std::uniform_int_distribution<long long> pick(1, 10000);
    for (int t = 0; t < 5000; ++t) {
      const long long n = pick(rng), m = pick(rng);
      CHECK(l_part(BigInt(n) * m, l) == BigInt(naive_lpart(n, l) * naive_lpart(m, l)));
    }
  }
}

TEST_CASE("a_invariant") {
  CHECK(a_invariant(2, 1, 5) == 8);
  CHECK(a_invariant(2, 2, 5) == 24);
  CHECK(a_invariant(6, 3, 2) == 14);
  CHECK_THROWS_AS(a_invariant(6, 4, 2), DomainError);
  CHECK(a_invariant(40, 40, 3) == BigInt("12157665459056928800"));
}

TEST_CASE("congruence count identity on the grid") {
  for (long long l : {2, 3, 5, 7})
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
      if (q % l == 0) continue;
      for (long long dp = 1; dp <= 12; ++dp)
        for (long long t = 1; t <= dp; ++t) {
          if (dp % t) continue;
          for (long long r = 1; r <= 12; ++r) {
            CHECK(l_part(BigInt(r), l) * l_part(a_invariant(dp, t, q), l) == l_part(a_invariant(dp * r, t, q), l));
            const BigInt m = l_part(a_invariant(dp, t, q), l);
            CHECK(is_l_superspeh(m, r, dp, t, q, l));
            CHECK(is_l_superspeh(m, r, dp, t, q, l) ==
                  (speh_congruence_count(m, r, l) == l_part(a_invariant(dp * r, t, q), l)));
            if (m > 1) CHECK_FALSE(is_l_superspeh(m / l, r, dp, t, q, l));
          }
        }
    }
}

TEST_CASE("speh congruence count") {
  CHECK(speh_congruence_count(2, 3, 3) == 6);
  CHECK(speh_congruence_count(1, 1, 5) == 1);
  CHECK(speh_congruence_count(1, 12, 2) == 4);
}

TEST_CASE("multiplicative order") {
  CHECK(mult_order(5, 3) == 2);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(7, 3) == 1);
  CHECK(mult_order(11, 5) == 1);
  CHECK_THROWS_AS(mult_order(6, 3), DomainError);
  CHECK_THROWS_AS(mult_order(5, 4), DomainError);
  for (long long l : {3, 5, 7, 11, 13})
    for (long long q = 2; q < 60; ++q) {
      if (q % l == 0) continue;
      const long long e = mult_order(q, l);
      long long p = 1;
      for (long long k = 1; k <= e; ++k) {
        p = p * (q % l) % l;
        CHECK((p == 1) == (k == e));
      }
    }
}

TEST_CASE("block parameters") {
  const BlockParams b(2, 5, 3);
  CHECK(b.epsilon == 2);
  CHECK_THROWS_AS(BlockParams(2, 6, 3), DomainError);
  CHECK_THROWS_AS(BlockParams(2, 5, 5), DomainError);
  CHECK_THROWS_AS(BlockParams(0, 5, 3), DomainError);
  CHECK_THROWS_AS(BlockParams(2, 5, 4), DomainError);
}

TEST_CASE("superSpeh rank") {
  CHECK(superspeh_rank({1, 4, 1, 2}, true) == 2);
  CHECK(superspeh_rank({1, 4, 1, 3}, true) == 1);
  CHECK(superspeh_rank({1, 4, 1, 2}, false) == 0);
  for (long long r = 1; r <= 12; ++r)
    for (long long r0 = 1; r0 <= 12; ++r0) {
      const long long yes = superspeh_rank({1, r, 1, r0}, true);
      CHECK((yes == 1 || yes == r0));
      CHECK(yes != 0);
      CHECK(superspeh_rank({1, r, 1, r0}, false) == 0);
    }
}

TEST_CASE("effectivity screen") {
  CHECK(effectivity_screen(BlockParams(6, 5, 3), RepKind::NonElliptic) == Screen::Zero);
  CHECK(effectivity_screen(BlockParams(4, 7, 3), RepKind::Other) == Screen::Effective);  // epsilon = 1
  CHECK(effectivity_screen(BlockParams(6, 5, 3), RepKind::Other) == Screen::Undecided);  // epsilon = 2 | 6
  CHECK(effectivity_screen(BlockParams(2, 5, 3), RepKind::Other) == Screen::Effective);  // epsilon = d
  CHECK(effectivity_screen(BlockParams(6, 5, 3), RepKind::Liftable) == Screen::Effective);
  CHECK(parse_rep_kind("nu-stable") == RepKind::NuStable);
  CHECK_THROWS_AS(parse_rep_kind("elliptic"), DomainError);
  for (long long l : {3, 5, 7, 11, 13})
    for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
      if (q % l == 0) continue;
      for (long long d = 1; d <= 12; ++d) {
        const BlockParams b(d, q, l);
        const bool proper = b.epsilon != 1 && b.epsilon != d && d % b.epsilon == 0;
        CHECK((effectivity_screen(b, RepKind::Other) == Screen::Undecided) == proper);
      }
    }
}

}  // TEST_SUITE
