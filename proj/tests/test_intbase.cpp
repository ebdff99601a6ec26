#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selmer3/intbase.hpp"

using namespace selmer3;
using namespace selmer3::intbase;

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2));
  CHECK(is_prime(4409));
  CHECK_FALSE(is_prime(11891));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(1'000'000'007));
  CHECK(is_prime(9'223'372'036'854'775'783LL));  // largest 63-bit prime
  CHECK_FALSE(is_prime(3'215'031'751LL));        // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (i64 n = 2; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("factorize examples") {
  auto f = factorize(12);
  CHECK(f.sign == 1);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == PrimePower{2, 2});
  CHECK(f.factors[1] == PrimePower{3, 1});

  f = factorize(11891);
  CHECK(f.primes() == std::vector<i64>{11, 23, 47});

  f = factorize(-27);
  CHECK(f.sign == -1);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == PrimePower{3, 3});

  CHECK_THROWS_AS(factorize(0), InvalidArgument);
}

TEST_CASE("factorize matches trial division and multiplies back") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<i64> small(-2'000'000, 2'000'000);
  for (int i = 0; i < 2000; ++i) {
    i64 n = small(rng);
    if (n == 0) continue;
    const auto f = factorize(n);
    const auto o = oracle::factor(n);
    REQUIRE(f.factors.size() == o.size());
    for (std::size_t k = 0; k < o.size(); ++k) {
      CHECK(f.factors[k].prime == o[k].first);
      CHECK(f.factors[k].exponent == o[k].second);
    }
  }
  std::uniform_int_distribution<i64> big(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (int i = 0; i < 10000; ++i) {
    const i64 n = big(rng);
    if (n == 0) continue;
    const auto f = factorize(n);
    REQUIRE(f.product() == n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      CHECK(oracle::is_prime(f.factors[k].prime));
      if (k) CHECK(f.factors[k - 1].prime < f.factors[k].prime);
    }
  }
}

TEST_CASE("factorize semiprimes near 1e18") {
  const i64 p = 999'999'937, q = 1'000'000'007;
  const auto f = factorize(p * q);
  CHECK(f.primes() == std::vector<i64>{p, q});
}

TEST_CASE("squarefree_core") {
  CHECK(squarefree_core(80) == std::pair<i64, i64>{5, 4});
  CHECK(squarefree_core(7) == std::pair<i64, i64>{7, 1});
  CHECK(squarefree_core(-12) == std::pair<i64, i64>{-3, 2});
  for (i64 n = -3000; n <= 3000; ++n) {
    if (n == 0) continue;
    auto [m, c] = squarefree_core(n);
    REQUIRE(m * c * c == n);
    for (auto [p, e] : oracle::factor(m)) CHECK(e == 1);
    CHECK(is_squarefree(m));
  }
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(-3, 11) == -1);
  CHECK(kronecker(1, 97) == 1);
  CHECK(kronecker(2, 31) == 1);
}

TEST_CASE("kronecker matches the definition and is multiplicative") {
  for (i64 a = -60; a <= 60; ++a)
    for (i64 n = -60; n <= 60; ++n) {
      if (a == 0 && n == 0) continue;
      REQUIRE(kronecker(a, n) == oracle::kronecker(a, n));
    }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> d(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    const i64 a = d(rng), b = d(rng), n = d(rng);
    if (n == 0) continue;
    CHECK(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n));
  }
}

TEST_CASE("kronecker equals Euler's criterion at odd primes") {
  for (i64 p : {3, 5, 7, 31, 101, 4409})
    for (i64 a = 1; a < 200; ++a) {
      if (a % p == 0) continue;
      const i64 e = static_cast<i64>(powmod(static_cast<u64>(a), static_cast<u64>((p - 1) / 2), static_cast<u64>(p)));
      CHECK(kronecker(a, p) == (e == 1 ? 1 : -1));
    }
}

TEST_CASE("modular helpers") {
  CHECK(mod(-7, 5) == 3);
  CHECK(invmod(3, 7) == 5);
  CHECK_THROWS_AS(invmod(6, 9), InvalidArgument);
  for (i64 p : {5, 13, 1009, 65537})
    for (i64 a = 1; a < 60; ++a) {
      const i64 r = sqrt_mod_prime(a, p);
      if (oracle::legendre(a, p) == 1) {
        REQUIRE(r >= 0);
        CHECK(r * r % p == a % p);
      } else if (a % p != 0) {
        CHECK(r == -1);
      }
    }
  CHECK(isqrt(99) == 9);
  CHECK(is_square(144));
  CHECK_FALSE(is_square(-4));
  const auto g = ext_gcd(240, 46);
  CHECK(g.g == 2);
  CHECK(g.x * 240 + g.y * 46 == 2);
  CHECK(valuation(48, 2) == 4);
  CHECK_THROWS(checked_mul(i64{1} << 40, i64{1} << 40));
}
