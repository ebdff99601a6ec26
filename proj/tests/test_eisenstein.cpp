#include "doctest.h"
#include "oracles.hpp"
#include "selmer3/eisenstein.hpp"

using namespace selmer3;
using namespace selmer3::eisenstein;

TEST_CASE("primes above l") {
  auto v = k_primes_above(3);
  REQUIRE(v.size() == 1);
  CHECK(v[0].label() == "p");
  CHECK(v[0].kind == PrimeKind::RamifiedAboveThree);

  v = k_primes_above(2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == PrimeKind::Inert);
  CHECK(v[0].label() == "2");

  v = k_primes_above(7);
  REQUIRE(v.size() == 2);
  CHECK(v[0].label() == "7a");
  CHECK(v[1].label() == "7b");
  // zeta maps to the two roots of x^2 + x + 1 mod 7
  for (const auto& q : v) {
    const i64 r = q.zeta_root();
    CHECK((r * r + r + 1) % 7 == 0);
  }
  CHECK(v[0].zeta_root() < v[1].zeta_root());
}

TEST_CASE("kind follows l mod 3") {
  for (i64 l = 2; l < 500; ++l) {
    if (!oracle::is_prime(l)) continue;
    const auto v = k_primes_above(l);
    if (l == 3)
      CHECK(v[0].kind == PrimeKind::RamifiedAboveThree);
    else if (l % 3 == 1)
      CHECK((v.size() == 2 && v[0].kind == PrimeKind::Split));
    else
      CHECK((v.size() == 1 && v[0].kind == PrimeKind::Inert));
  }
}

TEST_CASE("labels round-trip") {
  for (const char* s : {"p", "2", "131", "7a", "7b", "4409"}) CHECK(parse_label(s).label() == s);
  for (const char* s : {"", "q", "7c", "4", "9", "5a", "3", "x7"}) CHECK_THROWS_AS(parse_label(s), ParseError);
}

TEST_CASE("val_q") {
  CHECK(val_q(9, ramified_prime()) == 4);
  CHECK(val_q(4 * 5 * 5, inert_prime(5)) == 2);
  // 4ab^2 at q | a, v(a) = 1, q odd and prime to b
  const i64 a = 7 * 2, b = 5;
  CHECK(val_q(4 * a * b * b, split_prime(7, 1)) == 1);
  for (i64 m = 1; m < 200; ++m)
    for (i64 n = 1; n < 50; ++n) CHECK(val_q(m * n, ramified_prime()) == val_q(m, ramified_prime()) + val_q(n, ramified_prime()));
}

TEST_CASE("is_local_square examples") {
  CHECK(is_local_square(137, inert_prime(2)).is_square);
  CHECK_FALSE(is_local_square(137, ramified_prime()).is_square);
  CHECK(is_local_square(2230, ramified_prime()).is_square);
  CHECK(is_local_square(25, split_prime(7, 1)).is_square);
  CHECK(is_local_square(25, split_prime(7, 2)).is_square);
  const auto odd = is_local_square(2 * 17, inert_prime(2));
  CHECK_FALSE(odd.valuation_even);
  CHECK_FALSE(odd.is_square);
}

TEST_CASE("is_local_square matches residue-ring enumeration, |a| <= 500") {
  for (i64 l : {2, 3, 5, 7, 13}) {
    for (const auto& q : k_primes_above(l)) {
      for (i64 a = -500; a <= 500; ++a) {
        if (a == 0) continue;
        const bool got = is_local_square(a, q).is_square;
        const bool want = oracle::local_square(a, l);
        INFO("a = " << a << ", q = " << q.label());
        REQUIRE(got == want);
      }
    }
  }
}

TEST_CASE("split conjugates agree; global squares are local squares") {
  for (i64 l : {7, 13, 19, 31, 37})
    for (i64 a = -300; a <= 300; ++a) {
      if (a == 0) continue;
      CHECK(is_local_square(a, split_prime(l, 1)).is_square == is_local_square(a, split_prime(l, 2)).is_square);
    }
  for (i64 a = -400; a <= 400; ++a) {
    if (a == 0 || !is_square_in_K(a)) continue;
    for (i64 l : {2, 3, 5, 7, 11, 13})
      for (const auto& q : k_primes_above(l)) CHECK(is_local_square(a, q).is_square);
  }
}

TEST_CASE("is_square_in_K") {
  CHECK(is_square_in_K(4));
  CHECK(is_square_in_K(-27));
  CHECK(is_square_in_K(-3));
  CHECK_FALSE(is_square_in_K(79));
  CHECK_FALSE(is_square_in_K(-4));
  CHECK_FALSE(is_square_in_K(3));
}
