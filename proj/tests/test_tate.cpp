#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "selmer3/descent.hpp"
#include "selmer3/tate.hpp"

using namespace selmer3;

namespace {
Weierstrass W(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6) { return {{a1, a2, a3, a4, a6}}; }
}  // namespace

TEST_CASE("discriminants") {
  CHECK(tate::discriminant(W(0, -1, 1, -10, -20)) == -161051);  // -11^5
  CHECK(tate::discriminant(W(0, 0, 1, -1, 0)) == 37);
}

TEST_CASE("Tate's algorithm on conductor-11 curves") {
  auto r = tate::local_data(W(0, -1, 1, -10, -20), 11, 1);
  CHECK(r.kodaira == "I5");
  CHECK(r.tamagawa == 5);
  CHECK(r.split);
  r = tate::local_data(W(0, -1, 1, 0, 0), 11, 1);
  CHECK(r.kodaira == "I1");
  CHECK(r.tamagawa == 1);
  r = tate::local_data(W(0, -1, 1, -7820, -263580), 11, 1);
  CHECK(r.kodaira == "I1");
  CHECK(r.tamagawa == 1);
  r = tate::local_data(W(0, 0, 1, -1, 0), 37, 1);
  CHECK(r.kodaira == "I1");
  r = tate::local_data(W(0, 0, 1, -1, 0), 5, 1);
  CHECK(r.kodaira == "I0");
  CHECK(r.tamagawa == 1);
}

TEST_CASE("additive reduction types") {
  // y^2 = x^3 + p: type II at p >= 5
  auto r = tate::local_data(W(0, 0, 0, 0, 5), 5, 1);
  CHECK(r.kodaira == "II");
  CHECK(r.tamagawa == 1);
  // y^2 = x^3 + p x: type III
  r = tate::local_data(W(0, 0, 0, 5, 0), 5, 1);
  CHECK(r.kodaira == "III");
  CHECK(r.tamagawa == 2);
  // y^2 = x^3 - p^2 x: I0*, with three rational 2-torsion points mod p -> c = 4
  r = tate::local_data(W(0, 0, 0, -25, 0), 5, 1);
  CHECK(r.kodaira == "I0*");
  CHECK(r.tamagawa == 4);
}

TEST_CASE("minimal-model disc valuation and isogenous Tamagawa ratios") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> d(-3000, 3000);
  int checked = 0;
  while (checked < 300) {
    const i64 a = d(rng), b = d(rng);
    if (a == 0 || b == 0 || 4 * a + 27 * b == 0) continue;
    const auto p = descent::normalize(a, b);
    for (const auto& q : descent::bad_primes(p)) {
      const auto t = descent::tamagawa(p, q);
      if (!t.c_E || !t.c_Ehat) continue;
      const i64 x = *t.c_E, y = *t.c_Ehat;
      CHECK((x == y || x == 3 * y || y == 3 * x));
    }
    ++checked;
  }
}

TEST_CASE("Tate's algorithm agrees with the tabulated local data") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> d(-5000, 5000);
  int compared = 0;
  for (int it = 0; it < 1500; ++it) {
    const i64 a = d(rng), b = d(rng);
    if (a == 0 || b == 0 || 4 * a + 27 * b == 0) continue;
    const auto p = descent::normalize(a, b);
    for (const auto& q : descent::bad_primes(p)) {
      const auto pred = descent::tabulated_local_data(p, q);
      if (!pred) continue;
      const auto t = descent::tamagawa(p, q);
      INFO("a=" << p.a << " b=" << p.b << " q=" << q.label());
      REQUIRE(t.c_E.has_value());
      CHECK(*t.c_E == pred->first);
      CHECK(*t.c_Ehat == pred->second);
      ++compared;
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("Tamagawa examples") {
  const auto p = descent::normalize(137, 137);
  const auto t = descent::tamagawa(p, eisenstein::inert_prime(2));
  CHECK(t.c_E == 3);
  CHECK(t.c_Ehat == 3);
  // q | b, q prime to 2a, v_q(b) = 1
  const auto p2 = descent::normalize(79, 131);
  const auto t2 = descent::tamagawa(p2, eisenstein::inert_prime(131));
  CHECK(t2.c_E == 3);
  CHECK(t2.c_Ehat == 1);
  const auto good = descent::tamagawa(p2, eisenstein::inert_prime(5));
  CHECK(good.c_E == 1);
  CHECK(good.c_Ehat == 1);
  // 3 | a: left unknown at the prime over 3
  const auto p3 = descent::normalize(6, 1);
  CHECK_FALSE(descent::tamagawa(p3, eisenstein::ramified_prime()).c_E.has_value());
  // 3 | b at the prime over 3
  const auto p4 = descent::normalize(2230, 48);
  const auto t4 = descent::tamagawa(p4, eisenstein::ramified_prime());
  CHECK(t4.c_E == 6);
  CHECK(t4.c_Ehat == 2);
}
