#pragma once

// Rational-integer primitives: primality, factorization, square-free parts,
// Kronecker symbols, and a few modular helpers shared by the other modules.
//
// Supported range: every routine takes int64_t inputs. Primality testing is
// deterministic for all 64-bit inputs (Miller-Rabin over the first twelve prime
// bases, which is exact below 3.3e24). Factorization terminates for every
// |n| <= 1e18 with the default budget.

#include <cstdint>
#include <utility>
#include <vector>

#include "selmer3/errors.hpp"

namespace selmer3 {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

namespace intbase {

struct PrimePower {
  i64 prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Complete factorization of `value`. Primes are strictly increasing and the
/// sign of `value` is carried in `sign` (the factors describe |value|).
struct Factorization {
  i64 value = 0;
  int sign = 1;
  std::vector<PrimePower> factors;

  /// Recomputes sign * prod p^e. Intended for checks, may overflow for
  /// factorizations that did not come from an int64 value.
  i64 product() const;
  std::vector<i64> primes() const;
};

struct FactorBudget {
  i64 trial_division_limit = 1'000'000;
  /// Iterations of Brent's cycle search per polynomial before switching the
  /// constant; after `max_polynomials` failed constants the cofactor is
  /// declared Unfactorable.
  i64 rho_iterations = 4'000'000;
  int max_polynomials = 64;
};

bool is_prime(i64 n);

/// Throws InvalidArgument for n == 0 and Unfactorable when a composite
/// cofactor survives the budget.
Factorization factorize(i64 n, const FactorBudget& budget = {});

/// n = core * cofactor^2 with core square-free and sign(core) = sign(n).
std::pair<i64, i64> squarefree_core(i64 n);

bool is_squarefree(i64 n);

/// Kronecker symbol (a/n), with (a/2) given by a mod 8 and (a/-1) by sign(a).
int kronecker(i64 a, i64 n);

/// Exponent of the prime p in n (n != 0).
int valuation(i64 n, i64 p);

i64 mod(i64 a, i64 m);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
/// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
i64 invmod(i64 a, i64 m);
/// A square root of a modulo the odd prime p, or -1 when none exists.
i64 sqrt_mod_prime(i64 a, i64 p);

i64 isqrt(i64 n);
bool is_square(i64 n);

struct ExtGcd {
  i64 g;
  i64 x;
  i64 y;
};
/// g = gcd(|a|, |b|) = x*a + y*b.
ExtGcd ext_gcd(i64 a, i64 b);

/// Checked arithmetic for the places where user-sized inputs are combined.
i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);

}  // namespace intbase
}  // namespace selmer3
