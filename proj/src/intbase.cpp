#include "selmer3/intbase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace selmer3::intbase {

namespace {

constexpr i64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (i64 base : kSmallPrimes) {
    u64 a = static_cast<u64>(base) % n;
    if (a == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
u64 rho_split(u64 n, u64 c, i64 max_iter) {
  auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
  u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
  u64 r = 1;
  constexpr u64 m = 128;
  i64 iterations = 0;
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    do {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += m;
      iterations += static_cast<i64>(m);
    } while (k < r && g == 1);
    r <<= 1;
    if (iterations > max_iter) return 0;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

void split_into(u64 n, const FactorBudget& budget, std::vector<u64>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(n);
    return;
  }
  u64 root = static_cast<u64>(isqrt(static_cast<i64>(n)));
  if (root * root == n) {
    split_into(root, budget, out);
    split_into(root, budget, out);
    return;
  }
  for (int attempt = 0; attempt < budget.max_polynomials; ++attempt) {
    u64 d = rho_split(n, static_cast<u64>(attempt) + 1, budget.rho_iterations);
    if (d != 0) {
      split_into(d, budget, out);
      split_into(n / d, budget, out);
      return;
    }
  }
  throw Unfactorable("composite cofactor " + std::to_string(n) +
                     " resisted splitting within the factorization budget");
}

}  // namespace

i64 Factorization::product() const {
  i64 p = sign;
  for (const auto& pp : factors)
    for (int i = 0; i < pp.exponent; ++i) p *= pp.prime;
  return p;
}

std::vector<i64> Factorization::primes() const {
  std::vector<i64> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

i64 invmod(i64 a, i64 m) {
  auto e = ext_gcd(mod(a, m), m);
  if (e.g != 1) throw InvalidArgument("value is not invertible modulo " + std::to_string(m));
  return mod(e.x, m);
}

i64 isqrt(i64 n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative number");
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(static_cast<u64>(n));
}

Factorization factorize(i64 n, const FactorBudget& budget) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  if (n == std::numeric_limits<i64>::min())
    throw Unfactorable("magnitude exceeds the supported int64 range");
  Factorization f;
  f.value = n;
  f.sign = n < 0 ? -1 : 1;
  u64 m = static_cast<u64>(n < 0 ? -n : n);

  auto push = [&](i64 p, int e) {
    if (e > 0) f.factors.push_back({p, e});
  };
  {
    int e = 0;
    while ((m & 1) == 0) {
      m >>= 1;
      ++e;
    }
    push(2, e);
  }
  u64 limit = static_cast<u64>(budget.trial_division_limit);
  for (u64 p = 3; p <= limit && p * p <= m; p += 2) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    push(static_cast<i64>(p), e);
  }
  if (m > 1) {
    std::vector<u64> rest;
    split_into(m, budget, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      push(static_cast<i64>(rest[i]), static_cast<int>(j - i));
      i = j;
    }
  }
  return f;
}

std::pair<i64, i64> squarefree_core(i64 n) {
  auto f = factorize(n);
  i64 core = f.sign;
  i64 cofactor = 1;
  for (const auto& [p, e] : f.factors) {
    if (e % 2) core *= p;
    for (int i = 0; i < e / 2; ++i) cofactor *= p;
  }
  return {core, cofactor};
}

bool is_squarefree(i64 n) {
  auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

int valuation(i64 n, i64 p) {
  if (n == 0) throw InvalidArgument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v > 0) {
    if ((a & 1) == 0) return 0;
    i64 r = mod(a, 8);
    if ((v & 1) && (r == 3 || r == 5)) result = -result;
  }
  // Jacobi symbol (a/n), n odd positive.
  i64 x = mod(a, n);
  i64 y = n;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      i64 r = y % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

i64 sqrt_mod_prime(i64 a, i64 p) {
  a = mod(a, p);
  if (p == 2) return a;
  if (a == 0) return 0;
  if (kronecker(a, p) != 1) return -1;
  const u64 up = static_cast<u64>(p);
  if (p % 4 == 3) return static_cast<i64>(powmod(static_cast<u64>(a), (up + 1) / 4, up));
  // Tonelli-Shanks.
  u64 q = up - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (kronecker(static_cast<i64>(z), p) != -1) ++z;
  u64 c = powmod(z, q, up);
  u64 r = powmod(static_cast<u64>(a), (q + 1) / 2, up);
  u64 t = powmod(static_cast<u64>(a), q, up);
  int m = s;
  while (t != 1) {
    int i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, up);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, up);
    r = mulmod(r, b, up);
    c = mulmod(b, b, up);
    t = mulmod(t, c, up);
    m = i;
  }
  return static_cast<i64>(r);
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OutOfRange("integer overflow in product");
  return out;
}

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out)) throw OutOfRange("integer overflow in sum");
  return out;
}

}  // namespace selmer3::intbase
