#pragma once

// Test-side oracles. Deliberately written without calling the library code
// they check: trial division, Euler's criterion, residue-ring enumeration,
// direct form enumeration.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using i128 = __int128;

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<i64, int>> factor(i64 n) {
  std::vector<std::pair<i64, int>> out;
  if (n < 0) n = -n;
  for (i64 d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline int val(i64 n, i64 p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline i64 md(i64 a, i64 m) { return ((a % m) + m) % m; }

inline i64 powm(i64 b, i64 e, i64 m) {
  i64 r = 1 % m;
  b = md(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<i64>(static_cast<i128>(r) * b % m);
    b = static_cast<i64>(static_cast<i128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

/// Legendre symbol by Euler's criterion.
inline int legendre(i64 a, i64 p) {
  const i64 r = powm(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

/// Kronecker symbol from its definition over the factorization of n.
inline int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int s = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) s = -s;
  }
  for (auto [p, e] : factor(n)) {
    int k;
    if (p == 2) {
      if (a % 2 == 0)
        k = 0;
      else
        k = (md(a, 8) == 1 || md(a, 8) == 7) ? 1 : -1;
    } else {
      k = legendre(a, p);
    }
    for (int i = 0; i < e; ++i) s *= k;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Local squares in completions of Q(zeta_3), by enumerating a residue ring.
// Elements x + y*zeta with zeta^2 = -1 - zeta.
//
// a is a square at q iff x^2 = a mod q^(v_q(a) + 2 v_q(2) + 1) is solvable.

struct Zeta {
  i64 x, y;
};

inline Zeta sq(Zeta z, i64 m) {
  // (x + y z)^2 = x^2 + 2xy z + y^2 z^2 = (x^2 - y^2) + (2xy - y^2) z
  return {md(z.x * z.x - z.y * z.y, m), md(2 * z.x * z.y - z.y * z.y, m)};
}

enum class Kind { Split, Inert, Ramified };

/// Split l: K_q = Q_l, so work in Z/l^M.
inline bool local_square_split(i64 a, i64 l) {
  const int v = val(a, l);
  const int M = v + 2 * (l == 2 ? 1 : 0) + 1;
  i64 mod = 1;
  for (int i = 0; i < M; ++i) mod *= l;
  const i64 t = md(a, mod);
  for (i64 x = 0; x < mod; ++x)
    if (static_cast<i64>(static_cast<i128>(x) * x % mod) == t) return true;
  return false;
}

/// Inert l: the residue ring Z[zeta]/l^M.
inline bool local_square_inert(i64 a, i64 l) {
  const int v = val(a, l);
  const int M = v + 2 * (l == 2 ? 1 : 0) + 1;
  i64 mod = 1;
  for (int i = 0; i < M; ++i) mod *= l;
  static std::map<std::pair<i64, i64>, std::vector<bool>> cache;  // (l, mod) -> is-square table
  auto& table = cache[{l, mod}];
  if (table.empty()) {
    table.assign(static_cast<std::size_t>(mod * mod), false);
    for (i64 x = 0; x < mod; ++x)
      for (i64 y = 0; y < mod; ++y) {
        const Zeta s = sq({x, y}, mod);
        table[static_cast<std::size_t>(s.x * mod + s.y)] = true;
      }
  }
  return table[static_cast<std::size_t>(md(a, mod) * mod)];
}

/// Ramified prime over 3: test v_p(x^2 - a) >= M with M = 2 v_3(a) + 1, in
/// Z[zeta]/3^k with 2k >= M. v_p of z is v_3 of its norm x^2 - xy + y^2.
inline int vp_norm(Zeta z) {
  const i64 n = z.x * z.x - z.x * z.y + z.y * z.y;
  if (n == 0) return 1 << 20;
  return val(n, 3);
}

inline bool local_square_ramified(i64 a) {
  const int M = 2 * val(a, 3) + 1;
  const int k = (M + 1) / 2;
  i64 mod = 1;
  for (int i = 0; i < k; ++i) mod *= 3;
  for (i64 x = 0; x < mod; ++x)
    for (i64 y = 0; y < mod; ++y) {
      const Zeta s = sq({x, y}, mod);
      // residue of s - a with coordinates centred to keep the norm small
      Zeta d{md(s.x - a, mod), s.y};
      if (d.x > mod / 2) d.x -= mod;
      if (d.y > mod / 2) d.y -= mod;
      if (d.x == 0 && d.y == 0) return true;
      if (vp_norm(d) >= M) return true;
    }
  return false;
}

inline bool local_square(i64 a, i64 l) {
  if (l == 3) return local_square_ramified(a);
  if (l % 3 == 1) return local_square_split(a, l);
  return local_square_inert(a, l);
}

// ---------------------------------------------------------------------------
// Class numbers by direct enumeration.

/// Number of primitive reduced positive definite forms of discriminant D < 0.
inline i64 class_number_neg(i64 D) {
  i64 h = 0;
  for (i64 a = 1; 3 * a * a <= -D; ++a)
    for (i64 b = -a + 1; b <= a; ++b) {
      const i64 num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      ++h;
    }
  return h;
}

/// Narrow class number for D > 0 (non-square): count the orbits of the
/// proper-equivalence action on reduced indefinite forms by walking cycles
/// with the classical neighbour step (a, b, c) -> (c, b', a') where
/// b' = -b mod 2c and sqrt(D) - 2|c| < b' < sqrt(D).
inline i64 class_number_pos(i64 D) {
  const double sD = std::sqrt(static_cast<double>(D));
  i64 r = static_cast<i64>(sD);
  while (r * r > D) --r;
  while ((r + 1) * (r + 1) <= D) ++r;
  auto reduced = [&](i64 a, i64 b) {
    // 0 < b < sqrt D and sqrt D - b < 2|a| < sqrt D + b
    const i64 A = a < 0 ? -a : a;
    return b > 0 && b <= r && (r - b < 2 * A) && (2 * A <= r + b);
  };
  std::set<std::tuple<i64, i64, i64>> forms;
  for (i64 b = 1; b <= r; ++b) {
    if (md(b * b - D, 4) != 0) continue;
    const i64 ac = (b * b - D) / 4;  // negative
    for (i64 a = 1; a * a <= -ac; ++a) {
      if (ac % a != 0) continue;
      for (i64 sa : {a, -a, -ac / a, ac / a}) {
        if (sa == 0 || ac % sa != 0) continue;
        const i64 c = ac / sa;
        if (std::gcd(std::gcd(sa < 0 ? -sa : sa, b), c < 0 ? -c : c) != 1) continue;
        if (reduced(sa, b)) forms.insert({sa, b, c});
      }
    }
  }
  auto step = [&](std::tuple<i64, i64, i64> f) {
    auto [a, b, c] = f;
    const i64 C = c < 0 ? -c : c;
    // b' = -b mod 2C with r - 2C < b' <= r, chosen in the reduced window
    i64 bp = md(-b, 2 * C);
    const i64 lo = C <= r ? r - 2 * C + 1 : -C + 1;
    const i64 hi = C <= r ? r : C;
    while (bp > hi) bp -= 2 * C;
    while (bp < lo) bp += 2 * C;
    const i64 cp = (bp * bp - D) / (4 * c);
    return std::tuple<i64, i64, i64>{c, bp, cp};
  };
  std::set<std::tuple<i64, i64, i64>> seen;
  i64 cycles = 0;
  for (const auto& f : forms) {
    if (seen.count(f)) continue;
    ++cycles;
    auto g = f;
    do {
      seen.insert(g);
      g = step(g);
    } while (!seen.count(g));
  }
  return cycles;
}

inline bool is_fundamental(i64 D) {
  auto squarefree = [](i64 n) {
    if (n < 0) n = -n;
    for (i64 d = 2; d * d <= n; ++d)
      if (n % (d * d) == 0) return false;
    return true;
  };
  if (D == 0 || D == 1) return false;
  if (md(D, 4) == 1) return squarefree(D);
  if (md(D, 4) != 0) return false;
  const i64 m = D / 4;
  return (md(m, 4) == 2 || md(m, 4) == 3) && squarefree(m);
}

}  // namespace oracle
