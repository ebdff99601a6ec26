#include "selmer3/tate.hpp"

#include <vector>

namespace selmer3::tate {

namespace {

using intbase::mod;
using intbase::mulmod;
using intbase::powmod;

int val(const BigInt& x, i64 p) {
  if (x == 0) return 1 << 20;
  int v = 0;
  BigInt y = x;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

i64 red(const BigInt& x, i64 p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<i64>();
}

struct Model {
  BigInt a1, a2, a3, a4, a6;

  void rst(const BigInt& r, const BigInt& s, const BigInt& t) {
    BigInt n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    BigInt n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    BigInt n3 = a3 + r * a1 + 2 * t;
    BigInt n2 = a2 - s * a1 + 3 * r - s * s;
    BigInt n1 = a1 + 2 * s;
    a1 = n1;
    a2 = n2;
    a3 = n3;
    a4 = n4;
    a6 = n6;
  }
  BigInt b2() const { return a1 * a1 + 4 * a2; }
  BigInt b4() const { return 2 * a4 + a1 * a3; }
  BigInt b6() const { return a3 * a3 + 4 * a6; }
  BigInt b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  BigInt c4() const { return b2() * b2() - 24 * b4(); }
  BigInt c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  BigInt disc() const {
    BigInt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  }
};

// Whether a X^2 + b X + c (a a unit) has a root in the residue field.
bool quadratic_has_root(const BigInt& a, const BigInt& b, const BigInt& c, i64 p, int f) {
  if (f == 2) return true;  // every quadratic over F_p splits over F_{p^2}
  i64 A = red(a, p), B = red(b, p), C = red(c, p);
  if (p == 2) {
    return C == 0 || ((A + B + C) % 2 == 0);
  }
  i64 disc = mod(static_cast<i64>((static_cast<i128>(B) * B - static_cast<i128>(4) * A * C) % p), p);
  return disc == 0 || intbase::kronecker(disc, p) == 1;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& g, u64 p) {
  trim(f);
  const u64 lead_inv = static_cast<u64>(intbase::invmod(static_cast<i64>(g.back()), static_cast<i64>(p)));
  while (f.size() >= g.size()) {
    u64 coef = mulmod(f.back(), lead_inv, p);
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + p - mulmod(coef, g[i], p)) % p;
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& x, const Poly& y, const Poly& g, u64 p) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + mulmod(x[i], y[j], p)) % p;
  return poly_mod(r, g, p);
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Number of distinct roots in F_{p^f} of a monic cubic over F_p.
int cubic_root_count(i64 c2, i64 c1, i64 c0, i64 p, int f) {
  const u64 up = static_cast<u64>(p);
  Poly g{static_cast<u64>(mod(c0, p)), static_cast<u64>(mod(c1, p)), static_cast<u64>(mod(c2, p)), 1};
  // x^(p^f) mod g by repeated p-th powering.
  Poly xp{0, 1};
  for (int k = 0; k < f; ++k) {
    Poly result{1};
    Poly base = xp;
    u64 e = up;
    while (e > 0) {
      if (e & 1) result = poly_mulmod(result, base, g, up);
      base = poly_mulmod(base, base, g, up);
      e >>= 1;
    }
    xp = result;
  }
  Poly h = xp;
  h.resize(std::max<std::size_t>(h.size(), 2), 0);
  h[1] = (h[1] + up - 1) % up;
  return static_cast<int>(poly_gcd(g, h, up).size()) - 1;
}

i64 inv_mod(i64 x, i64 p) { return intbase::invmod(mod(x, p), p); }

}  // namespace

BigInt discriminant(const Weierstrass& E) {
  Model m{E.a[0], E.a[1], E.a[2], E.a[3], E.a[4]};
  return m.disc();
}

LocalReduction local_data(Weierstrass E, i64 p, int f) {
  if (p == 3) throw InvalidArgument("Tate's algorithm here excludes p = 3");
  if (f != 1 && f != 2) throw InvalidArgument("residue degree must be 1 or 2");
  Model m{E.a[0], E.a[1], E.a[2], E.a[3], E.a[4]};
  const BigInt P = p;
  LocalReduction out;

  for (int pass = 0; pass < 64; ++pass) {
    const int n = val(m.disc(), p);
    out.disc_valuation = n;
    if (n == 0) {
      out.kodaira = "I0";
      out.tamagawa = 1;
      return out;
    }
    // Move the singular point to (0, 0).
    BigInt r, t;
    if (p == 2) {
      if (red(m.b2(), 2) == 0) {
        r = red(m.a4, 2);
        t = red(r * (1 + m.a2 + m.a4) + m.a6, 2);
      } else {
        r = red(m.a3, 2);
        t = red(r + m.a4, 2);
      }
    } else {
      i64 c4 = red(m.c4(), p);
      if (c4 == 0) {
        r = mod(-static_cast<i64>(static_cast<i128>(inv_mod(12, p)) * red(m.b2(), p) % p), p);
      } else {
        i64 num = red(m.c6() + m.b2() * m.c4(), p);
        r = mod(-static_cast<i64>(static_cast<i128>(inv_mod(12 * (c4 % p) % p, p)) * num % p), p);
      }
      i64 half = inv_mod(2, p);
      t = mod(-static_cast<i64>(static_cast<i128>(half) * red(m.a1 * r + m.a3, p) % p), p);
    }
    m.rst(r, 0, t);

    if (val(m.b2(), p) == 0) {
      out.kodaira = "I" + std::to_string(n);
      out.split = quadratic_has_root(1, m.a1, -m.a2, p, f);
      out.tamagawa = out.split ? n : (n % 2 == 0 ? 2 : 1);
      return out;
    }
    if (val(m.a6, p) < 2) {
      out.kodaira = "II";
      out.tamagawa = 1;
      return out;
    }
    if (val(m.b8(), p) < 3) {
      out.kodaira = "III";
      out.tamagawa = 2;
      return out;
    }
    if (val(m.b6(), p) < 3) {
      out.kodaira = "IV";
      out.tamagawa = quadratic_has_root(1, m.a3 / P, -m.a6 / (P * P), p, f) ? 3 : 1;
      return out;
    }
    // p | a1, a2; p^2 | a3, a4; p^3 | a6.
    BigInt s;
    if (p == 2) {
      s = red(m.a2, 2);
      t = 2 * red(m.a6 / 4, 2);
    } else {
      i64 half = inv_mod(2, p);
      s = mod(-static_cast<i64>(static_cast<i128>(half) * red(m.a1, p) % p), p);
      t = mod(-static_cast<i64>(static_cast<i128>(half) * red(m.a3, p) % p), p);
    }
    m.rst(0, s, t);

    const BigInt P2 = P * P, P3 = P2 * P;
    i64 b = red(m.a2 / P, p), c = red(m.a4 / P2, p), d = red(m.a6 / P3, p);
    auto mm = [&](i64 x, i64 y) { return static_cast<i64>(static_cast<i128>(x) * y % p); };
    i64 w = mod(27 * mm(d, d) - mm(mm(b, b), mm(c, c)) + 4 * mm(mm(b, b), mm(b, d)) -
                    18 * mm(mm(b, c), d) + 4 * mm(mm(c, c), c),
                p);
    i64 x = mod(3 * c - mm(b, b), p);
    if (w != 0) {
      out.kodaira = "I0*";
      out.tamagawa = 1 + cubic_root_count(b, c, d, p, f);
      return out;
    }
    if (x != 0) {
      // Double root of the cubic: translate it to 0 and refine.
      i64 rr;
      if (p == 2) {
        rr = c;
      } else {
        rr = mm(mod(mm(b, c) - 9 * d, p), inv_mod(2 * x, p));
      }
      m.rst(P * rr, 0, 0);
      int ix = 3, iy = 3;
      BigInt mx = P2, my = P2;
      i64 cp = 0;
      while (cp == 0) {
        BigInt xa2 = m.a2 / P, xa3 = m.a3 / my, xa4 = m.a4 / (P * mx), xa6 = m.a6 / (mx * my);
        if (red(xa3 * xa3 + 4 * xa6, p) != 0) {
          cp = quadratic_has_root(1, xa3, -xa6, p, f) ? 4 : 2;
        } else {
          BigInt tt = p == 2 ? my * red(xa6, 2)
                             : my * mod(-mm(red(xa3, p), inv_mod(2, p)), p);
          m.rst(0, 0, tt);
          my *= P;
          ++iy;
          xa2 = m.a2 / P;
          xa3 = m.a3 / my;
          xa4 = m.a4 / (P * mx);
          xa6 = m.a6 / (mx * my);
          if (red(xa4 * xa4 - 4 * xa2 * xa6, p) != 0) {
            cp = quadratic_has_root(xa2, xa4, xa6, p, f) ? 4 : 2;
          } else {
            BigInt rx = p == 2 ? mx * red(xa6 * xa2, 2)
                               : mx * mod(-mm(red(xa4, p), inv_mod(2 * red(xa2, p), p)), p);
            m.rst(rx, 0, 0);
            mx *= P;
            ++ix;
          }
        }
      }
      out.kodaira = "I" + std::to_string(ix + iy - 5) + "*";
      out.tamagawa = cp;
      return out;
    }
    // Triple root.
    i64 rr = p == 2 ? b : mod(-mm(b, inv_mod(3, p)), p);
    m.rst(P * rr, 0, 0);
    BigInt x3 = m.a3 / P2, x6 = m.a6 / (P2 * P2);
    if (red(x3 * x3 + 4 * x6, p) != 0) {
      out.kodaira = "IV*";
      out.tamagawa = quadratic_has_root(1, x3, -x6, p, f) ? 3 : 1;
      return out;
    }
    BigInt tt = p == 2 ? red(x6, 2) : mod(-mm(red(x3, p), inv_mod(2, p)), p);
    m.rst(0, 0, tt * P2);
    if (val(m.a4, p) < 4) {
      out.kodaira = "III*";
      out.tamagawa = 2;
      return out;
    }
    if (val(m.a6, p) < 6) {
      out.kodaira = "II*";
      out.tamagawa = 1;
      return out;
    }
    // Non-minimal: scale down and start over.
    m.a1 /= P;
    m.a2 /= P2;
    m.a3 /= P3;
    m.a4 /= P2 * P2;
    m.a6 /= P3 * P3;
  }
  throw InvalidArgument("Tate's algorithm did not terminate");
}

}  // namespace selmer3::tate
