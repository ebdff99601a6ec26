#include "selmer3/formclass.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace selmer3 {

using namespace intbase;

i64 QuadForm::disc() const {
  i128 d = static_cast<i128>(b) * b - static_cast<i128>(4) * a * c;
  if (d > INT64_MAX || d < INT64_MIN) throw OutOfRange("form discriminant overflows int64");
  return static_cast<i64>(d);
}

namespace formclass {

namespace {

std::atomic<i64> g_max_disc_override{0};

i64 c_from(i64 a, i64 b, i64 D) {
  i128 num = static_cast<i128>(b) * b - D;
  i128 den = static_cast<i128>(4) * a;
  if (num % den != 0) throw InvalidArgument("form coefficients do not match the discriminant");
  i128 c = num / den;
  if (c > INT64_MAX || c < INT64_MIN) throw OutOfRange("form coefficient overflows int64");
  return static_cast<i64>(c);
}

u64 key_of(const QuadForm& f) {
  return (static_cast<u64>(static_cast<std::uint32_t>(f.a)) << 32) |
         static_cast<std::uint32_t>(f.b);
}

// Shift b into (-|a|, |a|].
QuadForm normalize_definite(QuadForm f, i64 D) {
  i64 two_a = 2 * f.a;
  i64 r = mod(f.b, two_a);
  if (r > f.a) r -= two_a;
  f.b = r;
  f.c = c_from(f.a, f.b, D);
  return f;
}

QuadForm reduce_definite(QuadForm f) {
  const i64 D = f.disc();
  if (f.a < 0) throw InvalidArgument("negative definite form");
  f = normalize_definite(f, D);
  while (f.a > f.c) {
    f = normalize_definite({f.c, -f.b, f.a}, D);
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

struct IndefCtx {
  i64 D;
  i64 s;  // floor(sqrt(D))
};

QuadForm rho_step(const QuadForm& f, const IndefCtx& ctx) {
  const i64 c = f.c;
  const i64 ac = c < 0 ? -c : c;
  const i64 two_c = 2 * ac;
  i64 r;
  if (ac > ctx.s) {
    r = mod(-f.b, two_c);
    if (r > ac) r -= two_c;
  } else {
    // r in [s - 2|c| + 1, s], r = -b mod 2|c|.
    i64 lo = ctx.s - two_c + 1;
    r = lo + mod(-f.b - lo, two_c);
  }
  return {c, r, c_from(c, r, ctx.D)};
}

bool is_reduced_indef(const QuadForm& f, i64 s) {
  i64 aa = f.a < 0 ? -f.a : f.a;
  return f.b > 0 && f.b <= s && s - f.b < 2 * aa && 2 * aa <= s + f.b;
}

QuadForm reduce_indefinite(QuadForm f) {
  IndefCtx ctx{f.disc(), 0};
  ctx.s = isqrt(ctx.D);
  // rho reaches a reduced form after O(log |c/sqrt D|) steps; the cap only
  // guards against a malformed input looping forever.
  for (int i = 0; i < 100000; ++i) {
    if (is_reduced_indef(f, ctx.s)) return f;
    f = rho_step(f, ctx);
  }
  throw InvalidArgument("indefinite reduction did not converge");
}

}  // namespace

i64 max_disc() {
  i64 o = g_max_disc_override.load();
  if (o > 0) return o;
  if (const char* env = std::getenv("SELMER3_MAX_DISC")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxDisc;
}

void set_max_disc(i64 bound) { g_max_disc_override.store(bound > 0 ? bound : 0); }

bool is_fundamental(i64 D) {
  if (D == 0 || D == 1) return false;
  i64 r = mod(D, 4);
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  i64 m = D / 4;
  i64 rm = mod(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

i64 field_disc(i64 m) {
  if (m == 0 || m == 1) throw InvalidArgument("no quadratic field for m = " + std::to_string(m));
  return mod(m, 4) == 1 ? m : checked_mul(4, m);
}

QuadForm principal_form(i64 D) {
  i64 b = mod(D, 2);
  QuadForm f{1, b, c_from(1, b, D)};
  return D < 0 ? f : reduce_indefinite(f);
}

bool is_reduced(const QuadForm& f) {
  i64 D = f.disc();
  if (D < 0) {
    if (f.a <= 0 || !(-f.a < f.b && f.b <= f.a && f.a <= f.c)) return false;
    return !(f.a == f.c && f.b < 0);
  }
  return is_reduced_indef(f, isqrt(D));
}

QuadForm reduce(const QuadForm& f) {
  i64 D = f.disc();
  if (D == 0 || is_square(D)) throw InvalidArgument("square discriminant");
  return D < 0 ? reduce_definite(f) : reduce_indefinite(f);
}

QuadForm rho(const QuadForm& f) {
  IndefCtx ctx{f.disc(), 0};
  if (ctx.D <= 0) throw InvalidArgument("rho needs a positive discriminant");
  ctx.s = isqrt(ctx.D);
  return rho_step(f, ctx);
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const i64 D = f.disc();
  if (g.disc() != D) throw DiscMismatch("cannot compose forms of discriminants " +
                                        std::to_string(D) + " and " + std::to_string(g.disc()));
  const i64 s = (f.b + g.b) / 2;
  ExtGcd e1 = ext_gcd(f.a, g.a);
  ExtGcd e2 = ext_gcd(e1.g, s);
  const i64 e = e2.g;
  const i128 lambda = static_cast<i128>(e2.x) * e1.x;
  const i128 mu = static_cast<i128>(e2.x) * e1.y;
  const i128 nu = e2.y;

  const i128 A = static_cast<i128>(f.a / e) * (g.a / e);
  if (A > INT64_MAX || A < INT64_MIN) throw OutOfRange("composition overflow");
  const i128 twoA = 2 * (A < 0 ? -A : A);
  // B = (lambda a1 b2 + mu a2 b1 + nu (b1 b2 + D) / 2) / e, taken mod 2|A|.
  const i128 num = lambda * f.a * g.b + mu * g.a * f.b +
                   nu * ((static_cast<i128>(f.b) * g.b + D) / 2);
  if (num % e != 0) throw InvalidArgument("composition failed: inexact division");
  i128 B = (num / e) % twoA;
  if (B < 0) B += twoA;
  if (B > twoA / 2) B -= twoA;
  const i64 Ai = static_cast<i64>(A);
  const i64 Bi = static_cast<i64>(B);
  return reduce({Ai, Bi, c_from(Ai, Bi, D)});
}

QuadForm inverse(const QuadForm& f) { return reduce({f.a, -f.b, f.c}); }

std::vector<QuadForm> reduced_forms(i64 D) {
  if (D == 0 || is_square(D)) throw InvalidArgument("square discriminant");
  std::vector<QuadForm> out;
  const i64 parity = mod(D, 2);
  if (D < 0) {
    const i64 amax = isqrt(-D / 3);
    for (i64 a = 1; a <= amax; ++a) {
      const i64 four_a = 4 * a;
      for (i64 b = -a + 1; b <= a; ++b) {
        if (mod(b, 2) != parity) continue;
        i128 num = static_cast<i128>(b) * b - D;
        if (num % four_a != 0) continue;
        i64 c = static_cast<i64>(num / four_a);
        if (c < a) continue;
        if (b < 0 && a == c) continue;
        out.push_back({a, b, c});
      }
    }
    return out;
  }
  const i64 s = isqrt(D);
  for (i64 b = 1; b <= s; ++b) {
    if (mod(b, 2) != parity) continue;
    const i64 n = (D - b * b) / 4;  // = -ac > 0
    // s - b < 2|a| <= s + b
    for (i64 aa = (s - b) / 2 + 1; 2 * aa <= s + b; ++aa) {
      if (n % aa != 0) continue;
      i64 cc = n / aa;
      out.push_back({aa, b, -cc});
      out.push_back({-aa, b, cc});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadForm& x, const QuadForm& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

std::vector<std::vector<QuadForm>> rho_cycles(i64 D) {
  if (D <= 0) throw InvalidArgument("rho_cycles needs a positive discriminant");
  auto forms = reduced_forms(D);
  IndefCtx ctx{D, isqrt(D)};
  std::unordered_map<u64, std::size_t> idx;
  for (std::size_t i = 0; i < forms.size(); ++i) idx.emplace(key_of(forms[i]), i);
  std::vector<char> seen(forms.size(), 0);
  std::vector<std::vector<QuadForm>> cycles;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (seen[i]) continue;
    std::vector<QuadForm> cyc;
    QuadForm f = forms[i];
    while (true) {
      auto it = idx.find(key_of(f));
      if (it == idx.end()) throw InvalidArgument("rho left the set of reduced forms");
      if (seen[it->second]) break;
      seen[it->second] = 1;
      cyc.push_back(f);
      f = rho_step(f, ctx);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

PrimeForm prime_form(i64 l, i64 D) {
  if (!is_prime(l)) throw InvalidArgument(std::to_string(l) + " is not prime");
  PrimeForm out;
  int k = kronecker(D, l);
  if (k == 0) {
    out.kind = PrimeFormKind::Ramified;
    return out;
  }
  if (k == -1) {
    out.kind = PrimeFormKind::Inert;
    return out;
  }
  out.kind = PrimeFormKind::Split;
  i64 b;
  if (l == 2) {
    b = 1;  // D = 1 mod 8
  } else {
    i64 r = sqrt_mod_prime(D, l);
    // b = +-r mod l with b = D mod 2, minimal in [0, 2l).
    i64 best = -1;
    for (i64 cand : {r, l - r}) {
      i64 x = mod(cand, l);
      if (mod(x, 2) != mod(D, 2)) x += l;
      if (best < 0 || x < best) best = x;
    }
    b = best;
  }
  out.raw = {l, b, c_from(l, b, D)};
  out.form = reduce(out.raw);
  return out;
}

// ---------------------------------------------------------------------------

ClassGroup::ClassGroup(i64 D) : disc_(D) {
  if (!is_fundamental(D)) throw InvalidArgument(std::to_string(D) + " is not a fundamental discriminant");
  if (D < 0) {
    reps_ = reduced_forms(D);
    for (Elem i = 0; i < reps_.size(); ++i) index_.emplace(key_of(reps_[i]), i);
  } else {
    auto cycles = rho_cycles(D);
    const QuadForm one = principal_form(D);
    auto has_one = [&](const std::vector<QuadForm>& c) {
      return std::find(c.begin(), c.end(), one) != c.end();
    };
    std::stable_partition(cycles.begin(), cycles.end(), has_one);
    for (Elem i = 0; i < cycles.size(); ++i) {
      reps_.push_back(cycles[i].front());
      for (const auto& f : cycles[i]) index_.emplace(key_of(f), i);
    }
  }

  const i64 h = order();
  auto fac = factorize(h == 0 ? 1 : h);
  // Per-prime bases, each sorted by descending order.
  std::vector<std::vector<std::pair<i64, Elem>>> per_prime;
  for (const auto& [p, v] : fac.factors) {
    SylowBasis sb = sylow_basis(p, v);
    std::vector<std::pair<i64, Elem>> items;
    for (std::size_t i = 0; i < sb.basis.size(); ++i) items.emplace_back(sb.orders[i], sb.basis[i]);
    std::sort(items.begin(), items.end(), [](auto& x, auto& y) { return x.first > y.first; });
    if (p == 3) {
      // Ascending order for the 3-Sylow view; keep dlog columns aligned.
      std::vector<std::size_t> perm(sb.basis.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::stable_sort(perm.begin(), perm.end(),
                       [&](std::size_t x, std::size_t y) { return sb.orders[x] < sb.orders[y]; });
      for (std::size_t i : perm) {
        sylow3_orders_.push_back(sb.orders[i]);
        sylow3_gens_.push_back(reps_[sb.basis[i]]);
      }
      for (auto& [elem, coeffs] : sb.dlog) {
        std::vector<i64> c(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) c[i] = coeffs[perm[i]];
        sylow3_dlog_.emplace(elem, std::move(c));
      }
      i64 q = 1;
      for (int i = 0; i < v; ++i) q *= 3;
      i64 hp = h / q;
      // Idempotent for the 3-primary part: e = 1 mod 3^v, e = 0 mod h'.
      sylow3_projector_ = static_cast<i64>(static_cast<i128>(hp) * invmod(hp % q, q) % h);
    }
    per_prime.push_back(std::move(items));
  }
  std::size_t rank = 0;
  for (const auto& pp : per_prime) rank = std::max(rank, pp.size());
  for (std::size_t i = 0; i < rank; ++i) {
    i64 d = 1;
    Elem g = identity();
    for (const auto& pp : per_prime) {
      if (i < pp.size()) {
        d *= pp[i].first;
        g = mul(g, pp[i].second);
      }
    }
    divisors_.push_back(d);
    generators_.push_back(reps_[g]);
  }
  std::reverse(divisors_.begin(), divisors_.end());
  std::reverse(generators_.begin(), generators_.end());
  if (sylow3_orders_.empty()) sylow3_dlog_.emplace(identity(), std::vector<i64>{});
}

ClassGroup::Elem ClassGroup::class_of(const QuadForm& f) const {
  if (f.disc() != disc_)
    throw DiscMismatch("form has discriminant " + std::to_string(f.disc()) + ", group has " +
                       std::to_string(disc_));
  QuadForm r = reduce(f);
  auto it = index_.find(key_of(r));
  if (it == index_.end()) throw InvalidArgument("reduced form missing from the class table");
  return it->second;
}

ClassGroup::Elem ClassGroup::mul(Elem x, Elem y) const {
  if (x == identity()) return y;
  if (y == identity()) return x;
  return class_of(compose(reps_[x], reps_[y]));
}

ClassGroup::Elem ClassGroup::inv(Elem x) const { return class_of(inverse(reps_[x])); }

ClassGroup::Elem ClassGroup::pow(Elem x, i64 e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  Elem result = identity();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    e >>= 1;
    if (e) x = mul(x, x);
  }
  return result;
}

i64 ClassGroup::element_order(Elem x) const {
  i64 n = 1;
  Elem y = x;
  while (y != identity()) {
    y = mul(y, x);
    ++n;
  }
  return n;
}

ClassGroup::SylowBasis ClassGroup::sylow_basis(i64 p, int v) const {
  const i64 h = order();
  i64 pv = 1;
  for (int i = 0; i < v; ++i) pv *= p;
  const i64 m = h / pv;

  std::vector<char> in_sylow(reps_.size(), 0);
  std::vector<Elem> sylow;
  for (Elem x = 0; x < reps_.size(); ++x) {
    Elem y = pow(x, m);
    if (!in_sylow[y]) {
      in_sylow[y] = 1;
      sylow.push_back(y);
    }
  }
  std::sort(sylow.begin(), sylow.end());

  SylowBasis sb;
  sb.dlog.emplace(identity(), std::vector<i64>{});
  while (static_cast<i64>(sb.dlog.size()) < pv) {
    // Element of maximal order modulo the current subgroup.
    Elem best = identity();
    int best_j = 0;
    for (Elem x : sylow) {
      if (sb.dlog.count(x)) continue;
      int j = 0;
      Elem y = x;
      while (!sb.dlog.count(y)) {
        y = pow(y, p);
        ++j;
      }
      if (j > best_j) {
        best_j = j;
        best = x;
      }
    }
    i64 pj = 1;
    for (int i = 0; i < best_j; ++i) pj *= p;
    // Strip the component inside the current subgroup so <x> meets it trivially.
    const std::vector<i64>& e = sb.dlog.at(pow(best, pj));
    Elem x = best;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] % pj != 0) throw InvalidArgument("p-group basis extraction failed");
      x = mul(x, pow(sb.basis[i], -(e[i] / pj)));
    }
    // Extend the discrete-log table: every element is h * x^t.
    std::vector<std::pair<Elem, std::vector<i64>>> old(sb.dlog.begin(), sb.dlog.end());
    Elem xt = identity();
    for (i64 t = 0; t < pj; ++t) {
      for (const auto& [elem, coeffs] : old) {
        auto c = coeffs;
        c.push_back(t);
        sb.dlog[mul(elem, xt)] = std::move(c);
      }
      xt = mul(xt, x);
    }
    sb.basis.push_back(x);
    sb.orders.push_back(pj);
  }
  return sb;
}

std::vector<int> ClassGroup::coords_mod3(const QuadForm& g) const {
  Elem x = class_of(g);
  if (sylow3_orders_.empty()) return {};
  Elem y = pow(x, sylow3_projector_);
  const auto& c = sylow3_dlog_.at(y);
  std::vector<int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = static_cast<int>(mod(c[i], 3));
  return out;
}

namespace {
std::shared_mutex g_cache_mutex;
std::map<i64, std::shared_ptr<const ClassGroup>> g_cache;
}  // namespace

std::shared_ptr<const ClassGroup> class_group(i64 D) {
  i64 absD = D < 0 ? -D : D;
  if (absD > max_disc())
    throw OutOfRange("|D| = " + std::to_string(absD) + " exceeds the class-group bound " +
                     std::to_string(max_disc()));
  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find(D);
    if (it != g_cache.end()) return it->second;
  }
  auto G = std::make_shared<const ClassGroup>(D);
  std::unique_lock lock(g_cache_mutex);
  auto [it, inserted] = g_cache.emplace(D, G);
  return it->second;
}

int three_rank(i64 D) { return class_group(D)->three_rank(); }

std::vector<int> coords_mod3(const QuadForm& g, const ClassGroup& G) { return G.coords_mod3(g); }

void clear_cache() {
  std::unique_lock lock(g_cache_mutex);
  g_cache.clear();
}

}  // namespace formclass
}  // namespace selmer3
