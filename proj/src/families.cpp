#include "selmer3/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "selmer3/descent.hpp"
#include "selmer3/eisenstein.hpp"
#include "selmer3/tate.hpp"

namespace selmer3 {

using intbase::mod;

bool FamilyMember::verified() const {
  return std::all_of(verified_claims.begin(), verified_claims.end(),
                     [](const Claim& c) { return c.holds; });
}

namespace families {

namespace {

constexpr i64 kMaxProduct = 1'000'000'000'000'000'000;

std::vector<i64> primes_11_mod_12(std::size_t count) {
  std::vector<i64> out;
  for (i64 p = 11; out.size() < count; p += 12)
    if (intbase::is_prime(p)) out.push_back(p);
  return out;
}

std::string labels_of(const std::vector<SMember>& S) {
  std::string s;
  for (const auto& m : S) s += m.q.label() + ";";
  return s;
}

FamilyMember verify_large_rank(const std::vector<i64>& primes, i64 product, int n) {
  FamilyMember m;
  m.a = (product - 27) / 4;
  m.b = 1;
  m.primes = primes;
  const SelmerReport rep = descent::analyze(m.a, m.b);
  m.psi_lower = rep.psi.lower;
  std::string want;
  for (i64 p : primes) want += eisenstein::inert_prime(p).label() + ";";
  m.verified_claims = {
      {"a = -1 mod 3", mod(m.a, 3) == 2},
      {"a not a square in K", !rep.a_square_in_K},
      {"S2 empty", rep.ssets.S2.empty()},
      {"S3 = primes", labels_of(rep.ssets.S3) == want},
      {"psi lower >= 2n", rep.psi.lower >= 2 * n},
  };
  return m;
}

}  // namespace

std::vector<FamilyMember> large_rank_family(int n, int count) {
  if (n < 0 || count < 0) throw InvalidArgument("n and count must be nonnegative");
  const int k = 2 * n + 1;
  const auto primes = primes_11_mod_12(static_cast<std::size_t>(k) + 400);
  const int L = static_cast<int>(primes.size());

  auto product_of = [&](const std::vector<int>& idx) -> i64 {
    i128 p = 1;
    for (int i : idx) {
      p *= primes[static_cast<std::size_t>(i)];
      if (p > kMaxProduct) return -1;
    }
    return static_cast<i64>(p);
  };

  using Entry = std::pair<i64, std::vector<int>>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::set<std::vector<int>> seen;
  std::vector<int> start(static_cast<std::size_t>(k));
  std::iota(start.begin(), start.end(), 0);
  const i64 p0 = product_of(start);
  if (p0 < 0) throw OutOfRange("prime products exceed 1e18");
  heap.push({p0, start});
  seen.insert(start);

  std::vector<FamilyMember> out;
  while (static_cast<int>(out.size()) < count) {
    if (heap.empty()) throw OutOfRange("prime products exceed 1e18");
    auto [prod, idx] = heap.top();
    heap.pop();
    std::vector<i64> ps;
    for (int i : idx) ps.push_back(primes[static_cast<std::size_t>(i)]);
    FamilyMember m = verify_large_rank(ps, prod, n);
    if (m.verified()) out.push_back(std::move(m));
    for (int i = 0; i < k; ++i) {
      const int limit = i + 1 < k ? idx[static_cast<std::size_t>(i) + 1] : L;
      if (idx[static_cast<std::size_t>(i)] + 1 >= limit) continue;
      auto next = idx;
      ++next[static_cast<std::size_t>(i)];
      if (!seen.insert(next).second) continue;
      const i64 p = product_of(next);
      if (p > 0) heap.push({p, std::move(next)});
    }
  }
  return out;
}

bool eligible_n(i64 n) {
  if (n <= 0) return false;
  const i64 r4 = n % 4;
  if (r4 != 2 && r4 != 3) return false;
  if (n % 3 != 2) return false;
  if (intbase::kronecker(n, 31) != -1) return false;
  return intbase::is_squarefree(n);
}

// ---------------------------------------------------------------------------
// Class numbers of discriminant -4N from square roots modulo small moduli.

namespace {

struct RootTable {
  std::vector<i64> spf;  // smallest prime factor
  explicit RootTable(i64 limit) : spf(static_cast<std::size_t>(limit) + 1, 0) {
    for (i64 i = 2; i <= limit; ++i) {
      if (spf[static_cast<std::size_t>(i)] != 0) continue;
      for (i64 j = i; j <= limit; j += i)
        if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
    }
  }
};

/// Roots of x^2 = -N mod p^e for all p^e <= A, keyed by p^e.
class PrimePowerRoots {
 public:
  PrimePowerRoots(i64 N, i64 A, const RootTable& table) : roots_(static_cast<std::size_t>(A) + 1) {
    for (i64 p = 2; p <= A; ++p) {
      if (table.spf[static_cast<std::size_t>(p)] != p) continue;
      std::vector<i64> cur;
      const i64 target = mod(-N, p);
      if (p == 2) {
        for (i64 x = 0; x < 2; ++x)
          if ((x * x) % 2 == target) cur.push_back(x);
      } else if (target == 0) {
        cur.push_back(0);
      } else {
        const i64 r = intbase::sqrt_mod_prime(target, p);
        if (r >= 0) {
          cur.push_back(r);
          if (r != p - r) cur.push_back(p - r);
        }
      }
      roots_[static_cast<std::size_t>(p)] = cur;
      i64 q = p;
      while (q <= A / p && !cur.empty()) {
        const i64 q2 = q * p;
        const i64 t2 = mod(-N, q2);
        std::vector<i64> next;
        for (i64 r : cur)
          for (i64 t = 0; t < p; ++t) {
            const i64 x = r + t * q;
            if (static_cast<i64>(static_cast<i128>(x) * x % q2) == t2) next.push_back(x);
          }
        cur = std::move(next);
        roots_[static_cast<std::size_t>(q2)] = cur;
        q = q2;
      }
    }
  }
  const std::vector<i64>& at(i64 q) const { return roots_[static_cast<std::size_t>(q)]; }

 private:
  std::vector<std::vector<i64>> roots_;
};

i64 count_forms(i64 N, const RootTable& table) {
  const i64 A = intbase::isqrt(4 * N / 3) + 1;
  PrimePowerRoots ppr(N, A, table);
  i64 h = 0;
  std::vector<i64> roots, merged;
  for (i64 a = 1; a <= A; ++a) {
    roots.assign(1, 0);
    i64 m = 1;
    i64 rest = a;
    while (rest > 1 && !roots.empty()) {
      const i64 p = table.spf[static_cast<std::size_t>(rest)];
      i64 q = 1;
      while (rest % p == 0) {
        rest /= p;
        q *= p;
      }
      const auto& rq = ppr.at(q);
      merged.clear();
      // x = r1 mod m, x = r2 mod q
      const i64 minv = intbase::invmod(m % q, q);
      for (i64 r1 : roots)
        for (i64 r2 : rq) {
          const i64 t = mod((r2 - r1) % q * minv, q);
          merged.push_back(r1 + m * t);
        }
      roots.swap(merged);
      m *= q;
    }
    for (i64 r : roots) {
      const i64 beta = 2 * r <= a ? r : r - a;
      const i128 num = static_cast<i128>(beta) * beta + N;
      if (num % a != 0) continue;
      const i64 c = static_cast<i64>(num / a);
      if (c < a) continue;
      if (c == a && beta < 0) continue;
      if (std::gcd(std::gcd(a, 2 * beta), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

}  // namespace

i64 class_number_minus4n(i64 N) {
  if (N <= 0) throw InvalidArgument("N must be positive");
  if (N > 1'000'000'000'000) throw OutOfRange("N too large for the root-table class number");
  RootTable table(intbase::isqrt(4 * N / 3) + 1);
  return count_forms(N, table);
}

DensityResult density_experiment(i64 xmax, unsigned threads, i64 bound) {
  if (xmax <= 0) throw InvalidArgument("X must be positive");
  if (xmax > bound) throw OutOfRange("X exceeds the configured density bound");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const RootTable table(intbase::isqrt(4 * 3 * xmax / 3) + 2);
  struct Partial {
    i64 eligible = 0, squarefree = 0, h3_zero = 0;
    std::set<i64> residues;
  };
  std::vector<Partial> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      Partial& P = parts[w];
      for (i64 n = 1 + w; n <= xmax; n += threads) {
        if (!intbase::is_squarefree(n)) continue;
        ++P.squarefree;
        if (!eligible_n(n)) continue;
        ++P.eligible;
        P.residues.insert(n % 372);
        // disc Q(sqrt(-3n)) = -12n for the eligible residue classes
        if (count_forms(3 * n, table) % 3 != 0) ++P.h3_zero;
      }
    });
  }
  for (auto& t : pool) t.join();

  DensityResult r;
  r.xmax = xmax;
  for (const auto& P : parts) {
    r.eligible_count += P.eligible;
    r.squarefree_count += P.squarefree;
    r.h3_zero_count += P.h3_zero;
    r.residues_mod_372.insert(P.residues.begin(), P.residues.end());
  }
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  r.predicted_count = 31.0 * static_cast<double>(xmax) / (256.0 * zeta2);
  if (r.eligible_count > 0)
    r.sel3_rank1_fraction = static_cast<double>(r.h3_zero_count) / static_cast<double>(r.eligible_count);
  r.rank1_share_all_n = static_cast<double>(r.h3_zero_count) / static_cast<double>(xmax);
  if (r.squarefree_count > 0)
    r.rank1_share_squarefree =
        static_cast<double>(r.h3_zero_count) / static_cast<double>(r.squarefree_count);
  return r;
}

// ---------------------------------------------------------------------------

std::string j_invariant(i64 a, i64 b) {
  using boost::multiprecision::cpp_rational;
  const BigInt A(a), B(b);
  const Weierstrass E{{0, A, 0, -2 * A * B, A * B * B}};
  const BigInt b2 = 4 * E.a[1];
  const BigInt b4 = 2 * E.a[3];
  const BigInt c4 = b2 * b2 - 24 * b4;
  const BigInt disc = tate::discriminant(E);
  if (disc == 0) throw DegenerateCurve("singular curve has no j-invariant");
  const cpp_rational j = cpp_rational(BigInt(c4 * c4 * c4)) / cpp_rational(disc);
  if (denominator(j) == 1) return numerator(j).str();
  return numerator(j).str() + "/" + denominator(j).str();
}

std::vector<FamilyMember> biquadratic_family(i64 a_prime, int count) {
  if (a_prime == 0 || a_prime == 1 || !intbase::is_squarefree(a_prime) || a_prime % 3 == 0)
    throw PreconditionViolated("a' must be square-free, different from 1, and prime to 3");
  if (count < 0) throw InvalidArgument("count must be nonnegative");
  const i64 a = mod(a_prime, 4) == 1 ? 16 * a_prime : a_prime;
  std::vector<FamilyMember> out;
  std::set<std::string> js;
  for (i64 l = 7; static_cast<int>(out.size()) < count; l += 6) {
    if (l > 100'000'000) throw OutOfRange("ran out of primes below 1e8");
    if (!intbase::is_prime(l) || a_prime % l == 0) continue;
    if (intbase::kronecker(a_prime, l) != -1) continue;
    if (4 * a + 27 * l == 0) continue;
    FamilyMember m;
    m.a = a;
    m.b = l;
    m.a_prime = a_prime;
    m.ell = l;
    m.j_invariant = j_invariant(a, l);
    const SSets S = descent::classify(descent::normalize(a, l));
    m.verified_claims = {{"S1 empty", S.S1.empty()}, {"S2 empty", S.S2.empty()}};
    if (!m.verified() || !js.insert(m.j_invariant).second) continue;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace families
}  // namespace selmer3
