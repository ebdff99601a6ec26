#pragma once

// Explicit curve families: large 3-Selmer rank (b = 1, a = (p_1...p_{2n+1} - 27)/4),
// the n = b family E_{n,n} with its density experiment, and the biquadratic
// family E_{a, l}.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selmer3/intbase.hpp"

namespace selmer3 {

struct Claim {
  std::string name;
  bool holds = false;
  bool operator==(const Claim&) const = default;
};

struct FamilyMember {
  i64 a = 0;
  i64 b = 0;
  std::vector<i64> primes;      // large-rank family
  std::optional<i64> a_prime;   // biquadratic family
  std::optional<i64> ell;       // biquadratic family
  std::string j_invariant;      // "num/den" or "num", biquadratic family
  std::optional<i64> psi_lower;
  std::vector<Claim> verified_claims;

  bool verified() const;
};

struct DensityResult {
  i64 xmax = 0;
  i64 eligible_count = 0;
  i64 squarefree_count = 0;
  double predicted_count = 0;       // 31 X / (2^8 zeta(2))
  i64 h3_zero_count = 0;
  double sel3_rank1_fraction = 0;   // h3_zero_count / eligible_count
  double rank1_share_all_n = 0;     // h3_zero_count / X
  double rank1_share_squarefree = 0;
  std::set<i64> residues_mod_372;
};

namespace families {

/// Default largest X accepted by density_experiment.
constexpr i64 kDefaultDensityBound = 10'000'000;

/// First `count` verified members for 2n + 1 primes, in increasing product
/// order. Throws OutOfRange when the products leave the supported range.
std::vector<FamilyMember> large_rank_family(int n, int count);

bool eligible_n(i64 n);

/// Class number of discriminant -4N (N > 0), counting primitive reduced forms
/// (a, 2t, c) through square roots of -N modulo each a.
i64 class_number_minus4n(i64 N);

/// Scans 1..X on `threads` workers (0 = hardware concurrency).
DensityResult density_experiment(i64 xmax, unsigned threads = 0,
                                 i64 bound = kDefaultDensityBound);

/// Throws PreconditionViolated unless a_prime is square-free, not 1, and
/// prime to 3.
std::vector<FamilyMember> biquadratic_family(i64 a_prime, int count);

/// j(E_{a,b}) from the Weierstrass invariants, as a reduced fraction.
std::string j_invariant(i64 a, i64 b);

}  // namespace families
}  // namespace selmer3
