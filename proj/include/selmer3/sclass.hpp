#pragma once

// 3-ranks of S-class groups of L = K(sqrt a), through the quadratic subfields
// Q(sqrt m) and Q(sqrt(-3m)) of the biquadratic field L / Q.

#include <vector>

#include "selmer3/eisenstein.hpp"

namespace selmer3 {

struct SubfieldPair {
  i64 m = 0;   // squarefree core of a
  i64 D1 = 0;  // disc Q(sqrt m)
  i64 D2 = 0;  // disc Q(sqrt(-3m))
};

namespace sclass {

/// Throws PreconditionViolated when a is a square in K.
SubfieldPair subfields(i64 a);

int h3_of_L(i64 a);

/// Throws PreconditionViolated if a is not a local square at some q in S.
int h3_S(i64 a, const std::vector<KPrime>& S);

/// |S(L)| = 2|S|, after re-checking that each q splits in L.
int s_primes_in_L_count(const std::vector<KPrime>& S, i64 a);

}  // namespace sclass
}  // namespace selmer3
