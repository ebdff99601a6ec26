#pragma once

// Primes of K = Q(zeta_3) and local square tests for rational integers.

#include <compare>
#include <string>
#include <vector>

#include "selmer3/intbase.hpp"

namespace selmer3 {

enum class PrimeKind { Split, Inert, RamifiedAboveThree };

struct KPrime {
  i64 residue_char = 0;
  PrimeKind kind = PrimeKind::Inert;
  /// 1 or 2 for split primes, 0 otherwise.
  int conjugate_index = 0;

  std::string label() const;
  /// Root of x^2 + x + 1 mod residue_char that zeta_3 maps to (split primes only).
  i64 zeta_root() const;

  auto operator<=>(const KPrime&) const = default;
  bool operator==(const KPrime&) const = default;
};

struct LocalSquareVerdict {
  bool is_square = false;
  bool valuation_even = false;
  /// The residue the decision was made on: the unit part mod l (split), the odd
  /// part mod 8 (l = 2), u*(-1)^v mod 3 (ramified), or 0 for inert odd l.
  i64 unit_class_witness = 0;
};

namespace eisenstein {

/// Primes of K above the rational prime l, in canonical order.
std::vector<KPrime> k_primes_above(i64 l);

KPrime ramified_prime();
KPrime inert_prime(i64 l);
KPrime split_prime(i64 l, int conjugate_index);

/// Parses "p", "7a", "7b", "2", "131" (inert). Throws ParseError.
KPrime parse_label(const std::string& label);

/// Normalized valuation at q of the rational integer n (n != 0).
int val_q(i64 n, const KPrime& q);

LocalSquareVerdict is_local_square(i64 a, const KPrime& q);

/// a in K^{*2}, i.e. a or -a/3 is a rational square.
bool is_square_in_K(i64 a);

}  // namespace eisenstein
}  // namespace selmer3
