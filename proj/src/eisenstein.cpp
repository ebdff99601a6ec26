#include "selmer3/eisenstein.hpp"

#include <algorithm>
#include <cctype>

namespace selmer3 {

using namespace intbase;

std::string KPrime::label() const {
  switch (kind) {
    case PrimeKind::RamifiedAboveThree:
      return "p";
    case PrimeKind::Inert:
      return std::to_string(residue_char);
    case PrimeKind::Split:
      return std::to_string(residue_char) + (conjugate_index == 1 ? "a" : "b");
  }
  return {};
}

i64 KPrime::zeta_root() const {
  if (kind != PrimeKind::Split) throw InvalidArgument("zeta_root needs a split prime");
  // Roots of x^2 + x + 1 are (-1 +- sqrt(-3)) / 2.
  i64 l = residue_char;
  i64 s = sqrt_mod_prime(l - 3, l);
  i64 inv2 = (l + 1) / 2;
  i64 r1 = mod(static_cast<i64>(mulmod(static_cast<u64>(mod(s - 1, l)), static_cast<u64>(inv2),
                                       static_cast<u64>(l))),
               l);
  i64 r2 = mod(-1 - r1, l);
  if (r1 > r2) std::swap(r1, r2);
  return conjugate_index == 1 ? r1 : r2;
}

namespace eisenstein {

KPrime ramified_prime() { return {3, PrimeKind::RamifiedAboveThree, 0}; }
KPrime inert_prime(i64 l) { return {l, PrimeKind::Inert, 0}; }
KPrime split_prime(i64 l, int conjugate_index) { return {l, PrimeKind::Split, conjugate_index}; }

std::vector<KPrime> k_primes_above(i64 l) {
  if (!is_prime(l)) throw InvalidArgument(std::to_string(l) + " is not prime");
  if (l == 3) return {ramified_prime()};
  if (l % 3 == 2) return {inert_prime(l)};
  return {split_prime(l, 1), split_prime(l, 2)};
}

KPrime parse_label(const std::string& label) {
  if (label == "p") return ramified_prime();
  if (label.empty()) throw ParseError("empty prime label");
  std::string digits = label;
  int conj = 0;
  if (label.back() == 'a' || label.back() == 'b') {
    conj = label.back() == 'a' ? 1 : 2;
    digits.pop_back();
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("malformed prime label '" + label + "'");
  i64 l = 0;
  try {
    l = std::stoll(digits);
  } catch (const std::exception&) {
    throw ParseError("malformed prime label '" + label + "'");
  }
  if (!is_prime(l) || l == 3) throw ParseError("label '" + label + "' is not a prime of K");
  if (l % 3 == 1) {
    if (conj == 0) throw ParseError("split prime " + digits + " needs an a/b suffix");
    return split_prime(l, conj);
  }
  if (conj != 0) throw ParseError("inert prime " + digits + " takes no suffix");
  return inert_prime(l);
}

int val_q(i64 n, const KPrime& q) {
  int v = valuation(n, q.residue_char);
  return q.kind == PrimeKind::RamifiedAboveThree ? 2 * v : v;
}

LocalSquareVerdict is_local_square(i64 a, const KPrime& q) {
  if (a == 0) throw InvalidArgument("is_local_square of zero");
  const i64 l = q.residue_char;
  int v = valuation(a, l);
  i64 u = a;
  for (int i = 0; i < v; ++i) u /= l;

  LocalSquareVerdict out;
  switch (q.kind) {
    case PrimeKind::RamifiedAboveThree: {
      // Valuation 2v is always even; 3 = -zeta^2 * pi^2 and zeta = 1 mod pi.
      out.valuation_even = true;
      i64 w = mod((v % 2 ? -u : u), 3);
      out.unit_class_witness = w;
      out.is_square = w == 1;
      return out;
    }
    case PrimeKind::Inert:
      out.valuation_even = v % 2 == 0;
      if (l == 2) {
        out.unit_class_witness = mod(u, 8);
        out.is_square = out.valuation_even && mod(u, 4) == 1;
      } else {
        out.is_square = out.valuation_even;
      }
      return out;
    case PrimeKind::Split:
      out.valuation_even = v % 2 == 0;
      out.unit_class_witness = mod(u, l);
      out.is_square = out.valuation_even && kronecker(u, l) == 1;
      return out;
  }
  return out;
}

bool is_square_in_K(i64 a) {
  if (a == 0) throw InvalidArgument("is_square_in_K of zero");
  if (a > 0) return is_square(a);
  return a % 3 == 0 && is_square(-a / 3);
}

}  // namespace eisenstein
}  // namespace selmer3
