#pragma once

// Curves E_{a,b}: y^2 = x^3 + a(x - b)^2, their bad primes over K = Q(zeta_3),
// Tamagawa data, and bounds on the psi-, psi-hat- and 3-Selmer ranks.

#include <optional>
#include <string>
#include <vector>

#include "selmer3/eisenstein.hpp"
#include "selmer3/tate.hpp"

namespace selmer3 {

struct CurveParams {
  i64 a = 0;
  i64 b = 0;
  i64 d = 0;          // 4a + 27b
  BigInt disc;        // -16 a^2 b^3 d
  bool normalized = false;
  i64 input_a = 0;
  i64 input_b = 0;
  /// (input_a, input_b) = (a c^2, b c^2) with c^2 = scale (possibly negative
  /// when a factor -3 was removed).
  i64 scale = 1;
};

enum class Provenance { Main, T2, T3 };
const char* provenance_name(Provenance p);

struct SMember {
  KPrime q;
  Provenance tag = Provenance::Main;
  bool operator==(const SMember&) const = default;
};

struct SSets {
  std::vector<SMember> S1, S2, S3;

  static std::vector<KPrime> primes(const std::vector<SMember>& S);
  static std::vector<KPrime> unite(const std::vector<SMember>& X, const std::vector<SMember>& Y);
};

struct TamagawaRecord {
  KPrime q;
  std::optional<i64> c_E;
  std::optional<i64> c_Ehat;
  std::string kodaira_E;
  std::string kodaira_Ehat;
  std::string reduction_note;
};

struct RankInterval {
  i64 lo = 0;
  i64 hi = 0;
  bool operator==(const RankInterval&) const = default;
};

struct Bounds {
  i64 lower = 0;
  std::optional<i64> upper;  // empty only when a needed class group was out of range
  bool operator==(const Bounds&) const = default;
};

struct SelmerReport {
  CurveParams params;
  bool a_square_in_K = false;
  SSets ssets;
  std::optional<int> h12;  // h^3 of S_{1,2}(L)
  std::optional<int> h13;  // h^3 of S_{1,3}(L)
  std::optional<int> sL12;
  std::optional<int> sL13;
  Bounds psi, psihat, sel3;
  std::optional<i64> sel3_upper_loose;
  std::optional<int> root_number;
  std::optional<RankInterval> rank_input;
  std::vector<std::string> theorem_trace;
  std::vector<std::string> notes;
};

struct RankInputs {
  std::optional<int> h12;
  std::optional<int> h13;
};

namespace descent {

/// Throws DegenerateCurve when ab(4a + 27b) = 0.
CurveParams make_params(i64 a, i64 b);
CurveParams normalize(i64 a, i64 b);

/// Rational primes dividing 2 * 3 * a * b * d, ascending.
std::vector<i64> candidate_primes(const CurveParams& params);

SSets classify(const CurveParams& params);

/// Tate's algorithm on E and E-hat = E_{-27a, d} at q (q not over 3); case
/// analysis at the prime over 3.
TamagawaRecord tamagawa(const CurveParams& params, const KPrime& q);
/// The tabulated local values, when q does not lie over 3, a is a square at q
/// and q divides the discriminant; nullopt otherwise.
std::optional<std::pair<i64, i64>> tabulated_local_data(const CurveParams& params, const KPrime& q);
/// Primes of K dividing the discriminant (including the prime over 3 always).
std::vector<KPrime> bad_primes(const CurveParams& params);

Bounds psi_bounds(const CurveParams& params, const SSets& ssets, const RankInputs& ranks,
                  std::vector<std::string>* trace = nullptr);
Bounds psihat_bounds(const CurveParams& params, const SSets& ssets, const RankInputs& ranks,
                     std::vector<std::string>* trace = nullptr);
Bounds sel3_bounds(const CurveParams& params, const SSets& ssets, const RankInputs& ranks,
                   std::optional<RankInterval> rank, std::vector<std::string>* trace = nullptr);
std::optional<int> root_number(const CurveParams& params, const SSets& ssets);

/// Full pipeline. Class groups beyond formclass::max_disc() leave the
/// affected h-values and upper bounds empty instead of failing.
SelmerReport analyze(i64 a, i64 b, std::optional<RankInterval> rank = std::nullopt);

// Finite-field checks of the isogeny formulas.
struct FpPoint {
  bool infinity = true;
  i64 x = 0;
  i64 y = 0;
  bool operator==(const FpPoint&) const = default;
};

/// y^2 = x^3 + A2 x^2 + A4 x + A6 over F_l.
struct FpCurve {
  i64 l = 0;
  i64 A2 = 0, A4 = 0, A6 = 0;

  bool contains(const FpPoint& P) const;
  FpPoint add(const FpPoint& P, const FpPoint& Q) const;
  FpPoint neg(const FpPoint& P) const;
  FpPoint mul(i64 k, const FpPoint& P) const;
  /// Uniformly random affine point using the supplied 64-bit source.
  template <class Rng>
  FpPoint random_point(Rng& rng) const;
};

FpCurve curve_mod(i64 a, i64 b, i64 l);
enum class IsogenyDirection { Psi, PsiHat };
/// Throws BadReductionPrime when l divides 6 * disc.
FpPoint apply_isogeny(const CurveParams& params, const FpPoint& P, i64 l, IsogenyDirection dir);

}  // namespace descent

template <class Rng>
descent::FpPoint descent::FpCurve::random_point(Rng& rng) const {
  for (;;) {
    i64 x = static_cast<i64>(rng() % static_cast<u64>(l));
    i64 rhs = intbase::mod(
        static_cast<i64>((static_cast<i128>(x) * x % l * x + static_cast<i128>(A2) * x % l * x +
                          static_cast<i128>(A4) * x + A6) %
                         l),
        l);
    i64 y = intbase::sqrt_mod_prime(rhs, l);
    if (y < 0) continue;
    if (rng() & 1) y = intbase::mod(-y, l);
    return {false, x, y};
  }
}

}  // namespace selmer3
