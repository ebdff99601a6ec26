#pragma once

// Binary quadratic forms ax^2 + bxy + cy^2 and the form class group of a
// fundamental discriminant, by exhaustive enumeration of reduced forms.
//
// Negative D: reduced forms are unique class representatives.
// Positive D: reduced forms fall into cycles under rho; each cycle is one
// class of the narrow (form) class group.

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

#include "selmer3/intbase.hpp"

namespace selmer3 {

struct QuadForm {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;

  i64 disc() const;
  bool operator==(const QuadForm&) const = default;
};

namespace formclass {

/// Default upper bound on |D| for class_group; SELMER3_MAX_DISC overrides it.
constexpr i64 kDefaultMaxDisc = 100'000'000;
i64 max_disc();
/// Process-wide override (0 restores the environment/default value).
void set_max_disc(i64 bound);

bool is_fundamental(i64 D);
/// Discriminant of Q(sqrt(m)) for squarefree m != 0, 1.
i64 field_disc(i64 squarefree_m);

QuadForm principal_form(i64 D);
bool is_reduced(const QuadForm& f);
QuadForm reduce(const QuadForm& f);
/// One reduction step for positive discriminants.
QuadForm rho(const QuadForm& f);
/// Reduced representative of the product class. Throws DiscMismatch.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm inverse(const QuadForm& f);

/// All reduced forms of discriminant D (canonical ones when D < 0).
std::vector<QuadForm> reduced_forms(i64 D);
/// Cycles of reduced forms under rho (D > 0), each starting at its smallest
/// (a, b) in lexicographic order.
std::vector<std::vector<QuadForm>> rho_cycles(i64 D);

enum class PrimeFormKind { Split, Inert, Ramified };
struct PrimeForm {
  PrimeFormKind kind = PrimeFormKind::Inert;
  /// Reduced form in the class of a prime above l (Split only).
  QuadForm form;
  /// The unreduced (l, b, (b^2 - D) / 4l) with minimal b >= 0 (Split only).
  QuadForm raw;
};
PrimeForm prime_form(i64 l, i64 D);

class ClassGroup {
 public:
  using Elem = std::size_t;

  explicit ClassGroup(i64 D);

  i64 disc() const { return disc_; }
  i64 order() const { return static_cast<i64>(reps_.size()); }
  /// Invariant factors, each dividing the next.
  const std::vector<i64>& elementary_divisors() const { return divisors_; }
  /// One generator per invariant factor, in the same order.
  const std::vector<QuadForm>& generators() const { return generators_; }
  /// Orders of the 3-Sylow basis elements (ascending powers of 3).
  const std::vector<i64>& sylow3() const { return sylow3_orders_; }
  const std::vector<QuadForm>& sylow3_generators() const { return sylow3_gens_; }
  int three_rank() const { return static_cast<int>(sylow3_orders_.size()); }

  Elem identity() const { return 0; }
  /// Class of f. Throws DiscMismatch for a different discriminant.
  Elem class_of(const QuadForm& f) const;
  const QuadForm& representative(Elem x) const { return reps_[x]; }
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, i64 e) const;
  i64 element_order(Elem x) const;

  /// Image of the class of g in Cl/Cl^3, in the 3-Sylow basis.
  std::vector<int> coords_mod3(const QuadForm& g) const;

 private:
  struct SylowBasis {
    std::vector<Elem> basis;
    std::vector<i64> orders;
    std::unordered_map<Elem, std::vector<i64>> dlog;
  };
  SylowBasis sylow_basis(i64 p, int v) const;

  i64 disc_;
  std::vector<QuadForm> reps_;
  std::unordered_map<u64, Elem> index_;
  std::vector<i64> divisors_;
  std::vector<QuadForm> generators_;
  std::vector<i64> sylow3_orders_;
  std::vector<QuadForm> sylow3_gens_;
  std::unordered_map<Elem, std::vector<i64>> sylow3_dlog_;
  i64 sylow3_projector_ = 0;
};

/// Cached, shared across threads. Throws OutOfRange when |D| > max_disc().
std::shared_ptr<const ClassGroup> class_group(i64 D);
int three_rank(i64 D);
std::vector<int> coords_mod3(const QuadForm& g, const ClassGroup& G);
void clear_cache();

}  // namespace formclass
}  // namespace selmer3
