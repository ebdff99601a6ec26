#include "selmer3/sclass.hpp"

#include <set>

#include "selmer3/formclass.hpp"

namespace selmer3::sclass {

namespace {

// Rank over F_3 of a list of row vectors.
int rank_f3(std::vector<std::vector<int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % 3 == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = rows[rank][c] % 3 == 1 ? 1 : 2;
    for (auto& x : rows[rank]) x = (x * inv) % 3;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] % 3 == 0) continue;
      int f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % 3 + 3) % 3;
    }
    ++rank;
  }
  return rank;
}

void require_local_squares(i64 a, const std::vector<KPrime>& S) {
  for (const auto& q : S)
    if (!eisenstein::is_local_square(a, q).is_square)
      throw PreconditionViolated("a = " + std::to_string(a) + " is not a square at " + q.label());
}

}  // namespace

SubfieldPair subfields(i64 a) {
  if (eisenstein::is_square_in_K(a))
    throw PreconditionViolated("a = " + std::to_string(a) + " is a square in K");
  SubfieldPair sp;
  sp.m = intbase::squarefree_core(a).first;
  sp.D1 = formclass::field_disc(sp.m);
  sp.D2 = formclass::field_disc(intbase::squarefree_core(intbase::checked_mul(-3, sp.m)).first);
  return sp;
}

int h3_of_L(i64 a) {
  auto sp = subfields(a);
  return formclass::three_rank(sp.D1) + formclass::three_rank(sp.D2);
}

int h3_S(i64 a, const std::vector<KPrime>& S) {
  require_local_squares(a, S);
  auto sp = subfields(a);
  std::set<i64> chars;
  for (const auto& q : S) chars.insert(q.residue_char);
  int total = 0;
  for (i64 D : {sp.D1, sp.D2}) {
    auto G = formclass::class_group(D);
    if (G->three_rank() == 0) continue;
    std::vector<std::vector<int>> rows;
    for (i64 l : chars) {
      auto pf = formclass::prime_form(l, D);
      if (pf.kind == formclass::PrimeFormKind::Split) rows.push_back(G->coords_mod3(pf.form));
    }
    total += G->three_rank() - rank_f3(std::move(rows));
  }
  return total;
}

int s_primes_in_L_count(const std::vector<KPrime>& S, i64 a) {
  require_local_squares(a, S);
  return 2 * static_cast<int>(S.size());
}

}  // namespace selmer3::sclass
