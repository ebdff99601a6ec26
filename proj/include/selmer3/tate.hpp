#pragma once

// Tate's algorithm at a rational prime p >= 2, p != 3, over an unramified
// extension of Q_p of residue degree f in {1, 2}.

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "selmer3/intbase.hpp"

namespace selmer3 {

using BigInt = boost::multiprecision::cpp_int;

struct Weierstrass {
  std::array<BigInt, 5> a;  // a1, a2, a3, a4, a6
};

struct LocalReduction {
  std::string kodaira;    // "I0", "I7", "I2*", "IV", ...
  int disc_valuation = 0; // of the minimal model
  i64 tamagawa = 1;
  bool split = true;      // meaningful for I_n only
};

namespace tate {

BigInt discriminant(const Weierstrass& E);
LocalReduction local_data(Weierstrass E, i64 p, int residue_degree);

}  // namespace tate
}  // namespace selmer3
