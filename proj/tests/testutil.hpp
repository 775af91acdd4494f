#ifndef ECGROUP_TESTS_TESTUTIL_HPP
#define ECGROUP_TESTS_TESTUTIL_HPP

#include <utility>

#include "ecgroup/bigint.hpp"

namespace ecgroup::testutil {

// Extended Euclid, kept out of the library on purpose: it is the
// independent oracle the Fermat-exponentiation inverse is checked
// against. Returns (g, s) with g = gcd(a, b) and s*a = g (mod b).
inline std::pair<Int, Int> extended_gcd(Int a, Int b) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return {old_r, old_s};
}

// Modular inverse by extended Euclid; requires gcd(a, m) = 1.
inline Int egcd_inverse(const Int& a, const Int& m) {
  auto [g, s] = extended_gcd(int_mod(a, m), m);
  if (g != 1) throw std::invalid_argument("egcd_inverse: arguments not coprime");
  return int_mod(s, m);
}

}  // namespace ecgroup::testutil

#endif  // ECGROUP_TESTS_TESTUTIL_HPP
