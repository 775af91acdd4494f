#ifndef ECGROUP_BIGINT_HPP
#define ECGROUP_BIGINT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ecgroup {

// Arbitrary-precision signed integer. Coefficients produced by the
// reduction pipeline run far past machine word size, so everything
// numeric in this library is an Int.
using Int = mpz_class;

inline Int int_pow(const Int& base, std::uint64_t k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

// Canonical residue in [0, m) for m > 0, defined for negative a as well.
inline Int int_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int int_powm(const Int& base, const Int& exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

// Lowercase hex of a nonnegative value, no prefix, no padding.
inline std::string to_hex(const Int& v) { return v.get_str(16); }

}  // namespace ecgroup

#endif  // ECGROUP_BIGINT_HPP
