#ifndef ECGROUP_TRIPLES_HPP
#define ECGROUP_TRIPLES_HPP

#include <string_view>

#include "ecgroup/bigint.hpp"
#include "ecgroup/fp_curve.hpp"
#include "ecgroup/polyterm.hpp"
#include "ecgroup/shnf.hpp"

namespace ecgroup {

// Point encodings. An integer triple (m, n, z) with z not divisible by
// p encodes the affine point (m / z^2, n / z^3); a term triple carries
// the same shape symbolically, over the curve vocabulary. The partial
// addition below mirrors the affine chord / tangent law while staying
// inside Z (no division), which is what makes the symbolic computation
// of nested sums tractable.

struct IntTriple {
  Int m, n, z;
  bool operator==(const IntTriple& o) const { return m == o.m && n == o.n && z == o.z; }
  bool operator!=(const IntTriple& o) const { return !(*this == o); }
};

struct TermTriple {
  Term mu, nu, zeta;
  bool operator==(const TermTriple& o) const {
    return mu == o.mu && nu == o.nu && zeta == o.zeta;
  }
  bool operator!=(const TermTriple& o) const { return !(*this == o); }
};

// Omega = (0, 0, 1), an encoding of the origin O; Pi_i = (Xi, Yi, 1),
// the canonical encoding of the i-th symbolic point.
const TermTriple& omega_triple();
const TermTriple& pi_triple(unsigned i);  // i in {0, 1, 2}

// decode of an integer triple. Throws std::domain_error when z = 0 (mod p).
AffinePoint decode_int(const IntTriple& t);

// Partial addition on integer triples. Defined in exactly two shapes:
// doubling (p and q componentwise identical) and mixed sum (p = (x, y, 1)
// with p != q). Throws std::domain_error otherwise.
IntTriple add_int(const IntTriple& p, const IntTriple& q);

// Partial addition on term triples, same two shapes: doubling when the
// triples are structurally identical, mixed sum when the first has zeta
// literally 1. Component terms are built with one fixed tree shape per
// case, so repeated runs produce byte-identical terms.
TermTriple add_term(const TermTriple& a, const TermTriple& b);

// (mu, (- nu), zeta).
TermTriple neg_term(const TermTriple& t);

// The curve-membership residual nu^2 - (mu^3 + A (mu zeta)^2 + mu zeta^4)
// as a term; the triple is an EC-encoding when it reduces to 0.
Term ec_residual(const TermTriple& t);
bool is_ec_encoding(const TermTriple& t);

// Cross-multiplied coordinate comparisons for the equivalence test:
// sigma = mu * zeta'^2 vs sigma' = mu' * zeta^2, and tau = nu * zeta'^3
// vs tau' = nu' * zeta^3. Two triples are equivalent (decode to the
// same point, whenever both decode to curve points) iff both pairs
// reduce to identical forms.
struct SimTerms {
  Term sigma, sigma_prime, tau, tau_prime;
};
SimTerms sim_terms(const TermTriple& a, const TermTriple& b);
bool sim(const TermTriple& a, const TermTriple& b);

// Evaluate the components under an assignment and decode.
AffinePoint decode_term(const TermTriple& t, const Assignment& a);

// Expression language for the CLI: PI0 | PI1 | PI2 | OMEGA,
// add(e1, e2), neg(e). Case-insensitive; whitespace ignored.
TermTriple parse_triple_expr(std::string_view text);

}  // namespace ecgroup

#endif  // ECGROUP_TRIPLES_HPP
