#ifndef ECGROUP_CURVE_REDUCE_HPP
#define ECGROUP_CURVE_REDUCE_HPP

#include <cstdint>
#include <utility>

#include "ecgroup/polyterm.hpp"
#include "ecgroup/shnf.hpp"

namespace ecgroup {

// Reduction of polynomials over the six curve variables modulo the
// curve equation. The fixed vocabulary is
//
//     (Y0 Y1 Y2 X0 X1 X2)
//
// with the y-coordinates first: rewriting eliminates even powers of
// each Yj by substituting theta = Xj^3 + A Xj^2 + Xj, and the ordering
// keeps those substitutions near the top of the forms.

// The shared vocabulary (Y0 Y1 Y2 X0 X1 X2).
const VarList& curve_vars();

// The fixed normal form (POP 3 (POW 1 (POW 1 (POW 1 1 A) 1) 0)), which
// reads x_j^3 + A x_j^2 + x_j against the tail of the value list
// starting at position 3 + j.
const Shf& theta();

// theta^k, memoized process-wide; safe under concurrent callers. Equal,
// form for form, to power(theta(), k).
Shf theta_power(std::uint64_t k);

// Split h into a Yj-free part and a Yj-linear cofactor: under curve
// point assignments, h == first + y_j * second (mod p), both parts
// normal and of lower Yj-degree. k is the number of leading variables
// already consumed by enclosing recursion; callers start at 0.
std::pair<Shf, Shf> split(const Shf& h, unsigned j, std::uint64_t k);

// h0 + h1 * Yj for (h0, h1) = split(h, j, 0): same value as h modulo p
// under curve-point assignments, and at most linear in Yj.
Shf rewrite(const Shf& h, unsigned j);

// norm over the curve vocabulary followed by rewriting in Y0, Y1, Y2,
// in that order. Deterministic: equal terms reduce to identical trees.
Shf reduce(const Term& sigma);

}  // namespace ecgroup

#endif  // ECGROUP_CURVE_REDUCE_HPP
