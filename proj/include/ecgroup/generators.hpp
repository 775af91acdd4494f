#ifndef ECGROUP_GENERATORS_HPP
#define ECGROUP_GENERATORS_HPP

#include <array>
#include <vector>

#include "ecgroup/fp_curve.hpp"
#include "ecgroup/polyterm.hpp"
#include "ecgroup/rng.hpp"
#include "ecgroup/shnf.hpp"

namespace ecgroup {

// Random inputs for the randomized cross-check suites. Everything here
// is driven by an explicit Rng so a logged seed replays the exact
// stream.

// A random normal form: depth at most `max_depth`, POP skips and POW
// exponents in [1, 4], integer leaves in [-10^6, 10^6]. Leads of POW
// nodes never denote the zero polynomial, matching what the ring
// operations themselves produce. The form reads at most `span_cap`
// values (see variable_span); suites that evaluate against fixed-width
// lists cap it at the list width.
Shf random_shnf(Rng& rng, unsigned max_depth = 6, std::size_t span_cap = 32);

// A random polynomial term over vars: binary + - *, unary -, EXPT with
// exponent in [0, max_expt], integer leaves in [-100, 100].
Term random_term(Rng& rng, const VarList& vars, unsigned max_depth, unsigned max_expt = 4);

// Three random curve points arranged as the curve evaluation context:
// values (y0 y1 y2 x0 x1 x2) and the aligned assignment.
struct CurveSample {
  std::array<AffinePoint, 3> points;
  std::vector<Int> values;
  Assignment assignment;
};
CurveSample sample_curve_points(Rng& rng, bool exclude_origin = false);

}  // namespace ecgroup

#endif  // ECGROUP_GENERATORS_HPP
