#include "ecgroup/generators.hpp"

#include "ecgroup/curve_reduce.hpp"

namespace ecgroup {

// Note the named locals throughout: C++ leaves function-argument
// evaluation order unspecified, and the rng draws must happen in a
// fixed order for seed replay to be exact.

namespace {

Int random_leaf(Rng& rng) { return Int(rng.range(-1000000, 1000000)); }

Int nonzero_leaf(Rng& rng) {
  Int v = random_leaf(rng);
  return v == 0 ? Int(1) : v;
}

// `span` is the number of leading list positions the generated form may
// read (variable_span budget); POPs spend skip positions, POW tails one.
Shf gen_form(Rng& rng, unsigned depth, std::size_t span);
Shf gen_lead(Rng& rng, unsigned depth, std::size_t span);

Shf gen_pow(Rng& rng, unsigned depth, std::size_t span) {
  // requires span >= 1
  std::uint64_t exp = 1 + rng.below(4);
  Shf lead = gen_lead(rng, depth, span);
  Shf tail = gen_form(rng, depth, span - 1);
  return Shf::pow_raw(exp, lead, tail);
}

// A lead that does not denote the zero polynomial: a nonzero integer, a
// POP of such a POW, or a POW whose own lead is again nonzero-denoting.
// This matches what the ring operations themselves produce and keeps
// the closure property meaningful.
Shf gen_lead(Rng& rng, unsigned depth, std::size_t span) {
  if (depth == 0 || span < 2 || rng.chance(2, 5)) return Shf::integer(nonzero_leaf(rng));
  if (rng.chance(1, 3)) {
    std::uint64_t max_skip = span - 1 < 4 ? span - 1 : 4;
    std::uint64_t skip = 1 + rng.below(max_skip);
    Shf body = gen_pow(rng, depth - 1, span - skip);
    return Shf::pop_raw(skip, body);
  }
  // POW lead: keep its tail off literal 0, or the whole lead would
  // collapse into the enclosing exponent.
  std::uint64_t exp = 1 + rng.below(4);
  Shf inner_lead = gen_lead(rng, depth - 1, span);
  Shf tail = gen_form(rng, depth - 1, span - 1);
  if (tail.is_zero()) tail = Shf::integer(nonzero_leaf(rng));
  return Shf::pow_raw(exp, inner_lead, tail);
}

Shf gen_form(Rng& rng, unsigned depth, std::size_t span) {
  if (depth == 0 || span < 2 || rng.chance(1, 3)) {
    if (span >= 1 && depth > 0 && rng.chance(1, 4)) {
      return Shf::pow_raw(1 + rng.below(4), Shf::integer(nonzero_leaf(rng)),
                          Shf::integer(random_leaf(rng)));
    }
    return Shf::integer(random_leaf(rng));
  }
  if (rng.chance(2, 5)) {
    std::uint64_t max_skip = span - 1 < 4 ? span - 1 : 4;
    std::uint64_t skip = 1 + rng.below(max_skip);
    Shf body = gen_pow(rng, depth - 1, span - skip);
    return Shf::pop_raw(skip, body);
  }
  std::uint64_t exp = 1 + rng.below(4);
  Shf lead = gen_lead(rng, depth - 1, span);
  Shf tail = gen_form(rng, depth - 1, span - 1);
  return Shf::pow_raw(exp, lead, tail);
}

}  // namespace

Shf random_shnf(Rng& rng, unsigned max_depth, std::size_t span_cap) {
  return gen_form(rng, max_depth, span_cap);
}

Term random_term(Rng& rng, const VarList& vars, unsigned max_depth, unsigned max_expt) {
  if (max_depth == 0 || rng.chance(1, 3)) {
    if (rng.chance(1, 2)) return Term::integer(rng.range(-100, 100));
    return Term::variable(vars.at(rng.below(vars.size())));
  }
  switch (rng.below(5)) {
    case 0: {
      Term a = random_term(rng, vars, max_depth - 1, max_expt);
      Term b = random_term(rng, vars, max_depth - 1, max_expt);
      return Term::add(a, b);
    }
    case 1: {
      Term a = random_term(rng, vars, max_depth - 1, max_expt);
      Term b = random_term(rng, vars, max_depth - 1, max_expt);
      return Term::sub(a, b);
    }
    case 2:
      return Term::neg(random_term(rng, vars, max_depth - 1, max_expt));
    case 3: {
      Term a = random_term(rng, vars, max_depth - 1, max_expt);
      Term b = random_term(rng, vars, max_depth - 1, max_expt);
      return Term::mul(a, b);
    }
    default: {
      Term a = random_term(rng, vars, max_depth - 1, max_expt);
      std::uint64_t k = rng.below(max_expt + 1);
      return Term::expt(a, k);
    }
  }
}

CurveSample sample_curve_points(Rng& rng, bool exclude_origin) {
  CurveSample out{{AffinePoint::infinity(), AffinePoint::infinity(), AffinePoint::infinity()},
                  {},
                  Assignment{}};
  out.values.resize(6);
  for (unsigned i = 0; i < 3; ++i) {
    AffinePoint p = random_point(rng, exclude_origin);
    out.points[i] = p;
    out.values[i] = p.y().value();
    out.values[3 + i] = p.x().value();
  }
  out.assignment = Assignment(curve_vars(), out.values);
  return out;
}

}  // namespace ecgroup
