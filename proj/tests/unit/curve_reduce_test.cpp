#include "ecgroup/curve_reduce.hpp"

#include "doctest.h"
#include "ecgroup/fp_curve.hpp"
#include "ecgroup/generators.hpp"
#include "ecgroup/rng.hpp"
#include "ecgroup/sexpr.hpp"

using namespace ecgroup;

namespace {

Shf parse_shf(const char* text) { return Shf::from_sexpr(SExpr::parse(text)); }

Term curve_term(const char* text) {
  return Term::validated(SExpr::parse(text), curve_vars());
}

}  // namespace

TEST_CASE("the vocabulary and theta are fixed") {
  CHECK(curve_vars() == VarList::parse("Y0 Y1 Y2 X0 X1 X2"));
  CHECK(theta() == parse_shf("(POP 3 (POW 1 (POW 1 (POW 1 1 486662) 1) 0))"));
  CHECK(is_normal(theta()));
}

TEST_CASE("theta reads the curve right-hand side at each point index") {
  Rng rng(0x7e7a);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> n;
    for (int i = 0; i < 6; ++i) n.emplace_back(rng.range(-1000, 1000));
    for (unsigned j = 0; j < 3; ++j) {
      std::span<const Int> tail(n.data() + j, n.size() - j);
      const Int& x = n[3 + j];
      CHECK(evalh(theta(), tail) == x * x * x + kCurveA * x * x + x);
    }
  }
}

TEST_CASE("theta powers are memoized copies of the literal powers") {
  CHECK(theta_power(0) == Shf::integer(1));
  CHECK(theta_power(1) == theta());
  CHECK(theta_power(2) == power(theta(), 2));
  CHECK(theta_power(5) == power(theta(), 5));
  CHECK(is_normal(theta_power(3)));

  Rng rng(0x7e7b);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> n;
    for (int i = 0; i < 6; ++i) n.emplace_back(rng.range(-40, 40));
    for (unsigned j = 0; j < 3; ++j) {
      std::span<const Int> tail(n.data() + j, n.size() - j);
      const Int& x = n[3 + j];
      Int rhs = x * x * x + kCurveA * x * x + x;
      CHECK(evalh(theta_power(2), tail) == rhs * rhs);
    }
  }
}

TEST_CASE("split base cases") {
  auto [a0, a1] = split(Shf::integer(5), 1, 0);
  CHECK(a0 == Shf::integer(5));
  CHECK(a1 == Shf::integer(0));

  Shf h = norm(curve_term("(+ (* Y0 X1) (EXPT Y1 3))"), curve_vars());
  auto [b0, b1] = split(h, 0, 1);  // j < k: untouched
  CHECK(b0 == h);
  CHECK(b1 == Shf::integer(0));

  // The bare variable Y0 is purely linear in Y0.
  auto [c0, c1] = split(norm(Term::variable("Y0"), curve_vars()), 0, 0);
  CHECK(c0 == Shf::integer(0));
  CHECK(c1 == Shf::integer(1));

  CHECK_THROWS_AS(split(Shf::integer(5), 3, 0), std::domain_error);
}

TEST_CASE("split separates a Yj-free part and a linear cofactor") {
  Rng rng(0x5371);
  const Int& p = field_prime();
  for (int form = 0; form < 12; ++form) {
    Shf h = form % 2 == 1 ? norm(random_term(rng, curve_vars(), 4, 3), curve_vars())
                          : random_shnf(rng, 6, 4);
    for (int a = 0; a < 12; ++a) {
      CurveSample cs = sample_curve_points(rng);
      unsigned j = static_cast<unsigned>(rng.below(3));
      std::uint64_t k = form % 2 == 1 ? 0 : rng.below(j + 1);
      auto [h0, h1] = split(h, j, k);
      CHECK(is_normal(h0));
      CHECK(is_normal(h1));
      std::span<const Int> tail(cs.values.data() + k, cs.values.size() - k);
      Int expect = evalh(h0, tail) + cs.values[j] * evalh(h1, tail);
      CHECK(int_mod(evalh(h, tail), p) == int_mod(expect, p));
    }
  }
}

TEST_CASE("rewrite fixed points") {
  CHECK(rewrite(Shf::integer(-9), 2) == Shf::integer(-9));
  Shf y0 = norm(Term::variable("Y0"), curve_vars());
  CHECK(rewrite(y0, 0) == y0);
  // Y0^2 rewrites to theta itself.
  Shf y0sq = norm(curve_term("(EXPT Y0 2)"), curve_vars());
  CHECK(rewrite(y0sq, 0) == theta());
}

TEST_CASE("rewrite preserves values modulo p on curve points") {
  Rng rng(0x13171);
  const Int& p = field_prime();
  for (int form = 0; form < 10; ++form) {
    Shf h = form % 2 == 1 ? norm(random_term(rng, curve_vars(), 4, 3), curve_vars())
                          : random_shnf(rng, 6, 6);
    for (unsigned j = 0; j < 3; ++j) {
      Shf r = rewrite(h, j);
      CHECK(is_normal(r));
      for (int a = 0; a < 8; ++a) {
        CurveSample cs = sample_curve_points(rng);
        CHECK(int_mod(evalh(r, cs.values), p) == int_mod(evalh(h, cs.values), p));
      }
    }
  }
}

TEST_CASE("reduce is deterministic and linear in each Yj") {
  Rng rng(0xd00d);
  for (int t = 0; t < 15; ++t) {
    Term sigma = random_term(rng, curve_vars(), 4, 3);
    Shf r = reduce(sigma);
    CHECK(is_normal(r));
    CHECK(reduce(sigma) == r);

    // Second difference in each Yj vanishes over arbitrary integers.
    std::vector<Int> vals;
    for (int i = 0; i < 6; ++i) vals.emplace_back(rng.range(-100000, 100000));
    for (unsigned j = 0; j < 3; ++j) {
      Int base = vals[j];
      Int step(rng.range(1, 5000));
      Int f0 = evalh(r, vals);
      vals[j] = base + step;
      Int f1 = evalh(r, vals);
      vals[j] = base + 2 * step;
      Int f2 = evalh(r, vals);
      vals[j] = base;
      CHECK(f2 - 2 * f1 + f0 == 0);
    }
  }
}

TEST_CASE("reduce of a constant is the constant") {
  CHECK(reduce(Term::integer(12)) == Shf::integer(12));
  CHECK(reduce(Term::integer(0)) == Shf::integer(0));
}
