#include "ecgroup/polyterm.hpp"

#include "doctest.h"
#include "ecgroup/generators.hpp"
#include "ecgroup/rng.hpp"
#include "ecgroup/sexpr.hpp"

using namespace ecgroup;

namespace {

VarList xyz() { return VarList::parse("X Y Z"); }

Assignment bind(const VarList& vars, std::vector<long> values) {
  std::vector<Int> ints(values.begin(), values.end());
  return Assignment(vars, std::move(ints));
}

}  // namespace

TEST_CASE("variable lists reject malformed input") {
  CHECK(VarList::parse("x y z") == xyz());
  CHECK_THROWS_AS(VarList::parse(""), TermError);
  CHECK_THROWS_AS(VarList::parse("X Y X"), TermError);
  CHECK_THROWS_AS(VarList(std::vector<std::string>{"1X"}), TermError);
}

TEST_CASE("validate accepts the term grammar") {
  VarList vars = xyz();
  CHECK_NOTHROW(Term::validated(SExpr::parse("(* X (EXPT (+ Y Z) 3))"), vars));
  CHECK_NOTHROW(Term::validated(SExpr::parse("-12"), vars));
  CHECK_NOTHROW(Term::validated(SExpr::parse("(- X)"), vars));
  CHECK_NOTHROW(Term::validated(SExpr::parse("(- X Y)"), vars));
  CHECK_NOTHROW(Term::validated(SExpr::parse("(EXPT X 0)"), vars));
}

TEST_CASE("validate rejects grammar violations") {
  VarList vars = xyz();
  // exponent must be a literal natural
  CHECK_THROWS_AS(Term::validated(SExpr::parse("(EXPT X Y)"), vars), TermError);
  CHECK_THROWS_AS(Term::validated(SExpr::parse("(EXPT X -1)"), vars), TermError);
  // unknown symbol
  CHECK_THROWS_AS(Term::validated(SExpr::parse("(+ X W)"), vars), TermError);
  // arities
  CHECK_THROWS_AS(Term::validated(SExpr::parse("(+ X)"), vars), TermError);
  CHECK_THROWS_AS(Term::validated(SExpr::parse("(* X Y Z)"), vars), TermError);
  CHECK_THROWS_AS(Term::validated(SExpr::parse("(- X Y Z)"), vars), TermError);
  CHECK_THROWS_AS(Term::validated(SExpr::parse("(FOO X)"), vars), TermError);
  CHECK_THROWS_AS(Term::validated(SExpr::parse("()"), vars), TermError);
}

TEST_CASE("evalp evaluates the worked example") {
  VarList vars = xyz();
  Term tau = Term::validated(SExpr::parse("(* X (EXPT (+ Y Z) 3))"), vars);
  CHECK(evalp(tau, bind(vars, {2, 3, 0})) == 54);
}

TEST_CASE("evalp basics") {
  VarList vars = xyz();
  Assignment a = bind(vars, {5, -2, 7});
  CHECK(evalp(Term::integer(7), a) == 7);
  CHECK(evalp(Term::validated(SExpr::parse("(EXPT X 0)"), vars), a) == 1);
  CHECK(evalp(Term::validated(SExpr::parse("(- X)"), vars), a) == -5);
  CHECK(evalp(Term::validated(SExpr::parse("(- Y Z)"), vars), a) == -9);
  CHECK_THROWS_AS(evalp(Term::variable("W"), a), TermError);
}

TEST_CASE("evalp ignores bindings for absent variables") {
  VarList vars = xyz();
  Term t = Term::validated(SExpr::parse("(* X X)"), vars);
  CHECK(evalp(t, bind(vars, {3, 100, -100})) == evalp(t, bind(vars, {3, 0, 0})));
}

TEST_CASE("evalp is a ring homomorphism from syntax") {
  Rng rng(0x517e);
  VarList vars = xyz();
  for (int i = 0; i < 300; ++i) {
    Term a = random_term(rng, vars, 3, 3);
    Term b = random_term(rng, vars, 3, 3);
    Assignment env = bind(vars, {rng.range(-40, 40), rng.range(-40, 40), rng.range(-40, 40)});
    CHECK(evalp(Term::add(a, b), env) == evalp(a, env) + evalp(b, env));
    CHECK(evalp(Term::sub(a, b), env) == evalp(a, env) - evalp(b, env));
    CHECK(evalp(Term::mul(a, b), env) == evalp(a, env) * evalp(b, env));
    CHECK(evalp(Term::neg(a), env) == -evalp(a, env));
    std::uint64_t k = rng.below(4);
    CHECK(evalp(Term::expt(a, k), env) == int_pow(evalp(a, env), k));
  }
}
