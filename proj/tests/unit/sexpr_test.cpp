#include "ecgroup/sexpr.hpp"

#include <string>

#include "doctest.h"
#include "ecgroup/rng.hpp"

using namespace ecgroup;

TEST_CASE("parse atoms and sequences") {
  SExpr s = SExpr::parse("(POW 1 1 0)");
  REQUIRE(s.is_sequence());
  REQUIRE(s.size() == 4);
  CHECK(s.elements()[0] == SExpr::symbol("POW"));
  CHECK(s.elements()[1] == SExpr::integer(1));
  CHECK(s.elements()[3] == SExpr::integer(0));

  SExpr tau = SExpr::parse("(* X (EXPT (+ Y Z) 3))");
  REQUIRE(tau.is_sequence());
  CHECK(tau.head() == SExpr::symbol("*"));
  CHECK(tau.elements()[2].elements()[1] ==
        SExpr::list({SExpr::symbol("+"), SExpr::symbol("Y"), SExpr::symbol("Z")}));

  CHECK(SExpr::parse("-7") == SExpr::integer(-7));
  CHECK(SExpr::parse("()").is_sequence());
  CHECK(SExpr::parse("()").size() == 0);
}

TEST_CASE("symbols canonicalize to uppercase") {
  CHECK(SExpr::parse("(pop 3 5)") == SExpr::parse("(POP 3 5)"));
  CHECK(SExpr::symbol("x0") == SExpr::symbol("X0"));
}

TEST_CASE("comments and whitespace are skipped") {
  SExpr s = SExpr::parse("; leading comment\n (A ; inline\n B) ; trailing\n");
  CHECK(s == SExpr::list({SExpr::symbol("A"), SExpr::symbol("B")}));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(SExpr::parse("(("), ParseError);
  CHECK_THROWS_AS(SExpr::parse(""), ParseError);
  CHECK_THROWS_AS(SExpr::parse("   ; just a comment"), ParseError);
  CHECK_THROWS_AS(SExpr::parse(")"), ParseError);
  CHECK_THROWS_AS(SExpr::parse("(A) B"), ParseError);
  CHECK_THROWS_AS(SExpr::parse("12ab"), ParseError);
  CHECK_THROWS_AS(SExpr::parse("(A @ B)"), ParseError);

  try {
    SExpr::parse("(A\n(B");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);  // offset of the unmatched '('
  }
}

TEST_CASE("render produces canonical text") {
  CHECK(SExpr::parse("( POP  3   5 )").render() == "(POP 3 5)");
  CHECK(SExpr::integer(-7).render() == "-7");
  CHECK(SExpr::list({}).render() == "()");
  CHECK(SExpr::parse("(- X)").render() == "(- X)");
}

TEST_CASE("head and suffix") {
  SExpr s = SExpr::parse("(A B C)");
  CHECK(s.head() == SExpr::symbol("A"));
  CHECK(s.suffix(1) == SExpr::parse("(B C)"));
  CHECK(s.suffix(0) == s);
  CHECK(s.suffix(3) == SExpr::list({}));
  CHECK_THROWS_AS(s.suffix(4), std::domain_error);
  CHECK_THROWS_AS(SExpr::list({}).head(), std::domain_error);
  CHECK_THROWS_AS(SExpr::integer(1).head(), std::domain_error);
  CHECK_THROWS_AS(SExpr::integer(1).suffix(0), std::domain_error);
}

namespace {

SExpr random_sexpr(Rng& rng, unsigned depth) {
  if (depth == 0 || rng.chance(1, 2)) {
    if (rng.chance(1, 2)) return SExpr::integer(rng.range(-1000000000L, 1000000000L));
    static const char* names[] = {"X", "Y0", "POW", "+", "-", "*", "A_B", "EXPT"};
    return SExpr::symbol(names[rng.below(8)]);
  }
  SExpr::Seq elems;
  std::size_t count = rng.below(4);
  for (std::size_t i = 0; i < count; ++i) elems.push_back(random_sexpr(rng, depth - 1));
  return SExpr::list(std::move(elems));
}

}  // namespace

TEST_CASE("render / parse round trip") {
  Rng rng(0xc0ffee);
  for (int i = 0; i < 300; ++i) {
    SExpr s = random_sexpr(rng, 5);
    SExpr back = SExpr::parse(s.render());
    CHECK(back == s);
    CHECK(back.render() == s.render());
  }
}

TEST_CASE("structural equality ignores sharing") {
  SExpr a = SExpr::parse("(A (B 1) (B 1))");
  SExpr b = SExpr::parse("(A (B 1) (B 1))");
  CHECK(a == b);
  CHECK(a.node_id() != b.node_id());
  SExpr c = a;
  CHECK(c.node_id() == a.node_id());
}
