#include "ecgroup/computations.hpp"

#include <set>

#include "doctest.h"
#include "ecgroup/curve_reduce.hpp"
#include "ecgroup/generators.hpp"
#include "ecgroup/rng.hpp"
#include "ecgroup/triples.hpp"

using namespace ecgroup;

TEST_CASE("the registry holds thirteen distinct computations") {
  const auto& list = computation_list();
  CHECK(list.size() == 13);
  std::set<std::string> ids;
  for (const auto& info : list) ids.insert(info.id);
  CHECK(ids.size() == 13);
  CHECK(ids.count("C-CLOSURE-ENC") == 1);
  CHECK(ids.count("C-ASSOC-SUM4") == 1);
  CHECK(ids.count("C-OMEGA-CANCEL") == 1);
}

TEST_CASE("unknown computation ids are rejected") {
  CHECK_THROWS_AS(run_computation("bogus"), std::invalid_argument);
}

TEST_CASE("light computations pass and hash deterministically") {
  ComputationResult comm = run_computation("C-COMM");
  CHECK(comm.pass);
  CHECK(comm.hash.size() == 16);
  CHECK(comm.ms >= 0);

  ComputationResult again = run_computation("C-COMM");
  CHECK(again.hash == comm.hash);

  CHECK(run_computation("C-CLOSURE-ENC").pass);
  CHECK(run_computation("C-OMEGA-CANCEL").pass);
}

TEST_CASE("phi and psi: the adopted transcription reduces equal, the shifted-off one does not") {
  // The adopted pair.
  PhiPsi adopted = phi_psi_terms();
  CHECK(reduce(adopted.phi) == reduce(adopted.psi));

  // Its components mean what the identity needs them to mean: for any
  // assignment, phi-hat = (m - x0 z^2 + 2 y0 y1)^2 - (2 y0 y1)^2 and
  // psi-hat = (m' - x1 z'^2) z^2, with (m, z) from PI0+PI1 and
  // (m', z') from PI0+PI0.
  TermTriple sum = add_term(pi_triple(0), pi_triple(1));
  TermTriple dbl = add_term(pi_triple(0), pi_triple(0));
  Rng rng(0xfee1);
  for (int i = 0; i < 20; ++i) {
    CurveSample cs = sample_curve_points(rng, true);
    const Assignment& env = cs.assignment;
    Int m = evalp(sum.mu, env);
    Int z = evalp(sum.zeta, env);
    Int mp = evalp(dbl.mu, env);
    Int zp = evalp(dbl.zeta, env);
    Int x0 = cs.points[0].x().value();
    Int y0 = cs.points[0].y().value();
    Int x1 = cs.points[1].x().value();
    Int y1 = cs.points[1].y().value();
    Int cross = 2 * y0 * y1;
    Int gap = m - x0 * z * z + cross;
    CHECK(evalp(adopted.phi, env) == gap * gap - cross * cross);
    CHECK(evalp(adopted.psi, env) == (mp - x1 * zp * zp) * z * z);
  }

  // The transcription with every index one higher fails the reduction
  // equality; adopting it mechanically would be caught here.
  Term cross = Term::mul(Term::integer(2),
                         Term::mul(Term::variable("Y1"), Term::variable("Y2")));
  Term phi_literal = Term::sub(
      Term::expt(Term::add(Term::sub(sum.mu,
                                     Term::mul(Term::variable("X1"), Term::expt(sum.zeta, 2))),
                           cross),
                 2),
      Term::expt(cross, 2));
  Term psi_literal = Term::mul(
      Term::sub(dbl.mu, Term::mul(Term::variable("X2"), Term::expt(dbl.zeta, 2))),
      Term::expt(sum.zeta, 2));
  CHECK(reduce(phi_literal) != reduce(psi_literal));
}

TEST_CASE("randomized suites pass at reduced sizes") {
  SuiteResult hom = run_homomorphism_suite(0xe1, 60);
  CHECK(hom.failures == 0);
  CHECK(hom.normality_failures == 0);
  CHECK(hom.trials == 300);

  SuiteResult ns = run_norm_soundness_suite(0xe2, 80);
  CHECK(ns.failures == 0);
  CHECK(ns.normality_failures == 0);

  SuiteResult ss = run_split_soundness_suite(0xe3, 6, 6);
  CHECK(ss.failures == 0);
  CHECK(ss.trials == 36);

  SuiteResult rs = run_rewrite_soundness_suite(0xe4, 5, 6);
  CHECK(rs.failures == 0);

  SuiteResult lin = run_linearity_suite(0xe5, 6, 2);
  CHECK(lin.failures == 0);

  SuiteResult bridge = run_bridge_suite(0xe6, 12);
  CHECK(bridge.failures == 0);
  CHECK(bridge.trials == 36);

  SuiteResult grp = run_group_axiom_suite(0xe7, 60);
  CHECK(grp.failures == 0);

  SuiteResult field = run_field_oracle_suite(0xe8, 30);
  CHECK(field.failures == 0);
}

TEST_CASE("report json is schema-stable") {
  Report r;
  r.seed = 7;
  r.computations.push_back({"X", true, 3, "ab"});
  SuiteResult s;
  s.name = "s";
  s.trials = 2;
  s.failures = 0;
  r.suites.push_back(s);

  const char* expected = R"({
  "seed": 7,
  "computations": [
    {
      "id": "X",
      "pass": true,
      "ms": 3,
      "hash": "ab"
    }
  ],
  "suites": [
    {
      "name": "s",
      "trials": 2,
      "failures": 0
    }
  ]
})";
  CHECK(r.to_json() == expected);
  CHECK(r.all_passed());
}

TEST_CASE("an empty report does not count as passing") {
  Report r;
  CHECK_FALSE(r.all_passed());
}
