#ifndef ECGROUP_COMPUTATIONS_HPP
#define ECGROUP_COMPUTATIONS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecgroup/polyterm.hpp"

namespace ecgroup {

// The thirteen registered computations certify, through exact normal
// form comparisons, the identities from which the abelian group axioms
// of the curve follow. Each one builds term triples, runs the reduction
// pipeline and checks one of: the curve-membership residual reduces to
// 0 (EC-ENCODING), two triples are equivalent (SIM), or two specific
// terms reduce to the same form (REDUCE-EQUAL).

struct ComputationInfo {
  std::string id;
  std::string description;
};

const std::vector<ComputationInfo>& computation_list();

struct ComputationResult {
  std::string id;
  bool pass = false;
  std::int64_t ms = 0;
  // fnv1a64 over the canonical renderings of every reduced form the
  // check produced, in a fixed order.
  std::string hash;
};

// Throws std::invalid_argument on an unknown id.
ComputationResult run_computation(std::string_view id);

struct SuiteResult {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  // Every form a suite produces through pop/pow/ring ops/norm/split/
  // rewrite/reduce is also checked against the normality predicate.
  std::uint64_t normality_checks = 0;
  std::uint64_t normality_failures = 0;

  bool passed() const { return failures == 0 && normality_failures == 0; }
};

// Randomized cross-check suites. Counts are per the acceptance bar;
// callers may scale trials down for quick runs.
SuiteResult run_homomorphism_suite(std::uint64_t seed, std::uint64_t trials_per_op = 1000);
SuiteResult run_norm_soundness_suite(std::uint64_t seed, std::uint64_t trials = 1000);
SuiteResult run_split_soundness_suite(std::uint64_t seed, std::uint64_t forms = 50,
                                      std::uint64_t assignments = 50);
SuiteResult run_rewrite_soundness_suite(std::uint64_t seed, std::uint64_t forms = 50,
                                        std::uint64_t assignments = 50);
SuiteResult run_linearity_suite(std::uint64_t seed, std::uint64_t terms = 50,
                                std::uint64_t assignments = 4);
SuiteResult run_bridge_suite(std::uint64_t seed, std::uint64_t trials_per_shape = 100);
SuiteResult run_group_axiom_suite(std::uint64_t seed, std::uint64_t trials = 200);
SuiteResult run_field_oracle_suite(std::uint64_t seed, std::uint64_t trials = 100);

struct Report {
  std::uint64_t seed = 0;
  std::vector<ComputationResult> computations;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
  // Schema: { "seed": int, "computations": [ {"id","pass","ms","hash"} ],
  //           "suites": [ {"name","trials","failures"} ] }; fixed key
  // set, registry order.
  std::string to_json() const;
};

// Run every registered computation (jobs > 1 runs them concurrently)
// followed by all randomized suites at their default sizes. Failures
// are recorded in the report, never thrown.
Report run_all(unsigned jobs, std::uint64_t seed);

// The two sides of the REDUCE-EQUAL computation: phi relates the mixed
// sum's x-coordinate residual to psi, the doubling's, closing the case
// where a sum lands on the negation of its first operand.
struct PhiPsi {
  Term phi, psi;
};
PhiPsi phi_psi_terms();

}  // namespace ecgroup

#endif  // ECGROUP_COMPUTATIONS_HPP
