// ecgroup: a symbolic kernel that certifies the abelian group law of
// Curve25519 by exact polynomial computation, with a concrete
// finite-field oracle for randomized cross-checking.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "ecgroup/bigstack.hpp"
#include "ecgroup/computations.hpp"
#include "ecgroup/curve_reduce.hpp"
#include "ecgroup/fnv.hpp"
#include "ecgroup/sexpr.hpp"
#include "ecgroup/shnf.hpp"
#include "ecgroup/triples.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 0x25519;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ecgroup::Term load_term(const std::string& path, const ecgroup::VarList& vars) {
  ecgroup::SExpr parsed = ecgroup::SExpr::parse(read_file(path));
  return ecgroup::Term::validated(parsed, vars);
}

void print_computation(const ecgroup::ComputationResult& c) {
  std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.id << "  (" << c.ms << " ms"
            << (c.hash.empty() ? "" : ", fnv1a64 " + c.hash) << ")\n";
}

int cmd_verify_all(unsigned jobs, std::uint64_t seed, const std::string& json_path) {
  ecgroup::Report report = ecgroup::run_all(jobs, seed);
  std::cout << "seed " << report.seed << "\n";
  for (const auto& c : report.computations) print_computation(c);
  for (const auto& s : report.suites) {
    std::cout << (s.passed() ? "pass" : "FAIL") << "  " << s.name << "  (" << s.trials
              << " trials, " << s.failures << " failures";
    if (s.normality_checks != 0) {
      std::cout << "; " << s.normality_checks << " normality checks, " << s.normality_failures
                << " non-normal";
    }
    std::cout << ")\n";
  }
  bool ok = report.all_passed();
  std::cout << (ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + json_path);
    out << report.to_json() << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify_comp(const std::string& id) {
  ecgroup::ComputationResult result;
  ecgroup::run_with_stack(ecgroup::kBigStackBytes,
                          [&] { result = ecgroup::run_computation(id); });
  print_computation(result);
  return result.pass ? 0 : 1;
}

int cmd_norm(const std::string& term_file, const std::string& vars_spec) {
  ecgroup::VarList vars = ecgroup::VarList::parse(vars_spec);
  ecgroup::Term term = load_term(term_file, vars);
  ecgroup::Shf result = ecgroup::norm(term, vars);
  std::cout << result.render() << "\n";
  return 0;
}

int cmd_reduce(const std::string& term_file) {
  ecgroup::Term term = load_term(term_file, ecgroup::curve_vars());
  ecgroup::Shf result = ecgroup::Shf::integer(0);
  ecgroup::run_with_stack(ecgroup::kBigStackBytes, [&] { result = ecgroup::reduce(term); });
  ecgroup::Fnv1a64 fnv;
  result.render_to([&fnv](std::string_view piece) {
    fnv.feed(piece);
    std::cout << piece;
  });
  std::cout << "\n";
  std::cout << "fnv1a64: " << fnv.hex() << "\n";
  return 0;
}

void print_triple(const ecgroup::TermTriple& t) {
  std::cout << "mu:   " << t.mu.render() << "\n";
  std::cout << "nu:   " << t.nu.render() << "\n";
  std::cout << "zeta: " << t.zeta.render() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic verification kernel for the Curve25519 group law"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run registered computations and randomized suites");
  verify->require_subcommand(1);
  auto* verify_all = verify->add_subcommand("all", "run everything and report");
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = kDefaultSeed;
  std::string json_path;
  verify_all->add_option("--jobs", jobs, "worker threads for the computations");
  verify_all->add_option("--seed", seed, "seed for the randomized suites");
  verify_all->add_option("--json", json_path, "write the machine-readable report here");
  auto* verify_comp = verify->add_subcommand("comp", "run a single computation by id");
  std::string comp_id;
  verify_comp->add_option("id", comp_id, "computation id, e.g. C-COMM")->required();

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "normalize a polynomial term to its sparse Horner form");
  std::string term_file, vars_spec;
  norm_cmd->add_option("--term-file", term_file, "file with one S-expression term")->required();
  norm_cmd->add_option("--vars", vars_spec, "variable ordering, e.g. \"X Y Z\"")->required();

  // reduce
  auto* reduce_cmd =
      app.add_subcommand("reduce", "reduce a term over (Y0 Y1 Y2 X0 X1 X2) modulo the curve equation");
  std::string reduce_file;
  reduce_cmd->add_option("--term-file", reduce_file, "file with one S-expression term")->required();

  // triple
  auto* triple = app.add_subcommand("triple", "operate on point encodings as term triples");
  triple->require_subcommand(1);
  auto* triple_add = triple->add_subcommand("add", "add two encodings");
  auto* triple_neg = triple->add_subcommand("neg", "negate an encoding");
  auto* triple_check = triple->add_subcommand("check", "test whether an encoding lies on the curve");
  auto* triple_sim = triple->add_subcommand("sim", "test whether two encodings denote the same point");
  std::string expr_a, expr_b;
  triple_add->add_option("lhs", expr_a, "point expression, e.g. add(PI0, PI1)")->required();
  triple_add->add_option("rhs", expr_b, "point expression")->required();
  triple_neg->add_option("expr", expr_a, "point expression")->required();
  triple_check->add_option("expr", expr_a, "point expression")->required();
  triple_sim->add_option("lhs", expr_a, "point expression")->required();
  triple_sim->add_option("rhs", expr_b, "point expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_all->parsed()) return cmd_verify_all(jobs, seed, json_path);
    if (verify_comp->parsed()) return cmd_verify_comp(comp_id);
    if (norm_cmd->parsed()) return cmd_norm(term_file, vars_spec);
    if (reduce_cmd->parsed()) return cmd_reduce(reduce_file);
    if (triple_add->parsed()) {
      print_triple(ecgroup::add_term(ecgroup::parse_triple_expr(expr_a),
                                     ecgroup::parse_triple_expr(expr_b)));
      return 0;
    }
    if (triple_neg->parsed()) {
      print_triple(ecgroup::neg_term(ecgroup::parse_triple_expr(expr_a)));
      return 0;
    }
    if (triple_check->parsed()) {
      ecgroup::TermTriple t = ecgroup::parse_triple_expr(expr_a);
      bool ok = false;
      ecgroup::run_with_stack(ecgroup::kBigStackBytes, [&] { ok = ecgroup::is_ec_encoding(t); });
      std::cout << "ec-encoding: " << (ok ? "true" : "false") << "\n";
      return 0;
    }
    if (triple_sim->parsed()) {
      ecgroup::TermTriple a = ecgroup::parse_triple_expr(expr_a);
      ecgroup::TermTriple b = ecgroup::parse_triple_expr(expr_b);
      bool ok = false;
      ecgroup::run_with_stack(ecgroup::kBigStackBytes, [&] { ok = ecgroup::sim(a, b); });
      std::cout << "sim: " << (ok ? "true" : "false") << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
