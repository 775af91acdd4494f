#ifndef ECGROUP_POLYTERM_HPP
#define ECGROUP_POLYTERM_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ecgroup/bigint.hpp"
#include "ecgroup/sexpr.hpp"

namespace ecgroup {

// Ordered list of distinct variable symbols.
class VarList {
 public:
  explicit VarList(std::vector<std::string> names);

  // Split a space-separated spelling like "X Y Z".
  static VarList parse(std::string_view spec);

  std::size_t size() const { return names_.size(); }
  const std::string& at(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarList& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

// Ordered variable -> integer binding, aligned with a VarList prefix.
class Assignment {
 public:
  Assignment() = default;
  Assignment(const VarList& vars, std::vector<Int> values);

  void bind(std::string_view name, Int value);
  const Int* lookup(std::string_view name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, Int>> entries_;
};

class TermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A polynomial term: an S-expression restricted to
//   integer | variable | (+ a b) | (- a b) | (- a) | (* a b) | (EXPT a k)
// with k a literal nonnegative integer. Operators are strictly binary
// (plus unary minus); nothing is desugared, so a term built twice the
// same way renders identically.
class Term {
 public:
  // Checked entry point: verifies s against the grammar over V and
  // reports the offending subtree otherwise.
  static Term validated(const SExpr& s, const VarList& vars);

  // Unchecked constructors for terms assembled programmatically; each
  // produces exactly one fixed tree shape.
  static Term integer(Int v) { return Term(SExpr::integer(std::move(v))); }
  static Term integer(long v) { return Term(SExpr::integer(v)); }
  static Term variable(std::string_view name) { return Term(SExpr::symbol(name)); }
  static Term add(const Term& a, const Term& b);
  static Term sub(const Term& a, const Term& b);
  static Term neg(const Term& a);
  static Term mul(const Term& a, const Term& b);
  static Term expt(const Term& a, std::uint64_t k);

  const SExpr& sexpr() const { return expr_; }
  bool operator==(const Term& other) const { return expr_ == other.expr_; }
  bool operator!=(const Term& other) const { return !(*this == other); }
  std::string render() const { return expr_.render(); }

 private:
  explicit Term(SExpr e) : expr_(std::move(e)) {}
  SExpr expr_;
};

// Standard recursive evaluation over Z. Throws TermError on an unbound
// variable or a malformed node.
Int evalp(const Term& t, const Assignment& a);
Int evalp(const SExpr& s, const Assignment& a);

}  // namespace ecgroup

#endif  // ECGROUP_POLYTERM_HPP
