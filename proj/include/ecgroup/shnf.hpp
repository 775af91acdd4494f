#ifndef ECGROUP_SHNF_HPP
#define ECGROUP_SHNF_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecgroup/bigint.hpp"
#include "ecgroup/polyterm.hpp"
#include "ecgroup/sexpr.hpp"

namespace ecgroup {

class ShnfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sparse Horner form: an integer, POP(i, p) or POW(i, p, q).
//
// Reading a form against a value list N = (n_0 n_1 ...):
//   POP(i, p)    -- drop the first i values, continue with p;
//   POW(i, p, q) -- n_0^i * p(N) + q(N without n_0).
//
// Forms are immutable trees with shared substructure; copying is a
// pointer copy. All equality below is structural and bit-exact: two
// polynomials are accepted as equal exactly when their normal forms
// are the same tree.
class Shf {
 public:
  static Shf integer(Int v);
  static Shf integer(long v) { return integer(Int(v)); }
  // Raw constructors; no normalization is applied (see norm_pop / norm_pow).
  static Shf pop_raw(std::uint64_t skip, Shf body);
  static Shf pow_raw(std::uint64_t exponent, Shf lead, Shf tail);

  bool is_integer() const;
  bool is_pop() const;
  bool is_pow() const;

  const Int& as_integer() const;

  std::uint64_t skip() const;        // POP
  const Shf& pop_body() const;       // POP

  std::uint64_t exponent() const;    // POW
  const Shf& pow_lead() const;       // POW
  const Shf& pow_tail() const;       // POW

  bool is_zero() const { return is_integer() && as_integer() == 0; }

  bool operator==(const Shf& other) const;
  bool operator!=(const Shf& other) const { return !(*this == other); }

  // Concrete syntax: integers as themselves, (POP i p), (POW i p q).
  SExpr to_sexpr() const;
  static Shf from_sexpr(const SExpr& s);
  std::string render() const;
  void render_to(const std::function<void(std::string_view)>& sink) const;

  const void* node_id() const { return node_.get(); }

 private:
  struct Node;
  explicit Shf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// The normality predicate. A form is normal when no subform is
//   POP(i, p) with i = 0, p an integer, or p itself a POP, and no
//   subform is POW(i, p, q) with i = 0 or p of shape POW(j, r, 0).
bool is_normal(const Shf& h);

// Evaluation against a list of integers. Total: POP past the end of N
// evaluates its body against the empty list, and POW against an empty
// list is 0.
Int evalh(const Shf& h, std::span<const Int> n);
Int evalh(const Shf& h, const std::vector<Int>& n);

// Number of leading values of N the form can read: lists at least this
// long evaluate h as the polynomial it denotes, shorter ones truncate
// it. The ring operation lemmas below are claims about covering lists.
std::size_t variable_span(const Shf& h);

// Normalizing constructors. For normal arguments the result is normal
// and evaluates like the raw POP / POW would:
//   norm_pop:  collapses i = 0, integer bodies and nested POPs;
//   norm_pow:  requires i >= 1; collapses a zero lead into pop(1, tail)
//              and merges a lead of shape POW(j, r, 0) into the exponent.
Shf norm_pop(std::uint64_t skip, const Shf& body);
Shf norm_pow(std::uint64_t exponent, const Shf& lead, const Shf& tail);

// Ring structure on normal forms. Each returns a normal form whose
// value under every N is the integer sum / product / negation / power
// of the arguments' values.
Shf add(const Shf& x, const Shf& y);
Shf mul(const Shf& x, const Shf& y);
Shf neg(const Shf& x);
Shf power(const Shf& x, std::uint64_t k);

// Translation from polynomial terms: a normal form with
// evalh(norm(t, V), N) = evalp(t, A) for any N extending the aligned
// assignment A. Unknown symbols and malformed nodes raise TermError.
Shf norm(const Term& t, const VarList& vars);

}  // namespace ecgroup

#endif  // ECGROUP_SHNF_HPP
