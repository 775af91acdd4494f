#ifndef ECGROUP_SEXPR_HPP
#define ECGROUP_SEXPR_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ecgroup/bigint.hpp"

namespace ecgroup {

// An S-expression is an arbitrary-precision integer, a symbol, or an
// ordered sequence of S-expressions. This is the shared syntax for
// polynomial terms and Horner forms; no evaluation happens here.
//
// Values are immutable after construction and share structure freely,
// so copies are cheap and concurrent readers are safe.
class SExpr {
 public:
  using Seq = std::vector<SExpr>;

  // Atoms and sequences.
  static SExpr integer(Int v);
  static SExpr integer(long v) { return integer(Int(v)); }
  static SExpr symbol(std::string_view name);  // canonicalized to uppercase
  static SExpr list(Seq elems);

  bool is_integer() const;
  bool is_symbol() const;
  bool is_sequence() const;
  bool is_atom() const { return !is_sequence(); }

  const Int& as_integer() const;           // requires is_integer
  const std::string& as_symbol() const;    // requires is_symbol
  const Seq& elements() const;             // requires is_sequence
  std::size_t size() const { return elements().size(); }

  // head(s) = s_0; suffix(s, k) = (s_k ... s_n). suffix of the full
  // length yields the empty sequence; k past the end is an error.
  const SExpr& head() const;
  SExpr suffix(std::size_t k) const;

  // Structural equality: the one notion of equality used everywhere
  // downstream. Normal-form comparison is exactly this.
  bool operator==(const SExpr& other) const;
  bool operator!=(const SExpr& other) const { return !(*this == other); }

  // Canonical text: single spaces between elements, no trailing
  // whitespace. render() and parse() are mutually inverse on valid input.
  std::string render() const;
  void render_to(const std::function<void(std::string_view)>& sink) const;

  // Parse one expression from text. Tokens are separated by whitespace
  // and parentheses; `;` starts a comment running to end of line.
  // Symbols are canonicalized to uppercase. Trailing non-whitespace
  // content after the expression is an error.
  static SExpr parse(std::string_view text);

  // Identity of the underlying node; used for memo keys.
  const void* node_id() const { return node_.get(); }

 private:
  struct Node;
  explicit SExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Parse failure, with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ecgroup

#endif  // ECGROUP_SEXPR_HPP
