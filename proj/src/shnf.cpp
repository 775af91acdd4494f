#include "ecgroup/shnf.hpp"

#include <unordered_map>
#include <utility>
#include <variant>

namespace ecgroup {

namespace {

struct PopData;
struct PowData;

}  // namespace

struct Shf::Node {
  struct Pop {
    std::uint64_t skip;
    Shf body;
  };
  struct Pow {
    std::uint64_t exponent;
    Shf lead;
    Shf tail;
  };
  std::variant<Int, Pop, Pow> value;
};

Shf Shf::integer(Int v) { return Shf(std::make_shared<const Node>(Node{std::move(v)})); }

Shf Shf::pop_raw(std::uint64_t skip, Shf body) {
  return Shf(std::make_shared<const Node>(Node{Node::Pop{skip, std::move(body)}}));
}

Shf Shf::pow_raw(std::uint64_t exponent, Shf lead, Shf tail) {
  return Shf(std::make_shared<const Node>(Node{Node::Pow{exponent, std::move(lead), std::move(tail)}}));
}

bool Shf::is_integer() const { return std::holds_alternative<Int>(node_->value); }
bool Shf::is_pop() const { return std::holds_alternative<Node::Pop>(node_->value); }
bool Shf::is_pow() const { return std::holds_alternative<Node::Pow>(node_->value); }

const Int& Shf::as_integer() const { return std::get<Int>(node_->value); }
std::uint64_t Shf::skip() const { return std::get<Node::Pop>(node_->value).skip; }
const Shf& Shf::pop_body() const { return std::get<Node::Pop>(node_->value).body; }
std::uint64_t Shf::exponent() const { return std::get<Node::Pow>(node_->value).exponent; }
const Shf& Shf::pow_lead() const { return std::get<Node::Pow>(node_->value).lead; }
const Shf& Shf::pow_tail() const { return std::get<Node::Pow>(node_->value).tail; }

bool Shf::operator==(const Shf& other) const {
  if (node_ == other.node_) return true;
  if (node_->value.index() != other.node_->value.index()) return false;
  if (is_integer()) return as_integer() == other.as_integer();
  if (is_pop()) return skip() == other.skip() && pop_body() == other.pop_body();
  return exponent() == other.exponent() && pow_lead() == other.pow_lead() && pow_tail() == other.pow_tail();
}

SExpr Shf::to_sexpr() const {
  if (is_integer()) return SExpr::integer(as_integer());
  if (is_pop()) {
    return SExpr::list({SExpr::symbol("POP"), SExpr::integer(Int(static_cast<unsigned long>(skip()))),
                        pop_body().to_sexpr()});
  }
  return SExpr::list({SExpr::symbol("POW"), SExpr::integer(Int(static_cast<unsigned long>(exponent()))),
                      pow_lead().to_sexpr(), pow_tail().to_sexpr()});
}

namespace {

std::uint64_t natural_field(const SExpr& s, const char* what) {
  if (!s.is_integer() || s.as_integer() < 0 || !s.as_integer().fits_ulong_p()) {
    throw ShnfError(std::string(what) + " index must be a natural number, got " + s.render());
  }
  return s.as_integer().get_ui();
}

}  // namespace

Shf Shf::from_sexpr(const SExpr& s) {
  if (s.is_integer()) return Shf::integer(s.as_integer());
  if (!s.is_sequence() || s.size() == 0 || !s.elements()[0].is_symbol()) {
    throw ShnfError("not a sparse Horner form: " + s.render());
  }
  const std::string& tag = s.elements()[0].as_symbol();
  if (tag == "POP") {
    if (s.size() != 3) throw ShnfError("POP takes an index and a body: " + s.render());
    return pop_raw(natural_field(s.elements()[1], "POP"), from_sexpr(s.elements()[2]));
  }
  if (tag == "POW") {
    if (s.size() != 4) throw ShnfError("POW takes an index and two subforms: " + s.render());
    return pow_raw(natural_field(s.elements()[1], "POW"), from_sexpr(s.elements()[2]),
                   from_sexpr(s.elements()[3]));
  }
  throw ShnfError("not a sparse Horner form: " + s.render());
}

void Shf::render_to(const std::function<void(std::string_view)>& sink) const {
  if (is_integer()) {
    sink(as_integer().get_str(10));
    return;
  }
  if (is_pop()) {
    sink("(POP ");
    sink(std::to_string(skip()));
    sink(" ");
    pop_body().render_to(sink);
    sink(")");
    return;
  }
  sink("(POW ");
  sink(std::to_string(exponent()));
  sink(" ");
  pow_lead().render_to(sink);
  sink(" ");
  pow_tail().render_to(sink);
  sink(")");
}

std::string Shf::render() const {
  std::string out;
  render_to([&out](std::string_view piece) { out.append(piece); });
  return out;
}

bool is_normal(const Shf& h) {
  if (h.is_integer()) return true;
  if (h.is_pop()) {
    if (h.skip() == 0) return false;
    const Shf& p = h.pop_body();
    if (p.is_integer() || p.is_pop()) return false;
    return is_normal(p);
  }
  if (h.exponent() == 0) return false;
  const Shf& p = h.pow_lead();
  if (p.is_pow() && p.pow_tail().is_zero()) return false;
  return is_normal(p) && is_normal(h.pow_tail());
}

Int evalh(const Shf& h, std::span<const Int> n) {
  if (h.is_integer()) return h.as_integer();
  if (h.is_pop()) {
    std::uint64_t i = h.skip();
    std::size_t drop = i < n.size() ? static_cast<std::size_t>(i) : n.size();
    return evalh(h.pop_body(), n.subspan(drop));
  }
  if (n.empty()) return Int(0);
  return int_pow(n[0], h.exponent()) * evalh(h.pow_lead(), n) + evalh(h.pow_tail(), n.subspan(1));
}

Int evalh(const Shf& h, const std::vector<Int>& n) { return evalh(h, std::span<const Int>(n)); }

std::size_t variable_span(const Shf& h) {
  if (h.is_integer()) return 0;
  if (h.is_pop()) return static_cast<std::size_t>(h.skip()) + variable_span(h.pop_body());
  std::size_t lead = variable_span(h.pow_lead());
  std::size_t tail = 1 + variable_span(h.pow_tail());
  std::size_t need = lead > tail ? lead : tail;
  return need > 1 ? need : 1;
}

Shf norm_pop(std::uint64_t skip, const Shf& body) {
  if (skip == 0 || body.is_integer()) return body;
  if (body.is_pop()) return Shf::pop_raw(skip + body.skip(), body.pop_body());
  return Shf::pop_raw(skip, body);
}

Shf norm_pow(std::uint64_t exponent, const Shf& lead, const Shf& tail) {
  if (exponent == 0) throw ShnfError("pow: exponent must be positive");
  if (lead.is_zero()) return norm_pop(1, tail);
  if (lead.is_pow() && lead.pow_tail().is_zero()) {
    return Shf::pow_raw(exponent + lead.exponent(), lead.pow_lead(), tail);
  }
  return Shf::pow_raw(exponent, lead, tail);
}

// The sum and product recurse over the nine shape combinations; mixed
// integer / POP / POW cases are delegated to their mirror image where
// the result is symmetric.
Shf add(const Shf& x, const Shf& y) {
  if (x.is_integer()) {
    if (y.is_integer()) return Shf::integer(x.as_integer() + y.as_integer());
    if (y.is_pop()) return Shf::pop_raw(y.skip(), add(x, y.pop_body()));
    return Shf::pow_raw(y.exponent(), y.pow_lead(), add(x, y.pow_tail()));
  }
  if (y.is_integer()) return add(y, x);

  if (x.is_pop() && y.is_pop()) {
    std::uint64_t i = x.skip(), j = y.skip();
    if (i == j) return norm_pop(i, add(x.pop_body(), y.pop_body()));
    if (i > j) return norm_pop(j, add(Shf::pop_raw(i - j, x.pop_body()), y.pop_body()));
    return norm_pop(i, add(Shf::pop_raw(j - i, y.pop_body()), x.pop_body()));
  }

  if (x.is_pop() && y.is_pow()) {
    std::uint64_t i = x.skip();
    Shf shifted = i == 1 ? x.pop_body() : Shf::pop_raw(i - 1, x.pop_body());
    return Shf::pow_raw(y.exponent(), y.pow_lead(), add(y.pow_tail(), shifted));
  }
  if (x.is_pow() && y.is_pop()) return add(y, x);

  std::uint64_t i = x.exponent(), j = y.exponent();
  if (i == j) {
    return norm_pow(i, add(x.pow_lead(), y.pow_lead()), add(x.pow_tail(), y.pow_tail()));
  }
  if (i > j) {
    return norm_pow(j, add(Shf::pow_raw(i - j, x.pow_lead(), Shf::integer(0)), y.pow_lead()),
                    add(x.pow_tail(), y.pow_tail()));
  }
  return norm_pow(i, add(Shf::pow_raw(j - i, y.pow_lead(), Shf::integer(0)), x.pow_lead()),
                  add(x.pow_tail(), y.pow_tail()));
}

Shf mul(const Shf& x, const Shf& y) {
  if (x.is_integer()) {
    if (y.is_integer()) return Shf::integer(x.as_integer() * y.as_integer());
    if (y.is_pop()) return norm_pop(y.skip(), mul(x, y.pop_body()));
    return norm_pow(y.exponent(), mul(x, y.pow_lead()), mul(x, y.pow_tail()));
  }
  if (y.is_integer()) return mul(y, x);

  if (x.is_pop() && y.is_pop()) {
    std::uint64_t i = x.skip(), j = y.skip();
    if (i == j) return norm_pop(i, mul(x.pop_body(), y.pop_body()));
    if (i > j) return norm_pop(j, mul(Shf::pop_raw(i - j, x.pop_body()), y.pop_body()));
    return norm_pop(i, mul(Shf::pop_raw(j - i, y.pop_body()), x.pop_body()));
  }

  if (x.is_pop() && y.is_pow()) {
    std::uint64_t i = x.skip();
    Shf shifted = i == 1 ? x.pop_body() : Shf::pop_raw(i - 1, x.pop_body());
    return Shf::pow_raw(y.exponent(), mul(x, y.pow_lead()), mul(shifted, y.pow_tail()));
  }
  if (x.is_pow() && y.is_pop()) return mul(y, x);

  // (n^i p + q)(n^j r + s) = n^(i+j) pr + qs + n^i p s' + n^j r q',
  // with s' and q' read one variable up.
  std::uint64_t i = x.exponent(), j = y.exponent();
  const Shf& p = x.pow_lead();
  const Shf& q = x.pow_tail();
  const Shf& r = y.pow_lead();
  const Shf& s = y.pow_tail();
  Shf cross = norm_pow(i + j, mul(p, r), mul(q, s));
  Shf left = norm_pow(i, mul(p, norm_pop(1, s)), Shf::integer(0));
  Shf right = norm_pow(j, mul(r, norm_pop(1, q)), Shf::integer(0));
  return add(add(cross, left), right);
}

Shf neg(const Shf& x) {
  if (x.is_integer()) return Shf::integer(-x.as_integer());
  if (x.is_pop()) return Shf::pop_raw(x.skip(), neg(x.pop_body()));
  return Shf::pow_raw(x.exponent(), neg(x.pow_lead()), neg(x.pow_tail()));
}

Shf power(const Shf& x, std::uint64_t k) {
  // x^k = x * x^(k-1), folded up from x^0 = 1 so the tree association
  // is reproducible.
  Shf acc = Shf::integer(1);
  for (std::uint64_t step = 0; step < k; ++step) acc = mul(x, acc);
  return acc;
}

namespace {

// One memo per top-level call: components of machine-built terms share
// subtrees heavily, and norm is pure, so each distinct node is
// translated once.
Shf norm_rec(const SExpr& s, const VarList& vars, std::unordered_map<const void*, Shf>& memo) {
  if (s.is_integer()) return Shf::integer(s.as_integer());
  if (s.is_symbol()) {
    auto idx = vars.index_of(s.as_symbol());
    if (!idx) throw TermError("unknown symbol " + s.as_symbol());
    return norm_pop(*idx, Shf::pow_raw(1, Shf::integer(1), Shf::integer(0)));
  }
  auto found = memo.find(s.node_id());
  if (found != memo.end()) return found->second;

  const SExpr::Seq& es = s.elements();
  if (es.empty() || !es[0].is_symbol()) throw TermError("cannot normalize " + s.render());
  const std::string& op = es[0].as_symbol();
  Shf result = Shf::integer(0);
  if (op == "+" && es.size() == 3) {
    result = add(norm_rec(es[1], vars, memo), norm_rec(es[2], vars, memo));
  } else if (op == "*" && es.size() == 3) {
    result = mul(norm_rec(es[1], vars, memo), norm_rec(es[2], vars, memo));
  } else if (op == "-" && es.size() == 3) {
    result = add(norm_rec(es[1], vars, memo), neg(norm_rec(es[2], vars, memo)));
  } else if (op == "-" && es.size() == 2) {
    result = neg(norm_rec(es[1], vars, memo));
  } else if (op == "EXPT" && es.size() == 3 && es[2].is_integer() && es[2].as_integer() >= 0 &&
             es[2].as_integer().fits_ulong_p()) {
    result = power(norm_rec(es[1], vars, memo), es[2].as_integer().get_ui());
  } else {
    throw TermError("cannot normalize " + s.render());
  }
  memo.emplace(s.node_id(), result);
  return result;
}

}  // namespace

Shf norm(const Term& t, const VarList& vars) {
  std::unordered_map<const void*, Shf> memo;
  return norm_rec(t.sexpr(), vars, memo);
}

}  // namespace ecgroup
