#include "ecgroup/polyterm.hpp"

#include <cctype>
#include <unordered_set>
#include <utility>

namespace ecgroup {

namespace {

bool valid_symbol(std::string_view name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '*' || c == '_')) {
      return false;
    }
  }
  return true;
}

}  // namespace

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw TermError("variable list is empty");
  std::unordered_set<std::string_view> seen;
  for (const std::string& n : names_) {
    if (!valid_symbol(n)) throw TermError("invalid variable symbol '" + n + "'");
    if (!seen.insert(n).second) throw TermError("duplicate variable '" + n + "'");
  }
}

VarList VarList::parse(std::string_view spec) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : spec) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) names.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  if (!cur.empty()) names.push_back(std::move(cur));
  return VarList(std::move(names));
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Assignment::Assignment(const VarList& vars, std::vector<Int> values) {
  if (values.size() > vars.size()) throw TermError("more values than variables");
  entries_.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries_.emplace_back(vars.at(i), std::move(values[i]));
  }
}

void Assignment::bind(std::string_view name, Int value) {
  for (auto& [n, v] : entries_) {
    if (n == name) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::string(name), std::move(value));
}

const Int* Assignment::lookup(std::string_view name) const {
  for (const auto& [n, v] : entries_) {
    if (n == name) return &v;
  }
  return nullptr;
}

namespace {

[[noreturn]] void reject(const SExpr& offending, const std::string& why) {
  throw TermError(why + ": " + offending.render());
}

void check_term(const SExpr& s, const VarList& vars) {
  if (s.is_integer()) return;
  if (s.is_symbol()) {
    if (!vars.index_of(s.as_symbol())) reject(s, "unknown symbol");
    return;
  }
  const SExpr::Seq& es = s.elements();
  if (es.empty() || !es[0].is_symbol()) reject(s, "expected an operator application");
  const std::string& op = es[0].as_symbol();
  if (op == "+" || op == "*") {
    if (es.size() != 3) reject(s, "operator " + op + " takes exactly two operands");
    check_term(es[1], vars);
    check_term(es[2], vars);
    return;
  }
  if (op == "-") {
    if (es.size() != 2 && es.size() != 3) reject(s, "operator - takes one or two operands");
    for (std::size_t i = 1; i < es.size(); ++i) check_term(es[i], vars);
    return;
  }
  if (op == "EXPT") {
    if (es.size() != 3) reject(s, "EXPT takes a base and an exponent");
    check_term(es[1], vars);
    if (!es[2].is_integer() || es[2].as_integer() < 0) {
      reject(es[2], "EXPT exponent must be a literal nonnegative integer");
    }
    return;
  }
  reject(s, "unknown operator " + op);
}

}  // namespace

Term Term::validated(const SExpr& s, const VarList& vars) {
  check_term(s, vars);
  return Term(s);
}

Term Term::add(const Term& a, const Term& b) {
  return Term(SExpr::list({SExpr::symbol("+"), a.expr_, b.expr_}));
}

Term Term::sub(const Term& a, const Term& b) {
  return Term(SExpr::list({SExpr::symbol("-"), a.expr_, b.expr_}));
}

Term Term::neg(const Term& a) { return Term(SExpr::list({SExpr::symbol("-"), a.expr_})); }

Term Term::mul(const Term& a, const Term& b) {
  return Term(SExpr::list({SExpr::symbol("*"), a.expr_, b.expr_}));
}

Term Term::expt(const Term& a, std::uint64_t k) {
  return Term(SExpr::list({SExpr::symbol("EXPT"), a.expr_, SExpr::integer(Int(static_cast<unsigned long>(k)))}));
}

Int evalp(const SExpr& s, const Assignment& a) {
  if (s.is_integer()) return s.as_integer();
  if (s.is_symbol()) {
    const Int* v = a.lookup(s.as_symbol());
    if (!v) throw TermError("unbound variable " + s.as_symbol());
    return *v;
  }
  const SExpr::Seq& es = s.elements();
  if (es.empty() || !es[0].is_symbol()) throw TermError("cannot evaluate " + s.render());
  const std::string& op = es[0].as_symbol();
  if (op == "+" && es.size() == 3) return evalp(es[1], a) + evalp(es[2], a);
  if (op == "*" && es.size() == 3) return evalp(es[1], a) * evalp(es[2], a);
  if (op == "-" && es.size() == 3) return evalp(es[1], a) - evalp(es[2], a);
  if (op == "-" && es.size() == 2) return -evalp(es[1], a);
  if (op == "EXPT" && es.size() == 3 && es[2].is_integer() && es[2].as_integer() >= 0) {
    if (!es[2].as_integer().fits_ulong_p()) throw TermError("EXPT exponent too large: " + s.render());
    return int_pow(evalp(es[1], a), es[2].as_integer().get_ui());
  }
  throw TermError("cannot evaluate " + s.render());
}

Int evalp(const Term& t, const Assignment& a) { return evalp(t.sexpr(), a); }

}  // namespace ecgroup
