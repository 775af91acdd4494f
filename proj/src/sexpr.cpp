#include "ecgroup/sexpr.hpp"

#include <cctype>
#include <utility>

namespace ecgroup {

struct SExpr::Node {
  std::variant<Int, std::string, Seq> value;
};

SExpr SExpr::integer(Int v) {
  return SExpr(std::make_shared<const Node>(Node{std::move(v)}));
}

SExpr SExpr::symbol(std::string_view name) {
  std::string up;
  up.reserve(name.size());
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return SExpr(std::make_shared<const Node>(Node{std::move(up)}));
}

SExpr SExpr::list(Seq elems) {
  return SExpr(std::make_shared<const Node>(Node{std::move(elems)}));
}

bool SExpr::is_integer() const { return std::holds_alternative<Int>(node_->value); }
bool SExpr::is_symbol() const { return std::holds_alternative<std::string>(node_->value); }
bool SExpr::is_sequence() const { return std::holds_alternative<Seq>(node_->value); }

const Int& SExpr::as_integer() const { return std::get<Int>(node_->value); }
const std::string& SExpr::as_symbol() const { return std::get<std::string>(node_->value); }
const SExpr::Seq& SExpr::elements() const { return std::get<Seq>(node_->value); }

const SExpr& SExpr::head() const {
  if (!is_sequence() || elements().empty()) {
    throw std::domain_error("head: expected a nonempty sequence, got " + render());
  }
  return elements().front();
}

SExpr SExpr::suffix(std::size_t k) const {
  if (!is_sequence()) throw std::domain_error("suffix: expected a sequence, got " + render());
  const Seq& es = elements();
  if (k > es.size()) {
    throw std::domain_error("suffix: index " + std::to_string(k) + " past end of sequence of length " +
                            std::to_string(es.size()));
  }
  return list(Seq(es.begin() + static_cast<Seq::difference_type>(k), es.end()));
}

bool SExpr::operator==(const SExpr& other) const {
  if (node_ == other.node_) return true;
  if (node_->value.index() != other.node_->value.index()) return false;
  if (is_integer()) return as_integer() == other.as_integer();
  if (is_symbol()) return as_symbol() == other.as_symbol();
  const Seq& a = elements();
  const Seq& b = other.elements();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

void SExpr::render_to(const std::function<void(std::string_view)>& sink) const {
  if (is_integer()) {
    sink(as_integer().get_str(10));
    return;
  }
  if (is_symbol()) {
    sink(as_symbol());
    return;
  }
  sink("(");
  const Seq& es = elements();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i != 0) sink(" ");
    es[i].render_to(sink);
  }
  sink(")");
}

std::string SExpr::render() const {
  std::string out;
  render_to([&out](std::string_view piece) { out.append(piece); });
  return out;
}

namespace {

bool is_symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '*' || c == '_';
}

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_blank() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_blank();
    return pos >= text.size();
  }
};

bool token_is_integer(std::string_view tok) {
  std::size_t start = tok[0] == '-' ? 1 : 0;
  if (start == tok.size()) return false;
  for (std::size_t i = start; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  }
  return true;
}

SExpr parse_one(Lexer& lx) {
  lx.skip_blank();
  if (lx.pos >= lx.text.size()) throw ParseError("unexpected end of input", lx.pos);
  char c = lx.text[lx.pos];
  if (c == '(') {
    std::size_t open = lx.pos;
    ++lx.pos;
    SExpr::Seq elems;
    for (;;) {
      lx.skip_blank();
      if (lx.pos >= lx.text.size()) throw ParseError("unbalanced '('", open);
      if (lx.text[lx.pos] == ')') {
        ++lx.pos;
        return SExpr::list(std::move(elems));
      }
      elems.push_back(parse_one(lx));
    }
  }
  if (c == ')') throw ParseError("unexpected ')'", lx.pos);

  std::size_t start = lx.pos;
  while (lx.pos < lx.text.size() && is_symbol_char(lx.text[lx.pos])) ++lx.pos;
  if (lx.pos == start) throw ParseError(std::string("unexpected character '") + c + "'", lx.pos);
  std::string_view tok = lx.text.substr(start, lx.pos - start);

  if (token_is_integer(tok)) return SExpr::integer(Int(std::string(tok), 10));
  if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
    throw ParseError("malformed token '" + std::string(tok) + "'", start);
  }
  return SExpr::symbol(tok);
}

}  // namespace

SExpr SExpr::parse(std::string_view text) {
  Lexer lx{text};
  if (lx.at_end()) throw ParseError("empty input", text.size());
  SExpr result = parse_one(lx);
  if (!lx.at_end()) throw ParseError("trailing content after expression", lx.pos);
  return result;
}

}  // namespace ecgroup
