#include "ecgroup/triples.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "ecgroup/curve_reduce.hpp"

namespace ecgroup {

namespace {

const Term& two() {
  static const Term t = Term::integer(2);
  return t;
}
const Term& coeff_a() {
  static const Term t = Term::integer(kCurveA);
  return t;
}

bool is_literal_one(const Term& t) { return t.sexpr().is_integer() && t.sexpr().as_integer() == 1; }

}  // namespace

const TermTriple& omega_triple() {
  static const TermTriple t{Term::integer(0), Term::integer(0), Term::integer(1)};
  return t;
}

const TermTriple& pi_triple(unsigned i) {
  static const TermTriple pts[3] = {
      TermTriple{Term::variable("X0"), Term::variable("Y0"), Term::integer(1)},
      TermTriple{Term::variable("X1"), Term::variable("Y1"), Term::integer(1)},
      TermTriple{Term::variable("X2"), Term::variable("Y2"), Term::integer(1)},
  };
  if (i > 2) throw std::domain_error("pi_triple: index must be 0, 1 or 2");
  return pts[i];
}

AffinePoint decode_int(const IntTriple& t) {
  FieldElement z(t.z);
  if (z.is_zero()) throw std::domain_error("decode: z component is divisible by the field prime");
  FieldElement z2 = fmul(z, z);
  FieldElement x = fdiv(FieldElement(t.m), z2);
  FieldElement y = fdiv(FieldElement(t.n), fmul(z2, z));
  return AffinePoint::make(x, y);
}

IntTriple add_int(const IntTriple& p, const IntTriple& q) {
  if (p == q) {
    const Int& m = p.m;
    const Int& n = p.n;
    const Int& z = p.z;
    Int z2 = z * z;
    Int zp = 2 * n * z;
    Int w = 3 * m * m + 2 * kCurveA * m * z2 + z2 * z2;
    Int n2 = n * n;
    Int mp = w * w - 4 * n2 * (kCurveA * z2 + 2 * m);
    Int np = w * (4 * m * n2 - mp) - 8 * n2 * n2;
    return IntTriple{mp, np, zp};
  }
  if (p.z == 1) {
    const Int& x = p.m;
    const Int& y = p.n;
    const Int& m = q.m;
    const Int& n = q.n;
    const Int& z = q.z;
    Int z2 = z * z;
    Int g = z2 * x - m;            // z^2 x - m
    Int h = z2 * z * y - n;        // z^3 y - n
    Int zp = z * g;
    Int mp = h * h - (z2 * (kCurveA + x) + m) * g * g;
    Int np = h * (zp * zp * x - mp) - zp * zp * zp * y;
    return IntTriple{mp, np, zp};
  }
  throw std::domain_error("add_int: arguments fit neither the doubling nor the mixed-sum shape");
}

TermTriple add_term(const TermTriple& a, const TermTriple& b) {
  if (a == b) {
    const Term& mu = a.mu;
    const Term& nu = a.nu;
    const Term& zeta = a.zeta;
    Term zeta2 = Term::expt(zeta, 2);
    Term nu2 = Term::expt(nu, 2);
    Term zp = Term::mul(two(), Term::mul(nu, zeta));
    Term omega = Term::add(
        Term::mul(Term::integer(3), Term::expt(mu, 2)),
        Term::add(Term::mul(two(), Term::mul(coeff_a(), Term::mul(mu, zeta2))), Term::expt(zeta, 4)));
    Term mp = Term::sub(
        Term::expt(omega, 2),
        Term::mul(Term::integer(4),
                  Term::mul(nu2, Term::add(Term::mul(coeff_a(), zeta2), Term::mul(two(), mu)))));
    Term np = Term::sub(
        Term::mul(omega, Term::sub(Term::mul(Term::integer(4), Term::mul(mu, nu2)), mp)),
        Term::mul(Term::integer(8), Term::expt(nu, 4)));
    return TermTriple{mp, np, zp};
  }
  if (is_literal_one(a.zeta)) {
    const Term& theta = a.mu;
    const Term& phi = a.nu;
    const Term& mu = b.mu;
    const Term& nu = b.nu;
    const Term& zeta = b.zeta;
    Term zeta2 = Term::expt(zeta, 2);
    Term gap = Term::sub(Term::mul(zeta2, theta), mu);                    // zeta^2 theta - mu
    Term diff = Term::sub(Term::mul(Term::expt(zeta, 3), phi), nu);      // zeta^3 phi - nu
    Term zp = Term::mul(zeta, gap);
    Term mp = Term::sub(
        Term::expt(diff, 2),
        Term::mul(Term::add(Term::mul(zeta2, Term::add(coeff_a(), theta)), mu), Term::expt(gap, 2)));
    Term np = Term::sub(Term::mul(diff, Term::sub(Term::mul(Term::expt(zp, 2), theta), mp)),
                        Term::mul(Term::expt(zp, 3), phi));
    return TermTriple{mp, np, zp};
  }
  throw std::domain_error("add_term: arguments fit neither the doubling nor the mixed-sum shape");
}

TermTriple neg_term(const TermTriple& t) { return TermTriple{t.mu, Term::neg(t.nu), t.zeta}; }

Term ec_residual(const TermTriple& t) {
  return Term::sub(
      Term::expt(t.nu, 2),
      Term::add(Term::expt(t.mu, 3),
                Term::add(Term::mul(coeff_a(), Term::expt(Term::mul(t.mu, t.zeta), 2)),
                          Term::mul(t.mu, Term::expt(t.zeta, 4)))));
}

bool is_ec_encoding(const TermTriple& t) { return reduce(ec_residual(t)).is_zero(); }

SimTerms sim_terms(const TermTriple& a, const TermTriple& b) {
  return SimTerms{
      Term::mul(a.mu, Term::expt(b.zeta, 2)),
      Term::mul(b.mu, Term::expt(a.zeta, 2)),
      Term::mul(a.nu, Term::expt(b.zeta, 3)),
      Term::mul(b.nu, Term::expt(a.zeta, 3)),
  };
}

bool sim(const TermTriple& a, const TermTriple& b) {
  SimTerms s = sim_terms(a, b);
  if (reduce(s.sigma) != reduce(s.sigma_prime)) return false;
  return reduce(s.tau) == reduce(s.tau_prime);
}

AffinePoint decode_term(const TermTriple& t, const Assignment& a) {
  return decode_int(IntTriple{evalp(t.mu, a), evalp(t.nu, a), evalp(t.zeta, a)});
}

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      throw std::invalid_argument("expected '" + std::string(1, c) + "' at offset " + std::to_string(pos) +
                                  " in point expression");
    }
    ++pos;
  }

  std::string word() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string w = std::string(text.substr(start, pos - start));
    for (char& c : w) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return w;
  }

  TermTriple parse() {
    std::string w = word();
    if (w == "PI0") return pi_triple(0);
    if (w == "PI1") return pi_triple(1);
    if (w == "PI2") return pi_triple(2);
    if (w == "OMEGA") return omega_triple();
    if (w == "ADD") {
      expect('(');
      TermTriple lhs = parse();
      expect(',');
      TermTriple rhs = parse();
      expect(')');
      return add_term(lhs, rhs);
    }
    if (w == "NEG") {
      expect('(');
      TermTriple t = parse();
      expect(')');
      return neg_term(t);
    }
    throw std::invalid_argument("unknown point expression '" + w + "'; expected PI0, PI1, PI2, OMEGA, add(...) or neg(...)");
  }
};

}  // namespace

TermTriple parse_triple_expr(std::string_view text) {
  ExprParser p{text};
  TermTriple t = p.parse();
  p.skip_space();
  if (p.pos != text.size()) {
    throw std::invalid_argument("trailing content in point expression at offset " + std::to_string(p.pos));
  }
  return t;
}

}  // namespace ecgroup
