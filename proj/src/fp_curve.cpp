#include "ecgroup/fp_curve.hpp"

namespace ecgroup {

const Int& field_prime() {
  static const Int p = [] {
    Int v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, 255);
    return Int(v - 19);
  }();
  return p;
}

FieldElement fadd(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.value() + b.value());
}

FieldElement fsub(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.value() - b.value());
}

FieldElement fmul(const FieldElement& a, const FieldElement& b) {
  return FieldElement(a.value() * b.value());
}

FieldElement fneg(const FieldElement& a) { return FieldElement(-a.value()); }

FieldElement fpow(const FieldElement& a, const Int& e) {
  return FieldElement(int_powm(a.value(), e, field_prime()));
}

FieldElement finv(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("finv: 0 has no inverse");
  return fpow(a, field_prime() - 2);
}

FieldElement fdiv(const FieldElement& a, const FieldElement& b) { return fmul(a, finv(b)); }

FieldElement curve_rhs(const FieldElement& x) {
  // x^3 + A x^2 + x = x (x (x + A) + 1)
  FieldElement acc = fadd(x, FieldElement(kCurveA));
  acc = fadd(fmul(x, acc), FieldElement(1));
  return fmul(x, acc);
}

bool on_curve(const FieldElement& x, const FieldElement& y) {
  return fmul(y, y) == curve_rhs(x);
}

AffinePoint AffinePoint::infinity() { return AffinePoint(); }

AffinePoint AffinePoint::make(const FieldElement& x, const FieldElement& y) {
  if (!on_curve(x, y)) {
    throw std::domain_error("point (" + x.hex() + ", " + y.hex() + ") is not on the curve");
  }
  return AffinePoint(x, y);
}

const FieldElement& AffinePoint::x() const {
  if (infinity_) throw std::domain_error("infinity has no x coordinate");
  return x_;
}

const FieldElement& AffinePoint::y() const {
  if (infinity_) throw std::domain_error("infinity has no y coordinate");
  return y_;
}

bool AffinePoint::operator==(const AffinePoint& o) const {
  if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
  return x_ == o.x_ && y_ == o.y_;
}

std::string AffinePoint::describe() const {
  if (infinity_) return "infinity";
  return "(" + x_.hex() + ", " + y_.hex() + ")";
}

AffinePoint ec_add(const AffinePoint& p, const AffinePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const FieldElement& x1 = p.x();
  const FieldElement& y1 = p.y();
  const FieldElement& x2 = q.x();
  const FieldElement& y2 = q.y();

  if (x1 == x2 && y2 == fneg(y1)) return AffinePoint::infinity();

  FieldElement lambda;
  if (x1 != x2) {
    lambda = fdiv(fsub(y2, y1), fsub(x2, x1));
  } else {
    // Tangent slope (3 x1^2 + 2 A x1 + 1) / (2 y1); y1 != 0 here since
    // the cancelling case was handled above.
    FieldElement num =
        fadd(fadd(fmul(FieldElement(3), fmul(x1, x1)), fmul(FieldElement(2 * kCurveA), x1)),
             FieldElement(1));
    lambda = fdiv(num, fmul(FieldElement(2), y1));
  }
  FieldElement x = fsub(fsub(fsub(fmul(lambda, lambda), FieldElement(kCurveA)), x1), x2);
  FieldElement y = fsub(fmul(lambda, fsub(x1, x)), y1);
  return AffinePoint::make(x, y);
}

AffinePoint ec_neg(const AffinePoint& p) {
  if (p.is_infinity()) return p;
  return AffinePoint::make(p.x(), fneg(p.y()));
}

std::optional<FieldElement> sqrt_mod(const FieldElement& a) {
  if (a.is_zero()) return FieldElement(0);
  static const Int cand_exp = (field_prime() + 3) / 8;
  static const FieldElement root_minus_one = fpow(FieldElement(2), (field_prime() - 1) / 4);
  FieldElement r = fpow(a, cand_exp);
  FieldElement rr = fmul(r, r);
  if (rr == a) return r;
  if (rr == fneg(a)) return fmul(r, root_minus_one);
  return std::nullopt;
}

AffinePoint random_point(Rng& rng, bool exclude_origin) {
  for (;;) {
    Int x_raw = rng.bits(255);
    if (x_raw >= field_prime()) continue;
    FieldElement x(x_raw);
    if (exclude_origin && x.is_zero()) continue;
    std::optional<FieldElement> y = sqrt_mod(curve_rhs(x));
    if (!y) continue;
    // Use the parity of one more draw to pick between y and -y, so both
    // halves of the curve are sampled.
    FieldElement yy = (rng.next() & 1) ? fneg(*y) : *y;
    return AffinePoint::make(x, yy);
  }
}

AffinePoint random_point(std::uint64_t seed, bool exclude_origin) {
  Rng rng(seed);
  return random_point(rng, exclude_origin);
}

}  // namespace ecgroup
