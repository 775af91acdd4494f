#ifndef ECGROUP_FP_CURVE_HPP
#define ECGROUP_FP_CURVE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ecgroup/bigint.hpp"
#include "ecgroup/rng.hpp"

namespace ecgroup {

// Arithmetic in F_p with p = 2^255 - 19, and the affine group law of
// the curve y^2 = x^3 + A x^2 + x with A = 486662. This is the
// concrete side against which all symbolic results are cross-checked.

inline constexpr long kCurveA = 486662;

// The field modulus 2^255 - 19.
const Int& field_prime();

// Canonical residue in [0, p). Every operation re-canonicalizes.
class FieldElement {
 public:
  FieldElement() : value_(0) {}
  explicit FieldElement(const Int& v) : value_(int_mod(v, field_prime())) {}
  explicit FieldElement(long v) : FieldElement(Int(v)) {}

  const Int& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  bool operator==(const FieldElement& o) const { return value_ == o.value_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Plain big-endian lowercase hex of the canonical residue.
  std::string hex() const { return to_hex(value_); }

 private:
  Int value_;
};

FieldElement fadd(const FieldElement& a, const FieldElement& b);
FieldElement fsub(const FieldElement& a, const FieldElement& b);
FieldElement fmul(const FieldElement& a, const FieldElement& b);
FieldElement fneg(const FieldElement& a);
FieldElement fpow(const FieldElement& a, const Int& e);

// Fermat inversion a^(p-2) mod p. Throws std::domain_error on 0.
FieldElement finv(const FieldElement& a);

// a / b in the field.
FieldElement fdiv(const FieldElement& a, const FieldElement& b);

// A curve point: infinity or a coordinate pair satisfying the curve
// equation (checked at construction).
class AffinePoint {
 public:
  static AffinePoint infinity();
  // Throws std::domain_error if (x, y) is not on the curve.
  static AffinePoint make(const FieldElement& x, const FieldElement& y);

  bool is_infinity() const { return infinity_; }
  const FieldElement& x() const;
  const FieldElement& y() const;

  bool operator==(const AffinePoint& o) const;
  bool operator!=(const AffinePoint& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  AffinePoint() : infinity_(true) {}
  AffinePoint(FieldElement x, FieldElement y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}
  bool infinity_;
  FieldElement x_, y_;
};

// x^3 + A x^2 + x.
FieldElement curve_rhs(const FieldElement& x);
bool on_curve(const FieldElement& x, const FieldElement& y);

// The group law: identity at infinity, (x, y) + (x, -y) = infinity,
// otherwise the chord / tangent construction.
AffinePoint ec_add(const AffinePoint& p, const AffinePoint& q);
AffinePoint ec_neg(const AffinePoint& p);

// Square root for p = 5 (mod 8): candidate a^((p+3)/8), corrected by
// 2^((p-1)/4) when its square is -a; empty when a is a nonresidue.
std::optional<FieldElement> sqrt_mod(const FieldElement& a);

// Deterministic sampling: draw x until the curve RHS is a square. Never
// returns infinity; exclude_origin additionally skips O = (0, 0).
AffinePoint random_point(Rng& rng, bool exclude_origin = false);
AffinePoint random_point(std::uint64_t seed, bool exclude_origin = false);

}  // namespace ecgroup

#endif  // ECGROUP_FP_CURVE_HPP
