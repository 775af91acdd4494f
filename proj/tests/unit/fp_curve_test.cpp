#include "ecgroup/fp_curve.hpp"

#include "doctest.h"
#include "ecgroup/rng.hpp"
#include "testutil.hpp"

using namespace ecgroup;

namespace {

FieldElement random_fe(Rng& rng) {
  for (;;) {
    Int v = rng.bits(255);
    if (v < field_prime()) return FieldElement(v);
  }
}

FieldElement random_nonzero(Rng& rng) {
  for (;;) {
    FieldElement a = random_fe(rng);
    if (!a.is_zero()) return a;
  }
}

}  // namespace

TEST_CASE("the field prime is 2^255 - 19") {
  Int p = field_prime();
  Int two255;
  mpz_ui_pow_ui(two255.get_mpz_t(), 2, 255);
  CHECK(p == two255 - 19);
}

TEST_CASE("field arithmetic edge cases") {
  CHECK(fadd(FieldElement(field_prime() - 1), FieldElement(1)) == FieldElement(0));
  CHECK(fsub(FieldElement(0), FieldElement(1)) == FieldElement(field_prime() - 1));
  CHECK(fmul(FieldElement(0), FieldElement(12345)) == FieldElement(0));
  CHECK(fneg(FieldElement(0)) == FieldElement(0));
  CHECK(FieldElement(-7) == FieldElement(field_prime() - 7));
  CHECK(FieldElement(255).hex() == "ff");
  CHECK(FieldElement(1).hex() == "1");
}

TEST_CASE("field axioms on random triples") {
  Rng rng(0xf1e1d);
  for (int i = 0; i < 1000; ++i) {
    FieldElement a = random_fe(rng);
    FieldElement b = random_fe(rng);
    FieldElement c = random_fe(rng);
    CHECK(fadd(a, b) == fadd(b, a));
    CHECK(fmul(a, b) == fmul(b, a));
    CHECK(fadd(fadd(a, b), c) == fadd(a, fadd(b, c)));
    CHECK(fmul(fmul(a, b), c) == fmul(a, fmul(b, c)));
    CHECK(fmul(a, fadd(b, c)) == fadd(fmul(a, b), fmul(a, c)));
  }
}

TEST_CASE("inversion: Fermat exponentiation against extended Euclid") {
  CHECK(finv(FieldElement(1)) == FieldElement(1));
  CHECK(finv(FieldElement(2)) == FieldElement((field_prime() + 1) / 2));
  CHECK_THROWS_AS(finv(FieldElement(0)), std::domain_error);

  Rng rng(0x1badb002);
  for (int i = 0; i < 100; ++i) {
    FieldElement a = random_nonzero(rng);
    FieldElement inv = finv(a);
    CHECK(fmul(a, inv) == FieldElement(1));
    CHECK(inv.value() == testutil::egcd_inverse(a.value(), field_prime()));
    CHECK(fpow(a, field_prime() - 1) == FieldElement(1));
  }
}

TEST_CASE("square roots for p = 5 (mod 8)") {
  CHECK(int_mod(field_prime(), Int(8)) == 5);
  CHECK(sqrt_mod(FieldElement(0)) == FieldElement(0));
  auto r4 = sqrt_mod(FieldElement(4));
  REQUIRE(r4.has_value());
  CHECK((*r4 == FieldElement(2) || *r4 == FieldElement(field_prime() - 2)));
  // 2 is a nonresidue when p = 5 (mod 8)
  CHECK_FALSE(sqrt_mod(FieldElement(2)).has_value());

  Rng rng(0x5c5c);
  for (int i = 0; i < 100; ++i) {
    FieldElement r = random_fe(rng);
    FieldElement square = fmul(r, r);
    auto root = sqrt_mod(square);
    REQUIRE(root.has_value());
    CHECK(fmul(*root, *root) == square);
  }
}

TEST_CASE("curve membership and construction") {
  CHECK(on_curve(FieldElement(0), FieldElement(0)));
  CHECK_NOTHROW(AffinePoint::make(FieldElement(0), FieldElement(0)));
  CHECK_THROWS_AS(AffinePoint::make(FieldElement(1), FieldElement(1)), std::domain_error);
  CHECK(AffinePoint::infinity().is_infinity());
}

TEST_CASE("group law identities") {
  Rng rng(0xec);
  AffinePoint inf = AffinePoint::infinity();
  AffinePoint origin = AffinePoint::make(FieldElement(0), FieldElement(0));

  CHECK(ec_add(origin, origin) == inf);
  CHECK(ec_neg(inf) == inf);
  CHECK(ec_neg(origin) == origin);
  CHECK(ec_add(inf, inf) == inf);

  for (int i = 0; i < 100; ++i) {
    AffinePoint p = random_point(rng);
    CHECK(ec_add(p, inf) == p);
    CHECK(ec_add(inf, p) == p);
    CHECK(ec_add(p, ec_neg(p)) == inf);
    AffinePoint d = ec_add(p, p);
    CHECK((d.is_infinity() || on_curve(d.x(), d.y())));
  }
}

TEST_CASE("group law commutes and associates on random and degenerate shapes") {
  Rng rng(0xa5a5);
  for (int i = 0; i < 200; ++i) {
    AffinePoint p = random_point(rng);
    AffinePoint q = (i % 5 == 0) ? p : (i % 5 == 1 ? ec_neg(p) : random_point(rng));
    AffinePoint w = (i % 7 == 0) ? AffinePoint::infinity() : random_point(rng);
    CHECK(ec_add(p, q) == ec_add(q, p));
    CHECK(ec_add(ec_add(p, q), w) == ec_add(p, ec_add(q, w)));
  }
}

TEST_CASE("a sum never equals its first operand for finite points") {
  Rng rng(0x11a);
  for (int i = 0; i < 100; ++i) {
    AffinePoint p = random_point(rng);
    AffinePoint q = (i % 3 == 0) ? p : random_point(rng);
    CHECK(ec_add(p, q) != p);
  }
}

TEST_CASE("adding q and -q gives distinct sums unless a point is the origin") {
  Rng rng(0x22b);
  for (int i = 0; i < 100; ++i) {
    AffinePoint p = random_point(rng, /*exclude_origin=*/true);
    AffinePoint q = random_point(rng, true);
    if (q == ec_neg(q)) continue;  // q = O, excluded by sampling anyway
    CHECK(ec_add(p, q) != ec_add(p, ec_neg(q)));
  }
}

TEST_CASE("random_point is deterministic and on the curve") {
  AffinePoint a = random_point(std::uint64_t{42});
  AffinePoint b = random_point(std::uint64_t{42});
  AffinePoint c = random_point(std::uint64_t{43});
  CHECK(a == b);
  CHECK(a != c);
  CHECK_FALSE(a.is_infinity());
  CHECK(on_curve(a.x(), a.y()));

  Rng rng(0x999);
  for (int i = 0; i < 50; ++i) {
    AffinePoint p = random_point(rng, true);
    CHECK_FALSE(p.x().is_zero());
  }
}
