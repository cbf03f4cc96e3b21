#include <doctest.h>

#include <random>

#include "rinehart/ground_ring.hpp"

using namespace rinehart;

namespace {

Scalar random_scalar(std::mt19937_64& rng, const Ring& ring) {
  auto small = [&] { return static_cast<long>(rng() % 11) - 5; };
  if (ring.is_quad()) {
    mpq_class a(small(), static_cast<long>(rng() % 3 + 1)), b(small(), static_cast<long>(rng() % 3 + 1));
    a.canonicalize();
    b.canonicalize();
    if (ring.base().kind() == RingKind::Rationals) return Scalar::from_parts(ring, a, b);
    return Scalar::from_int(ring, small()) + Scalar::from_int(ring, small()) * Scalar::adjoined(ring);
  }
  if (ring.kind() == RingKind::Rationals) {
    mpq_class q(small(), static_cast<long>(rng() % 4 + 1));
    q.canonicalize();
    return Scalar::from_rational(ring, q);
  }
  return Scalar::from_int(ring, static_cast<long>(rng() % 1000));
}

std::vector<const Ring*> sample_rings() {
  return {&Ring::rationals(), &Ring::prime_field(2), &Ring::prime_field(5), &Ring::prime_field(101),
          &Ring::quad_ext(Ring::rationals(), -1), &Ring::quad_ext(Ring::rationals(), 1),
          &Ring::quad_ext(Ring::prime_field(7), -1)};
}

}  // namespace

TEST_CASE("rings are interned") {
  CHECK(&Ring::prime_field(5) == &Ring::prime_field(5));
  CHECK(&Ring::quad_ext(Ring::rationals(), -1) == &Ring::quad_ext(Ring::rationals(), -1));
  CHECK_FALSE(Ring::prime_field(5) == Ring::prime_field(7));
  CHECK(Ring::prime_field(5).characteristic() == 5);
  CHECK(Ring::rationals().characteristic() == 0);
  CHECK(Ring::prime_field(5).to_string() == "F5");
}

TEST_CASE("composite and oversized moduli are rejected") {
  CHECK_THROWS_AS(Ring::prime_field(4), Error);
  CHECK_THROWS_AS(Ring::prime_field(1), Error);
  CHECK_THROWS_AS(Ring::prime_field(91), Error);
  try {
    Ring::prime_field(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRing);
  }
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
}

TEST_CASE("prime field arithmetic") {
  const Ring& f7 = Ring::prime_field(7);
  Scalar three = Scalar::from_int(f7, 3);
  CHECK((three * three.inverse()).is_one());
  CHECK(three.inverse() == Scalar::from_int(f7, 5));
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK(Scalar::from_int(f7, 14).is_zero());
  CHECK_FALSE(Scalar::zero(f7).is_unit());
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), Error);
}

TEST_CASE("rationals print canonically") {
  const Ring& q = Ring::rationals();
  CHECK(Scalar::from_rational(q, mpq_class(10, 12)).to_string() == "5/6");
  CHECK(Scalar::from_int(q, -3).to_string() == "-3");
  CHECK(Scalar::from_int(q, 2).inverse().to_string() == "1/2");
}

TEST_CASE("quadratic extension units follow the norm") {
  const Ring& qi = Ring::quad_ext(Ring::rationals(), -1);
  Scalar al = Scalar::adjoined(qi);
  CHECK((al * al) == Scalar::from_int(qi, -1));
  Scalar z = Scalar::from_int(qi, 1) + Scalar::from_int(qi, 2) * al;
  CHECK(z.to_string() == "1+2*al");
  CHECK((z * z.inverse()).is_one());
  CHECK(z.inverse() == Scalar::from_parts(qi, mpq_class(1, 5), mpq_class(-2, 5)));

  // split case: (1 + al)(1 - al) = 0, so 1 + al is a zero divisor
  const Ring& split = Ring::quad_ext(Ring::rationals(), 1);
  Scalar b = Scalar::adjoined(split);
  Scalar u = Scalar::one(split) + b;
  CHECK_FALSE(u.is_unit());
  CHECK((u * (Scalar::one(split) - b)).is_zero());
  CHECK_THROWS_AS(u.inverse(), Error);

  // over F_5, al^2 = -1 has roots 2, 3, so 2 + al is a zero divisor
  const Ring& f5i = Ring::quad_ext(Ring::prime_field(5), -1);
  Scalar w = Scalar::from_int(f5i, 2) + Scalar::adjoined(f5i);
  CHECK_FALSE(w.is_unit());
  CHECK((Scalar::from_int(f5i, 1) + Scalar::adjoined(f5i)).is_unit());
}

TEST_CASE("mixing rings is an error") {
  Scalar a = Scalar::one(Ring::rationals());
  Scalar b = Scalar::one(Ring::prime_field(5));
  try {
    (void)(a + b);
    FAIL("expected RingMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingMismatch);
  }
}

TEST_CASE("commutative ring laws hold on random samples") {
  std::mt19937_64 rng(20261016);
  for (const Ring* ring : sample_rings()) {
    CAPTURE(ring->to_string());
    for (int k = 0; k < 200; ++k) {
      Scalar a = random_scalar(rng, *ring), b = random_scalar(rng, *ring), c = random_scalar(rng, *ring);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == Scalar::zero(*ring));
      REQUIRE(a * Scalar::one(*ring) == a);
      if (a.is_unit()) REQUIRE((a * a.inverse()).is_one());
      REQUIRE(is_unit(a * b) == (a.is_unit() && b.is_unit()));
    }
  }
}
