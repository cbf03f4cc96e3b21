#include <doctest.h>

#include "rinehart/parse.hpp"
#include "rinehart/quotient.hpp"
#include "rinehart/sampler.hpp"

using namespace rinehart;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

Poly P(std::string_view text, const Ring& ring = Ring::rationals(), const std::vector<std::string>& names = kXYZ) {
  return parse_poly(text, ring, names);
}

}  // namespace

TEST_CASE("grevlex orders by degree then reverse lex") {
  Monomial x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  CHECK(grevlex_greater(x, y));
  CHECK(grevlex_greater(y, z));
  CHECK(grevlex_greater(y * y, x * z));
  CHECK(grevlex_greater(x * y * z, x * x));
  CHECK_FALSE(grevlex_greater(x, x));
}

TEST_CASE("parsing and printing") {
  CHECK(P("(x - y)^2 + 1/2").to_string(kXYZ) == "x^2 - 2*x*y + y^2 + 1/2");
  CHECK(P("-x*(3*y - 2)").to_string(kXYZ) == "-3*x*y + 2*x");
  CHECK(P("0").is_zero());
  CHECK(P("x - x").is_zero());
  const Ring& qi = Ring::quad_ext(Ring::rationals(), -1);
  CHECK(P("(1 + 2*al)*x", qi).to_string(kXYZ) == "(1+2*al)*x");
  CHECK(P("al*al", qi) == Poly::constant(qi, 3, -1));
  CHECK(P("7*x", Ring::prime_field(7)).is_zero());
  CHECK_THROWS_AS(P("x +"), Error);
  CHECK_THROWS_AS(P("w"), Error);
  CHECK_THROWS_AS(P("al"), Error);
  CHECK_THROWS_AS(P("x^"), Error);
  try {
    P("x + )");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
  CHECK_FALSE(valid_variable_name("al"));
  CHECK(valid_variable_name("x1"));
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("x^3*y + 2*y^2 - z"), 0) == P("3*x^2*y"));
  CHECK(partial_derivative(P("x^3*y + 2*y^2 - z"), 1) == P("x^3 + 4*y"));
  CHECK(partial_derivative(P("x^3*y + 2*y^2 - z"), 2) == P("-1"));
  // x^5 differentiates to 5x^4 = 0 in characteristic 5
  CHECK(partial_derivative(P("x^5", Ring::prime_field(5)), 0).is_zero());
  CHECK_THROWS_AS(partial_derivative(P("x"), 3), Error);
}

TEST_CASE("division by a single generator") {
  Poly f = P("x^2 + y^2 + z^2 - 1");
  Poly g = P("x^4 + x*y");
  DivisionResult d = divide(g, f);
  CHECK(d.quotient * f + d.remainder == g);
  for (const auto& t : d.remainder.terms()) CHECK_FALSE(f.leading().mono.divides(t.mono));
  CHECK(normal_form(P("x^2"), PrincipalIdeal(f)) == P("-y^2 - z^2 + 1"));
  CHECK(ideal_member(P("(x^2 + y^2 + z^2 - 1)*(x - 3*y)"), PrincipalIdeal(f)));
  CHECK_FALSE(ideal_member(P("x"), PrincipalIdeal(f)));
}

TEST_CASE("ideals need a unit leading coefficient and a nonconstant generator") {
  CHECK_THROWS_AS(PrincipalIdeal(P("3")), Error);
  const Ring& split = Ring::quad_ext(Ring::rationals(), 1);
  CHECK_THROWS_AS(PrincipalIdeal(P("(1 + al)*x^2 + y", split)), Error);
  // over Q every nonzero coefficient is a unit
  CHECK(PrincipalIdeal(P("2*x^2 - 1")).monic() == P("x^2 - 1/2"));
}

TEST_CASE("normal form properties on random polynomials") {
  Sampler s(99, 3, 4);
  const std::vector<const Ring*> rings = {&Ring::rationals(), &Ring::prime_field(5),
                                          &Ring::quad_ext(Ring::rationals(), -1)};
  for (const Ring* ring : rings) {
    PrincipalIdeal f(P("x^2 + y^2 + z^2 - 3", *ring));
    for (int k = 0; k < 200; ++k) {
      Poly a = s.poly(*ring, 3), b = s.poly(*ring, 3);
      Poly na = normal_form(a, f), nb = normal_form(b, f);
      DivisionResult d = divide(a, f.monic());
      REQUIRE(d.quotient * f.monic() + d.remainder == a);
      REQUIRE(normal_form(na, f) == na);
      REQUIRE(normal_form(a + b, f) == na + nb);
      REQUIRE(normal_form(a * b, f) == normal_form(na * nb, f));
      REQUIRE(normal_form(a + b * f.generator(), f) == na);
    }
  }
}

TEST_CASE("polynomial ring laws and print/parse round trip") {
  Sampler s(7, 3, 4);
  const std::vector<const Ring*> rings = {&Ring::rationals(), &Ring::prime_field(3),
                                          &Ring::quad_ext(Ring::rationals(), -1),
                                          &Ring::quad_ext(Ring::prime_field(7), 1)};
  for (const Ring* ring : rings) {
    for (int k = 0; k < 200; ++k) {
      Poly a = s.poly(*ring, 3), b = s.poly(*ring, 3), c = s.poly(*ring, 3);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(partial_derivative(a * b, 1) == partial_derivative(a, 1) * b + a * partial_derivative(b, 1));
      REQUIRE(parse_poly(a.to_string(kXYZ), *ring, kXYZ) == a);
    }
  }
}

TEST_CASE("quotient units") {
  const Ring& q = Ring::rationals();
  const std::vector<std::string> xs = {"x"};
  auto ideal = std::make_shared<const PrincipalIdeal>(parse_poly("x^2 - 2", q, xs));
  FunctionAlgebra alg(q, 1, ideal);
  QuotientElem x = alg.coordinate(0);
  UnitCertificate cert = quotient_is_unit(x);
  REQUIRE(cert.status == UnitStatus::Unit);
  CHECK(cert.inverse->rep() == parse_poly("1/2*x", q, xs));
  CHECK((x * *cert.inverse) == alg.one());

  // x - 1 is a unit mod x^2 - 2 with inverse x + 1
  cert = quotient_is_unit(x - alg.one());
  REQUIRE(cert.status == UnitStatus::Unit);
  CHECK(cert.inverse->rep() == parse_poly("x + 1", q, xs));

  // mod x^2 - 1 the class of x - 1 is a zero divisor
  FunctionAlgebra alg2(q, 1, std::make_shared<const PrincipalIdeal>(parse_poly("x^2 - 1", q, xs)));
  CHECK(quotient_is_unit(alg2.coordinate(0) - alg2.one()).status == UnitStatus::NotUnit);

  // polynomial rings: only unit constants
  FunctionAlgebra amb(q, 2);
  CHECK(quotient_is_unit(amb.constant(3)).status == UnitStatus::Unit);
  CHECK(quotient_is_unit(amb.coordinate(0)).status == UnitStatus::NotUnit);
  CHECK(quotient_is_unit(amb.coordinate(0) * amb.coordinate(0) + amb.one()).status == UnitStatus::NotUnit);
}

TEST_CASE("quotient elements from different ideals do not mix") {
  const Ring& q = Ring::rationals();
  FunctionAlgebra a(q, 3, std::make_shared<const PrincipalIdeal>(P("x^2 + y^2 + z^2 - 1")));
  FunctionAlgebra b(q, 3, std::make_shared<const PrincipalIdeal>(P("x^2 + y^2 + z^2 - 2")));
  FunctionAlgebra c(q, 3, std::make_shared<const PrincipalIdeal>(P("2*x^2 + 2*y^2 + 2*z^2 - 2")));
  try {
    (void)(a.coordinate(0) + b.coordinate(0));
    FAIL("expected IdealMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdealMismatch);
  }
  // same ideal through a different generator
  CHECK(a.coordinate(0) * a.coordinate(0) + c.coordinate(1) * c.coordinate(1) == a.one() - a.coordinate(2) * a.coordinate(2));
}
