#include <doctest.h>

#include "clifan/expr_parser.hpp"
#include "clifan/random.hpp"
#include "oracles.hpp"

using namespace clifan;

namespace {
const char* kHyper = "(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]";
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(parse_field("x1^2*e[2]", 3), 1) == parse_field("2*x1*e[2]", 3));
  CHECK(partial_derivative(parse_field("x1*e[1]", 3), 2).is_zero());
  CHECK_THROWS_AS(partial_derivative(parse_field("x1", 3), 4), DimensionError);
}

TEST_CASE("Dirac operators") {
  const StructuralSet s = StructuralSet::standard(3), r = StructuralSet::reversed(3);
  CHECK(dirac_left(s, parse_field("x1*e[1]", 3)) == parse_field("-1", 3));
  CHECK(dirac_right(parse_field("x1*e[1]", 3), s) == parse_field("-1", 3));
  CHECK(dirac_left(r, parse_field(kHyper, 3)).is_zero());
  CHECK(dirac_right(parse_field(kHyper, 3), r).is_zero());
}

TEST_CASE("Laplacian") {
  CHECK(laplacian(parse_field("x1^2 - x2^2", 2)).is_zero());
  const PolyField f = parse_field("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", 3);
  const PolyField expected = parse_field("-4*e[2]", 3);
  CHECK(laplacian(f) == expected);
  for (const std::vector<Rational>& x : {std::vector<Rational>{0, 0, 0}, {1, -2, 3}, {Rational(1, 2), 5, -1}})
    CHECK(oracle::laplacian_at(f, x) == expected.evaluate(x));
  CHECK(laplacian(parse_field("x1*x3*e[1] + x2*e[2]", 3)).is_zero());
}

TEST_CASE("Laplacian agrees with finite differences on random cubic fields") {
  Rng rng(21);
  for (int m = 2; m <= 4; ++m)
    for (int t = 0; t < 5; ++t) {
      const PolyField f = rng.field(m, 3, 6);
      std::vector<Rational> x(static_cast<std::size_t>(m));
      for (auto& v : x) v = rng.rational(3, 2);
      CHECK(laplacian(f).evaluate(x) == oracle::laplacian_at(f, x));
    }
}

TEST_CASE("sandwich operator") {
  const StructuralSet s = StructuralSet::standard(3), r = StructuralSet::reversed(3);
  CHECK(sandwich(s, parse_field("x1*e[1]", 3), s).is_zero());
  CHECK(sandwich(s, parse_field("x1*x3*e[1] + x2*e[2]", 3), r).is_zero());
  CHECK(!sandwich(s, parse_field("(x1*x2 + x2*x3)*e[2]", 3), r).is_zero());
}

TEST_CASE("factorization, mixed order and linearity") {
  Rng rng(4);
  for (int m = 2; m <= 4; ++m)
    for (int t = 0; t < 5; ++t) {
      const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
      const PolyField f = rng.field(m, 4, 5), g = rng.field(m, 3, 4);
      CHECK(dirac_left(psi, dirac_left(psi, f)) == -laplacian(f));
      CHECK(dirac_right(dirac_right(f, psi), psi) == -laplacian(f));
      CHECK(sandwich(phi, f, psi) == dirac_right(dirac_left(phi, f), psi));
      CHECK(sandwich(phi, f, psi) == dirac_left(phi, dirac_right(f, psi)));
      const Rational a = rng.rational(), b = rng.rational();
      CHECK(sandwich(phi, a * f + b * g, psi) == a * sandwich(phi, f, psi) + b * sandwich(phi, g, psi));
      CHECK(dirac_left_left(phi, psi, a * f + b * g) ==
            a * dirac_left_left(phi, psi, f) + b * dirac_left_left(phi, psi, g));
    }
}

TEST_CASE("even/odd splitting commutes with the second-order operators") {
  Rng rng(8);
  for (int m = 2; m <= 4; ++m) {
    const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
    const PolyField f = rng.field(m, 4, 6);
    CHECK(even_part(sandwich(phi, f, psi)) == sandwich(phi, even_part(f), psi));
    CHECK(odd_part(sandwich(phi, f, psi)) == sandwich(phi, odd_part(f), psi));
    CHECK(even_part(dirac_left_left(phi, psi, f)) == dirac_left_left(phi, psi, even_part(f)));
    CHECK(odd_part(dirac_left_left(phi, psi, f)) == dirac_left_left(phi, psi, odd_part(f)));
  }
}

TEST_CASE("parser") {
  const PolyField h = parse_field(kHyper, 3);
  CHECK(h.terms().size() == 5);
  CHECK(h.degree() == 2);
  CHECK(parse_field("0", 3).is_zero());
  CHECK(parse_field("x1*x3*e[1] + x2*e[2]", 3).terms().size() == 2);
  CHECK(parse_field(" 3/5 * e[ 1 , 2 ] ", 2) == PolyField::constant(Multivector(2, Blade{3}, Rational(3, 5))));
  CHECK(parse_field("(x1 + x2)^2", 2) == parse_field("x1^2 + 2*x1*x2 + x2^2", 2));
  CHECK(parse_field("e[2]*e[1]", 2) == parse_field("-e[1,2]", 2));
  CHECK(parse_field("-(x1 - 1/2)", 1) == parse_field("1/2 - x1", 1));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_field("x1 + * x2", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
  CHECK_THROWS_AS(parse_field("x4", 3), ParseError);
  CHECK_THROWS_AS(parse_field("e[4]", 3), ParseError);
  CHECK_THROWS_AS(parse_field("(x1", 3), ParseError);
  CHECK_THROWS_AS(parse_field("x1 x2", 3), ParseError);
  CHECK_THROWS_AS(parse_multivector("x1*e[1]", 3), ParseError);
}

TEST_CASE("format and parse round trip") {
  Rng rng(17);
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 10; ++t) {
      const PolyField f = rng.field(m, 3, 5);
      const std::string text = format(f);
      CHECK(parse_field(text, m) == f);
      CHECK(format(parse_field(text, m)) == text);
    }
}

TEST_CASE("evaluation and products") {
  const PolyField f = parse_field("x1*e[1] + x2^2", 2);
  CHECK(f.evaluate({2, 3}) == parse_multivector("2*e[1] + 9", 2));
  CHECK(PolyField::variable(2, 1) * PolyField::variable(2, 2) == parse_field("x1*x2", 2));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(format_monomial(monomials_of_degree(3, 2).front()) == "x1^2");
  CHECK(format_monomial(monomials_of_degree(3, 2).back()) == "x3^2");
}
