#include <doctest.h>

#include "clifan/multivector.hpp"
#include "clifan/random.hpp"
#include "oracles.hpp"

using namespace clifan;

namespace {
Multivector e(int m, std::vector<int> idx, Rational c = 1) { return Multivector(m, Blade::from_indices(idx), c); }
}  // namespace

TEST_CASE("geometric product examples") {
  CHECK(e(3, {1}) * e(3, {1}) == Multivector(3, Rational(-1)));
  CHECK((e(3, {1}) * e(3, {2}) + e(3, {2}) * e(3, {1})).is_zero());
  CHECK(e(3, {1, 2}) * e(3, {2, 3}) == -e(3, {1, 3}));
  CHECK(oracle::product(e(3, {1, 2}), e(3, {2, 3})) == -e(3, {1, 3}));
}

TEST_CASE("blade sign agrees with word reduction oracle") {
  for (int m = 1; m <= 6; ++m)
    for (std::uint32_t a = 0; a < (1u << m); ++a)
      for (std::uint32_t b = 0; b < (1u << m); ++b) {
        auto word = Blade{a}.indices();
        const auto rhs = Blade{b}.indices();
        word.insert(word.end(), rhs.begin(), rhs.end());
        const auto [sign, reduced] = oracle::reduce_word(word);
        REQUIRE(blade_product_sign(Blade{a}, Blade{b}) == sign);
        REQUIRE(Blade::from_indices(reduced) == Blade{a ^ b});
      }
}

TEST_CASE("anticommutation exhaustive") {
  for (int m = 1; m <= 6; ++m)
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        const Multivector ei = Multivector::basis_vector(m, i), ej = Multivector::basis_vector(m, j);
        CHECK(ei * ej + ej * ei == Multivector(m, Rational(i == j ? -2 : 0)));
      }
}

TEST_CASE("associativity and oracle product on random triples") {
  Rng rng(7);
  for (int m = 2; m <= 6; ++m)
    for (int t = 0; t < 10; ++t) {
      const Multivector a = rng.multivector(m), b = rng.multivector(m), c = rng.multivector(m);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == oracle::product(a, b));
    }
}

TEST_CASE("grade projection") {
  const Multivector a = Multivector(3, Rational(1)) + e(3, {1}) + e(3, {1, 2});
  CHECK(grade_project(a, 1) == e(3, {1}));
  CHECK(grade_project(e(3, {1, 2, 3}), 3) == e(3, {1, 2, 3}));
  CHECK_THROWS_AS(grade_project(a, 4), std::out_of_range);
  Rng rng(3);
  for (int m = 2; m <= 6; ++m) {
    const Multivector r = rng.multivector(m);
    Multivector sum(m);
    for (int k = 0; k <= m; ++k) {
      sum += grade_project(r, k);
      CHECK(grade_project(grade_project(r, k), k) == grade_project(r, k));
    }
    CHECK(sum == r);
  }
}

TEST_CASE("product of grade-j and grade-k blades has grades |j-k|, |j-k|+2, ..., j+k") {
  const int m = 5;
  for (Blade a : blade_basis(m))
    for (Blade b : blade_basis(m)) {
      const int g = (Multivector(m, a) * Multivector(m, b)).terms().begin()->first.grade();
      const int lo = std::abs(a.grade() - b.grade()), hi = a.grade() + b.grade();
      CHECK(g >= lo);
      CHECK(g <= hi);
      CHECK((g - lo) % 2 == 0);
    }
}

TEST_CASE("even and odd parts") {
  CHECK(even_part(Multivector(2, Rational(1)) + e(2, {1})) == Multivector(2, Rational(1)));
  CHECK(odd_part(e(2, {1, 2})).is_zero());
}

TEST_CASE("conjugation and reversion") {
  CHECK(conjugate(e(3, {1})) == -e(3, {1}));
  CHECK(conjugate(e(3, {1, 2})) == -e(3, {1, 2}));
  CHECK(conjugate(Multivector(3, Rational(1))) == Multivector(3, Rational(1)));
  CHECK(reverse(e(3, {1})) == e(3, {1}));
  CHECK(reverse(e(3, {1, 2})) == -e(3, {1, 2}));
  Rng rng(11);
  for (int m = 2; m <= 5; ++m)
    for (int t = 0; t < 10; ++t) {
      const Multivector a = rng.multivector(m), b = rng.multivector(m);
      CHECK(reverse(reverse(a)) == a);
      CHECK(reverse(a * b) == reverse(b) * reverse(a));
      CHECK(conjugate(a * b) == conjugate(b) * conjugate(a));
      CHECK(conjugate(reverse(a)) == reverse(conjugate(a)));
    }
}

TEST_CASE("canonical text") {
  const Multivector a = e(3, {1, 2}, Rational(3, 5)) - e(3, {3});
  CHECK(format(a) == "-1*e[3] + 3/5*e[1,2]");
  CHECK(format(Multivector(3)) == "0");
  CHECK(Blade::from_indices({2, 1}) == Blade{3});
  CHECK_THROWS(Blade::from_indices({1, 1}));
  CHECK_THROWS_AS(Multivector(2) + Multivector(3), DimensionError);
}

TEST_CASE("blade basis order") {
  const auto& b = blade_basis(3);
  REQUIRE(b.size() == 8);
  CHECK(format_blade(b[0]) == "e[]");
  CHECK(format_blade(b[1]) == "e[1]");
  CHECK(format_blade(b[4]) == "e[1,2]");
  CHECK(format_blade(b[6]) == "e[2,3]");
  CHECK(format_blade(b[7]) == "e[1,2,3]");
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(blade_position(3, b[i]) == i);
}
