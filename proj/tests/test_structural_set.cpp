#include <doctest.h>

#include "clifan/random.hpp"
#include "clifan/structural_set.hpp"

using namespace clifan;

TEST_CASE("validate") {
  CHECK_NOTHROW(StructuralSet::validate({Multivector::basis_vector(3, 1), Multivector::basis_vector(3, 2),
                                         Multivector::basis_vector(3, 3)}));
  const StructuralSet r = StructuralSet::validate(
      {Multivector::basis_vector(3, 3), Multivector::basis_vector(3, 2), Multivector::basis_vector(3, 1)});
  CHECK(r == StructuralSet::reversed(3));
  try {
    StructuralSet::validate({Multivector::basis_vector(2, 1), Multivector::basis_vector(2, 1)});
    FAIL("expected StructuralSetError");
  } catch (const StructuralSetError& e) {
    CHECK(e.first == 1);
    CHECK(e.second == 2);
  }
  CHECK_THROWS_AS(StructuralSet::validate({Multivector(2, Rational(1)), Multivector::basis_vector(2, 2)}),
                  StructuralSetError);
}

TEST_CASE("from_matrix") {
  CHECK(StructuralSet::from_matrix(TransitionMatrix::identity(4)) == StructuralSet::standard(4));
  const Rational c1(3, 5), c2(4, 5);
  CHECK_NOTHROW(StructuralSet::from_matrix(TransitionMatrix(2, {c1, -c2, c2, c1})));
  CHECK_NOTHROW(StructuralSet::from_matrix(TransitionMatrix(2, {c1, c2, c2, -c1})));
  CHECK_THROWS_AS(StructuralSet::from_matrix(TransitionMatrix(2, {1, 1, 0, 1})), StructuralSetError);
}

TEST_CASE("transition matrices") {
  const StructuralSet s = StructuralSet::standard(3);
  CHECK(transition(s, s) == TransitionMatrix::identity(3));

  const Rational c1(3, 5), c2(4, 5);
  const StructuralSet psi = StructuralSet::validate(
      {Multivector::basis_vector(2, 1) * c1 + Multivector::basis_vector(2, 2) * c2,
       Multivector::basis_vector(2, 1) * -c2 + Multivector::basis_vector(2, 2) * c1});
  const TransitionMatrix t = transition(StructuralSet::standard(2), psi);
  CHECK(t.determinant() == 1);
  CHECK(classify_planar(t) == PlanarForm::Rotation);
  CHECK(classify_planar(StructuralSet::reflection2(c1, c2).matrix()) == PlanarForm::Reflection);

  const TransitionMatrix p = transition(StructuralSet::standard(3), StructuralSet::reversed(3));
  CHECK(p == TransitionMatrix(3, {0, 0, 1, 0, 1, 0, 1, 0, 0}));
  CHECK(p.determinant() == -1);
}

TEST_CASE("transition expresses psi in terms of phi") {
  Rng rng(5);
  for (int m = 2; m <= 5; ++m) {
    const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
    const TransitionMatrix t = transition(phi, psi);
    CHECK(t.is_orthogonal());
    for (int i = 0; i < m; ++i) {
      Multivector sum(m);
      for (int j = 0; j < m; ++j) sum += phi[j] * t(i, j);
      CHECK(sum == psi[i]);
    }
  }
}

TEST_CASE("signed permutations and householder products") {
  const StructuralSet s = StructuralSet::signed_permutation({-2, 1, 3});
  CHECK(s[0] == -Multivector::basis_vector(3, 2));
  CHECK_THROWS(StructuralSet::signed_permutation({1, 1, 2}));
  const TransitionMatrix h = householder_product(3, {{1, 2, 2}});
  CHECK(h.is_orthogonal());
  CHECK(h(0, 0) == Rational(7, 9));
}

TEST_CASE("coordinates in induced blade basis") {
  Rng rng(9);
  const StructuralSet psi = rng.rational_set(3);
  const Multivector a = rng.multivector(3);
  const auto coords = coordinates_in(psi, a);
  Multivector back(3);
  for (std::size_t i = 0; i < coords.size(); ++i) back += psi.product(blade_basis(3)[i]) * coords[i];
  CHECK(back == a);
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(Rational(16, 25)) == Rational(4, 5));
  CHECK(!rational_sqrt(Rational(1, 2)));
  CHECK(!rational_sqrt(Rational(-1)));
}
