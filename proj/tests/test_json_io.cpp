#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "clifan/expr_parser.hpp"
#include "clifan/json_io.hpp"
#include "clifan/random.hpp"
#include "clifan/solver.hpp"

using namespace clifan;

TEST_CASE("field JSON round trip") {
  Rng rng(3);
  for (int m = 1; m <= 4; ++m) {
    const PolyField f = rng.field(m, 3, 5);
    const json j = field_to_json(f);
    CHECK(field_from_json(json::parse(j.dump()), m) == f);
  }
  const json j = field_to_json(parse_field("3/5*x1*e[1,2]", 2));
  CHECK(j.dump() == R"([{"alpha":[1,0],"blade":[1,2],"coef":"3/5"}])");
}

TEST_CASE("matrix JSON") {
  const TransitionMatrix t(2, {Rational(3, 5), Rational(-4, 5), Rational(4, 5), Rational(3, 5)});
  CHECK(matrix_from_json(matrix_to_json(t)) == t);
  CHECK(matrix_from_json(json::parse("[[0,1],[1,0]]")) == TransitionMatrix(2, {0, 1, 1, 0}));
  CHECK_THROWS(matrix_from_json(json::parse("[[1,0]]")));
}

TEST_CASE("membership and dimension reports") {
  const json m = membership_to_json(ClassMembership{true, false, true, false, false});
  CHECK(m["region"] == "H&I");
  CHECK(m["phiPsiHarmonic"] == false);
  const json d = dimensions_to_json(class_dimensions(StructuralSet::standard(2), StructuralSet::standard(2), 2));
  CHECK(d["H"] == 8);
  CHECK(d["total"] == 12);
}

TEST_CASE("set specs") {
  CHECK(parse_set_spec("standard", 3) == StructuralSet::standard(3));
  CHECK(parse_set_spec("reversed", 3) == StructuralSet::reversed(3));
  CHECK(parse_set_spec("signedperm:3,-2,1", 3) == StructuralSet::signed_permutation({3, -2, 1}));
  CHECK(parse_set_spec("rot2:3/5", 2) == StructuralSet::rotation2(Rational(3, 5), Rational(4, 5)));
  CHECK(parse_set_spec("refl2:3/5", 2) == StructuralSet::reflection2(Rational(3, 5), Rational(4, 5)));
  CHECK(parse_set_spec("vectors:e[2];-e[1]", 2) == StructuralSet::signed_permutation({2, -1}));
  CHECK_THROWS(parse_set_spec("rot2:1/2", 2));
  CHECK_THROWS(parse_set_spec("reversed", 20));
  CHECK_THROWS(parse_set_spec("bogus", 3));
  CHECK_THROWS(parse_set_spec("signedperm:1,2", 3));

  const std::string path = "clifan_test_matrix.json";
  {
    std::ofstream out(path);
    out << R"([["3/5","4/5"],["4/5","-3/5"]])";
  }
  CHECK(parse_set_spec("matrix:" + path, 2) == StructuralSet::reflection2(Rational(3, 5), Rational(4, 5)));
  std::remove(path.c_str());
  CHECK_THROWS(parse_set_spec("matrix:/nonexistent/file.json", 2));
}
