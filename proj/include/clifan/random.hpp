#pragma once

#include <cstdint>
#include <random>

#include "clifan/multivector.hpp"
#include "clifan/polyfield.hpp"
#include "clifan/structural_set.hpp"

namespace clifan {

/// Seeded generator for the randomized suites. Draws use plain modular
/// reduction of mt19937_64 output so streams are identical across standard
/// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 5, long max_den = 4);

  Multivector multivector(int m, double density = 0.6);
  /// Sum of `terms` random monomials of degree <= max_degree with random values.
  PolyField field(int m, int max_degree, int terms = 5);
  PolyField homogeneous_field(int m, int degree, int terms = 5);

  StructuralSet signed_permutation(int m);
  /// Signed permutation times one or two Householder reflections with small
  /// integer normals: a genuinely non-monomial rational structural set.
  StructuralSet rational_set(int m);

 private:
  std::mt19937_64 engine_;
};

}  // namespace clifan
