#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clifan/multivector.hpp"

namespace clifan {

/// Square rational matrix, row-major. Row i holds the coordinates of the
/// i-th structural vector in the basis it is expressed against.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(int m = 0);
  TransitionMatrix(int m, std::vector<Rational> entries);
  static TransitionMatrix identity(int m);

  int size() const { return m_; }
  const Rational& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * m_ + j)]; }
  Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * m_ + j)]; }

  TransitionMatrix transposed() const;
  friend TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b);
  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

  bool is_orthogonal() const;
  Rational determinant() const;

 private:
  int m_;
  std::vector<Rational> entries_;
};

enum class PlanarForm { Rotation, Reflection };

class StructuralSetError : public std::invalid_argument {
 public:
  StructuralSetError(const std::string& what, int i = 0, int j = 0)
      : std::invalid_argument(what), first(i), second(j) {}
  int first;   // 1-based indices of the violated relation, 0 when not applicable
  int second;
};

/// Ordered m-tuple of grade-1 multivectors with ψ^iψ^j + ψ^jψ^i = -2δ_ij.
/// Only constructible through validate() and the named constructors, so every
/// instance satisfies the relations.
class StructuralSet {
 public:
  static StructuralSet validate(const std::vector<Multivector>& candidates);
  /// ψ^i = Σ_j C(i,j) e_j; throws StructuralSetError unless C·Cᵀ = I.
  static StructuralSet from_matrix(const TransitionMatrix& c);

  static StructuralSet standard(int m);
  /// {e_m, ..., e_1}
  static StructuralSet reversed(int m);
  /// ψ^i = sign(p_i)·e_|p_i|; p must be a signed permutation of 1..m.
  static StructuralSet signed_permutation(const std::vector<int>& p);
  /// Rows (c1, -c2), (c2, c1) with c2 = sqrt(1 - c1²) required rational.
  static StructuralSet rotation2(const Rational& c1, const Rational& c2);
  /// Rows (c1, c2), (c2, -c1).
  static StructuralSet reflection2(const Rational& c1, const Rational& c2);

  int dimension() const { return static_cast<int>(vectors_.size()); }
  const Multivector& operator[](int i) const { return vectors_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<Multivector>& vectors() const { return vectors_; }
  /// Coordinates against the standard basis.
  TransitionMatrix matrix() const;
  /// φ_A = φ^{j1}···φ^{jk} for A = {j1<...<jk}; the empty set gives 1.
  Multivector product(Blade a) const;

  friend bool operator==(const StructuralSet&, const StructuralSet&) = default;

 private:
  explicit StructuralSet(std::vector<Multivector> v) : vectors_(std::move(v)) {}
  std::vector<Multivector> vectors_;
};

/// T with ψ^i = Σ_j T(i,j) φ^j.
TransitionMatrix transition(const StructuralSet& phi, const StructuralSet& psi);

/// m = 2 only: rotation form for determinant +1, reflection form for -1.
PlanarForm classify_planar(const TransitionMatrix& t);

/// Coefficients of a in the blade basis {ψ_A} induced by the set, ordered
/// like blade_basis(m).
std::vector<Rational> coordinates_in(const StructuralSet& psi, const Multivector& a);

/// Orthogonal rational matrix from a product of Householder reflections with
/// small integer normal vectors. Entries are exact.
TransitionMatrix householder_product(int m, const std::vector<std::vector<int>>& normals);

/// The rational square root when it exists.
std::optional<Rational> rational_sqrt(const Rational& r);

std::string format(const StructuralSet& s);

}  // namespace clifan
