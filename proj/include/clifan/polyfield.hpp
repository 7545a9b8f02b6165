#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "clifan/multivector.hpp"
#include "clifan/structural_set.hpp"

namespace clifan {

/// Exponent vector α of the monomial x^α.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}
  static MultiIndex zero(int m) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(m), 0)); }

  int dimension() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Graded order: lower degree first, then x1 > x2 > ... lexicographically.
struct MultiIndexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of total degree d in m variables, in MultiIndexLess order.
std::vector<MultiIndex> monomials_of_degree(int m, int d);

/// Polynomial map R^m -> R_{0,m} with exact coefficients: Σ_α x^α f_α.
class PolyField {
 public:
  using Terms = std::map<MultiIndex, Multivector, MultiIndexLess>;

  explicit PolyField(int dimension = 0);
  static PolyField constant(const Multivector& value);
  static PolyField monomial(const MultiIndex& alpha, const Multivector& value);
  /// The scalar field x_i (1-based).
  static PolyField variable(int dimension, int index);

  int dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero field.
  int degree() const;
  PolyField homogeneous_part(int d) const;
  Multivector coefficient(const MultiIndex& alpha) const;

  void add_term(const MultiIndex& alpha, const Multivector& value);

  PolyField& operator+=(const PolyField& rhs);
  PolyField& operator-=(const PolyField& rhs);
  PolyField& operator*=(const Rational& s);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator-(PolyField a) { return a *= Rational(-1); }
  friend PolyField operator*(PolyField a, const Rational& s) { return a *= s; }
  friend PolyField operator*(const Rational& s, PolyField a) { return a *= s; }
  /// Pointwise geometric product (polynomial multiplication, order kept).
  friend PolyField operator*(const PolyField& a, const PolyField& b);
  friend PolyField operator*(const Multivector& a, const PolyField& f);
  friend PolyField operator*(const PolyField& f, const Multivector& a);
  friend bool operator==(const PolyField& a, const PolyField& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  /// Applies a linear map of R_{0,m} to every coefficient.
  PolyField map_values(const std::function<Multivector(const Multivector&)>& fn) const;

  Multivector evaluate(const std::vector<Rational>& point) const;

 private:
  void check_same_dimension(const PolyField& other) const;
  int dim_;
  Terms terms_;
};

/// ∂f/∂x_i with 1-based i.
PolyField partial_derivative(const PolyField& f, int i);
/// Σ_j ψ^j ∂_j f
PolyField dirac_left(const StructuralSet& psi, const PolyField& f);
/// Σ_j (∂_j f) ψ^j
PolyField dirac_right(const PolyField& f, const StructuralSet& psi);
PolyField laplacian(const PolyField& f);
/// φ∂ψ∂[f], the (φ,ψ)-harmonic operator.
PolyField dirac_left_left(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);
/// Σ_{i,j} φ^i (∂_i∂_j f) ψ^j, computed directly from second derivatives.
PolyField sandwich(const StructuralSet& phi, const PolyField& f, const StructuralSet& psi);

PolyField grade_project(const PolyField& f, int k);
PolyField even_part(const PolyField& f);
PolyField odd_part(const PolyField& f);

/// Canonical text: one "<coef>*x1^a*...*e[...]" term per (monomial, blade).
std::string format(const PolyField& f);
std::string format_monomial(const MultiIndex& alpha);

}  // namespace clifan
