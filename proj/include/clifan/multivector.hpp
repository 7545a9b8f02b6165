#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "clifan/rational.hpp"

namespace clifan {

inline constexpr int kMaxDimension = 12;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Basis blade e_A, stored as a bitmask: bit (i-1) set means e_i is a factor.
struct Blade {
  std::uint32_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t bits) : mask(bits) {}
  /// From 1-based indices in any order; duplicates are rejected.
  static Blade from_indices(const std::vector<int>& indices);

  int grade() const { return __builtin_popcount(mask); }
  std::vector<int> indices() const;  // 1-based, increasing

  friend constexpr bool operator==(Blade a, Blade b) { return a.mask == b.mask; }
};

/// Canonical blade order: by grade, then lexicographically on index lists.
struct BladeLess {
  bool operator()(Blade a, Blade b) const;
};

/// Sign of e_A e_B in R_{0,m}: (-1)^(transpositions + |A∩B|).
int blade_product_sign(Blade a, Blade b);

/// All 2^m blades of dimension m in canonical order.
const std::vector<Blade>& blade_basis(int m);

/// Position of a blade inside blade_basis(m).
std::size_t blade_position(int m, Blade b);

/// Element of R_{0,m} with exact rational coefficients. Zero terms are never
/// stored, so structural equality coincides with mathematical equality.
class Multivector {
 public:
  using Terms = std::map<Blade, Rational, BladeLess>;

  explicit Multivector(int dimension = 0);
  Multivector(int dimension, const Rational& scalar);
  Multivector(int dimension, Blade blade, const Rational& coef = 1);

  static Multivector basis_vector(int dimension, int index);  // e_index, 1-based
  /// Coordinates indexed like blade_basis(dimension).
  static Multivector from_coefficients(int dimension, const std::vector<Rational>& coefs);

  int dimension() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Blade b) const;
  Rational scalar_part() const { return coefficient(Blade{}); }
  std::vector<Rational> coefficients() const;

  /// Adds c·e_B in place, dropping the term if it cancels.
  void add_term(Blade b, const Rational& c);

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(const Rational& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  bool is_pure_grade(int k) const;

 private:
  void check_same_dimension(const Multivector& other) const;

  int dim_;
  Terms terms_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

/// [a]_k; throws std::out_of_range unless 0 <= k <= m.
Multivector grade_project(const Multivector& a, int k);
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);
/// Anti-automorphism with conj(e_i) = -e_i.
Multivector conjugate(const Multivector& a);
/// Anti-automorphism with rev(e_i) = e_i.
Multivector reverse(const Multivector& a);

/// Canonical text, e.g. "3/5*e[1,2] + -1*e[3]"; zero prints as "0".
std::string format(const Multivector& a);
std::string format_blade(Blade b);

}  // namespace clifan
