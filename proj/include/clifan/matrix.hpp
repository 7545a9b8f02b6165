#pragma once

#include <cstddef>
#include <vector>

#include "clifan/rational.hpp"

namespace clifan {

using RationalVector = std::vector<Rational>;

/// Dense exact matrix, row-major. Used for every linearized operator.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  RationalVector column(std::size_t j) const;
  void set_column(std::size_t j, const RationalVector& v);
  RationalVector operator*(const RationalVector& v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Rows of `top` followed by rows of `bottom`; column counts must agree.
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

bool is_zero_vector(const RationalVector& v);

struct EchelonForm {
  std::vector<std::vector<Integer>> rows;  // integer row-echelon rows, rank many
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Fraction-free (Bareiss) forward elimination. Rows are first scaled to
/// integers; pivots are the first nonzero entry scanning rows in order.
EchelonForm bareiss_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Rank by Gauss-Jordan over Q with columns scanned last-to-first and the
/// last nonzero row as pivot. Shares no code with bareiss_echelon.
std::size_t rank_reverse_order(const RationalMatrix& m);

/// Basis of ker m: one vector per free column, with that coordinate 1 and
/// the other free coordinates 0.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

}  // namespace clifan
