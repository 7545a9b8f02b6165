#include "clifan/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifan {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void RationalMatrix::set_column(std::size_t j, const RationalVector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (clifan::is_zero(v[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!clifan::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return clifan::is_zero(r); });
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.rows() == 0) {
    RationalMatrix out(bottom.rows(), std::max(top.cols(), bottom.cols()));
    for (std::size_t i = 0; i < bottom.rows(); ++i)
      for (std::size_t j = 0; j < bottom.cols(); ++j) out(i, j) = bottom(i, j);
    return out;
  }
  if (bottom.rows() != 0 && top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_zero(r); });
}

EchelonForm bareiss_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
  }

  EchelonForm out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivot_columns.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return bareiss_echelon(m).rank(); }

std::size_t rank_reverse_order(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
  std::vector<bool> used(rows, false);
  std::size_t rank = 0;
  for (std::size_t cc = cols; cc-- > 0;) {
    std::size_t pivot = rows;
    for (std::size_t i = rows; i-- > 0;)
      if (!used[i] && !is_zero(a[i][cc])) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    used[pivot] = true;
    ++rank;
    const Rational inv = 1 / a[pivot][cc];
    for (std::size_t j = 0; j < cols; ++j) a[pivot][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot || is_zero(a[i][cc])) continue;
      const Rational factor = a[i][cc];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= factor * a[pivot][j];
    }
  }
  return rank;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const EchelonForm e = bareiss_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols);
    x[free] = 1;
    for (std::size_t r = e.rank(); r-- > 0;) {
      const std::size_t pc = e.pivot_columns[r];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (e.rows[r][j] != 0 && !is_zero(x[j])) acc += Rational(e.rows[r][j]) * x[j];
      x[pc] = -acc / Rational(e.rows[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace clifan
