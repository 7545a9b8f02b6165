#include "clifan/structural_set.hpp"

#include <cstdlib>

namespace clifan {

TransitionMatrix::TransitionMatrix(int m) : m_(m), entries_(static_cast<std::size_t>(m * m)) {}

TransitionMatrix::TransitionMatrix(int m, std::vector<Rational> entries) : m_(m), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(m * m))
    throw DimensionError("transition matrix needs " + std::to_string(m * m) + " entries");
}

TransitionMatrix TransitionMatrix::identity(int m) {
  TransitionMatrix t(m);
  for (int i = 0; i < m; ++i) t(i, i) = 1;
  return t;
}

TransitionMatrix TransitionMatrix::transposed() const {
  TransitionMatrix t(m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.m_ != b.m_) throw DimensionError("transition matrix size mismatch");
  TransitionMatrix out(a.m_);
  for (int i = 0; i < a.m_; ++i)
    for (int k = 0; k < a.m_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (int j = 0; j < a.m_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

bool TransitionMatrix::is_orthogonal() const { return (*this) * transposed() == identity(m_); }

Rational TransitionMatrix::determinant() const {
  std::vector<Rational> a = entries_;
  Rational det = 1;
  const auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i * m_ + j)]; };
  for (int col = 0; col < m_; ++col) {
    int pivot = -1;
    for (int r = col; r < m_; ++r)
      if (!is_zero(at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < m_; ++j) std::swap(at(pivot, j), at(col, j));
      det = -det;
    }
    det *= at(col, col);
    for (int r = col + 1; r < m_; ++r) {
      if (is_zero(at(r, col))) continue;
      const Rational factor = at(r, col) / at(col, col);
      for (int j = col; j < m_; ++j) at(r, j) -= factor * at(col, j);
    }
  }
  return det;
}

StructuralSet StructuralSet::validate(const std::vector<Multivector>& candidates) {
  const int m = static_cast<int>(candidates.size());
  if (m < 1 || m > kMaxDimension) throw DimensionError("structural set size " + std::to_string(m) + " unsupported");
  for (int i = 0; i < m; ++i) {
    if (candidates[static_cast<std::size_t>(i)].dimension() != m)
      throw DimensionError("vector " + std::to_string(i + 1) + " has dimension " +
                           std::to_string(candidates[static_cast<std::size_t>(i)].dimension()) + ", expected " +
                           std::to_string(m));
    if (!candidates[static_cast<std::size_t>(i)].is_pure_grade(1))
      throw StructuralSetError("vector " + std::to_string(i + 1) + " is not grade 1", i + 1, 0);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const auto& a = candidates[static_cast<std::size_t>(i)];
      const auto& b = candidates[static_cast<std::size_t>(j)];
      const Multivector anti = a * b + b * a;
      const Multivector expected(m, Rational(i == j ? -2 : 0));
      if (!(anti == expected))
        throw StructuralSetError("relation (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") violated", i + 1,
                                 j + 1);
    }
  return StructuralSet(candidates);
}

StructuralSet StructuralSet::from_matrix(const TransitionMatrix& c) {
  const int m = c.size();
  if (!c.is_orthogonal()) throw StructuralSetError("transition matrix is not orthogonal");
  std::vector<Multivector> vs;
  for (int i = 0; i < m; ++i) {
    Multivector v(m);
    for (int j = 0; j < m; ++j) v.add_term(Blade{1u << j}, c(i, j));
    vs.push_back(std::move(v));
  }
  return StructuralSet(std::move(vs));
}

StructuralSet StructuralSet::standard(int m) { return from_matrix(TransitionMatrix::identity(m)); }

StructuralSet StructuralSet::reversed(int m) {
  std::vector<int> p;
  for (int i = m; i >= 1; --i) p.push_back(i);
  return signed_permutation(p);
}

StructuralSet StructuralSet::signed_permutation(const std::vector<int>& p) {
  const int m = static_cast<int>(p.size());
  TransitionMatrix c(m);
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int i = 0; i < m; ++i) {
    const int target = std::abs(p[static_cast<std::size_t>(i)]);
    if (target < 1 || target > m || seen[static_cast<std::size_t>(target - 1)])
      throw StructuralSetError("not a signed permutation of 1.." + std::to_string(m));
    seen[static_cast<std::size_t>(target - 1)] = true;
    c(i, target - 1) = p[static_cast<std::size_t>(i)] > 0 ? 1 : -1;
  }
  return from_matrix(c);
}

StructuralSet StructuralSet::rotation2(const Rational& c1, const Rational& c2) {
  return from_matrix(TransitionMatrix(2, {c1, -c2, c2, c1}));
}

StructuralSet StructuralSet::reflection2(const Rational& c1, const Rational& c2) {
  return from_matrix(TransitionMatrix(2, {c1, c2, c2, -c1}));
}

TransitionMatrix StructuralSet::matrix() const {
  const int m = dimension();
  TransitionMatrix c(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c(i, j) = vectors_[static_cast<std::size_t>(i)].coefficient(Blade{1u << j});
  return c;
}

Multivector StructuralSet::product(Blade a) const {
  Multivector out(dimension(), Rational(1));
  for (int j : a.indices()) out = out * vectors_.at(static_cast<std::size_t>(j - 1));
  return out;
}

TransitionMatrix transition(const StructuralSet& phi, const StructuralSet& psi) {
  if (phi.dimension() != psi.dimension()) throw DimensionError("structural sets differ in dimension");
  // Inverse of an orthogonal matrix is its transpose.
  return psi.matrix() * phi.matrix().transposed();
}

PlanarForm classify_planar(const TransitionMatrix& t) {
  if (t.size() != 2) throw DimensionError("planar classification needs a 2x2 matrix");
  return t.determinant() > 0 ? PlanarForm::Rotation : PlanarForm::Reflection;
}

std::vector<Rational> coordinates_in(const StructuralSet& psi, const Multivector& a) {
  const int m = psi.dimension();
  if (a.dimension() != m) throw DimensionError("dimension mismatch");
  std::vector<Rational> out;
  // {ψ_A} is orthonormal and ψ_A^{-1} = conj(ψ_A).
  for (Blade b : blade_basis(m)) out.push_back((a * conjugate(psi.product(b))).scalar_part());
  return out;
}

TransitionMatrix householder_product(int m, const std::vector<std::vector<int>>& normals) {
  TransitionMatrix q = TransitionMatrix::identity(m);
  for (const auto& n : normals) {
    if (static_cast<int>(n.size()) != m) throw DimensionError("householder normal has wrong length");
    Rational norm2 = 0;
    for (int v : n) norm2 += Rational(v * v);
    if (is_zero(norm2)) continue;
    TransitionMatrix h = TransitionMatrix::identity(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) h(i, j) -= Rational(2 * n[static_cast<std::size_t>(i)] * n[static_cast<std::size_t>(j)]) / norm2;
    q = q * h;
  }
  return q;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational out(sqrt(num), sqrt(den));
  out.canonicalize();
  return out;
}

std::string format(const StructuralSet& s) {
  std::string out = "{";
  for (int i = 0; i < s.dimension(); ++i) {
    if (i) out += ", ";
    out += format(s[i]);
  }
  return out + "}";
}

}  // namespace clifan
