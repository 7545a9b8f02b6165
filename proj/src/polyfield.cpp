#include "clifan/polyfield.hpp"

#include <numeric>

namespace clifan {

int MultiIndex::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool MultiIndexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents > b.exponents;
}

std::vector<MultiIndex> monomials_of_degree(int m, int d) {
  std::vector<MultiIndex> out;
  if (m <= 0 || d < 0) return out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  // Recursive fill, largest exponent of x1 first.
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == m - 1) {
      e[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(pos)] = k;
      fill(pos + 1, remaining - k);
    }
  };
  fill(0, d);
  return out;
}

PolyField::PolyField(int dimension) : dim_(dimension) {
  if (dimension < 0 || dimension > kMaxDimension) throw DimensionError("unsupported dimension " + std::to_string(dimension));
}

PolyField PolyField::constant(const Multivector& value) {
  return monomial(MultiIndex::zero(value.dimension()), value);
}

PolyField PolyField::monomial(const MultiIndex& alpha, const Multivector& value) {
  PolyField f(value.dimension());
  f.add_term(alpha, value);
  return f;
}

PolyField PolyField::variable(int dimension, int index) {
  if (index < 1 || index > dimension) throw DimensionError("variable index " + std::to_string(index) + " out of range");
  MultiIndex alpha = MultiIndex::zero(dimension);
  alpha.exponents[static_cast<std::size_t>(index - 1)] = 1;
  return monomial(alpha, Multivector(dimension, Rational(1)));
}

int PolyField::degree() const {
  int d = -1;
  for (const auto& [alpha, v] : terms_) d = std::max(d, alpha.degree());
  return d;
}

PolyField PolyField::homogeneous_part(int d) const {
  PolyField out(dim_);
  for (const auto& [alpha, v] : terms_)
    if (alpha.degree() == d) out.terms_.emplace(alpha, v);
  return out;
}

Multivector PolyField::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Multivector(dim_) : it->second;
}

void PolyField::add_term(const MultiIndex& alpha, const Multivector& value) {
  if (alpha.dimension() != dim_ || value.dimension() != dim_) throw DimensionError("term dimension mismatch");
  for (int e : alpha.exponents)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PolyField::check_same_dimension(const PolyField& other) const {
  if (dim_ != other.dim_)
    throw DimensionError("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
}

PolyField& PolyField::operator+=(const PolyField& rhs) {
  check_same_dimension(rhs);
  for (const auto& [alpha, v] : rhs.terms_) add_term(alpha, v);
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& rhs) {
  check_same_dimension(rhs);
  for (const auto& [alpha, v] : rhs.terms_) add_term(alpha, -v);
  return *this;
}

PolyField& PolyField::operator*=(const Rational& s) {
  if (clifan::is_zero(s)) {
    terms_.clear();
  } else {
    for (auto& [alpha, v] : terms_) v *= s;
  }
  return *this;
}

PolyField operator*(const PolyField& a, const PolyField& b) {
  a.check_same_dimension(b);
  PolyField out(a.dim_);
  for (const auto& [aa, va] : a.terms_)
    for (const auto& [ab, vb] : b.terms_) {
      MultiIndex sum = aa;
      for (std::size_t i = 0; i < sum.exponents.size(); ++i) sum.exponents[i] += ab.exponents[i];
      out.add_term(sum, va * vb);
    }
  return out;
}

PolyField operator*(const Multivector& a, const PolyField& f) {
  PolyField out(f.dim_);
  for (const auto& [alpha, v] : f.terms_) out.add_term(alpha, a * v);
  return out;
}

PolyField operator*(const PolyField& f, const Multivector& a) {
  PolyField out(f.dim_);
  for (const auto& [alpha, v] : f.terms_) out.add_term(alpha, v * a);
  return out;
}

PolyField PolyField::map_values(const std::function<Multivector(const Multivector&)>& fn) const {
  PolyField out(dim_);
  for (const auto& [alpha, v] : terms_) out.add_term(alpha, fn(v));
  return out;
}

Multivector PolyField::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dim_) throw DimensionError("evaluation point has wrong length");
  Multivector out(dim_);
  for (const auto& [alpha, v] : terms_) {
    Rational w = 1;
    for (int i = 0; i < dim_; ++i)
      for (int p = 0; p < alpha.exponents[static_cast<std::size_t>(i)]; ++p) w *= point[static_cast<std::size_t>(i)];
    out += v * w;
  }
  return out;
}

PolyField partial_derivative(const PolyField& f, int i) {
  const int m = f.dimension();
  if (i < 1 || i > m) throw DimensionError("axis " + std::to_string(i) + " out of range 1.." + std::to_string(m));
  PolyField out(m);
  const auto axis = static_cast<std::size_t>(i - 1);
  for (const auto& [alpha, v] : f.terms()) {
    const int e = alpha.exponents[axis];
    if (e == 0) continue;
    MultiIndex lowered = alpha;
    lowered.exponents[axis] = e - 1;
    out.add_term(lowered, v * Rational(e));
  }
  return out;
}

namespace {

void check_dims(const StructuralSet& s, const PolyField& f) {
  if (s.dimension() != f.dimension())
    throw DimensionError("structural set dimension " + std::to_string(s.dimension()) + " vs field dimension " +
                         std::to_string(f.dimension()));
}

}  // namespace

PolyField dirac_left(const StructuralSet& psi, const PolyField& f) {
  check_dims(psi, f);
  PolyField out(f.dimension());
  for (int j = 1; j <= f.dimension(); ++j) out += psi[j - 1] * partial_derivative(f, j);
  return out;
}

PolyField dirac_right(const PolyField& f, const StructuralSet& psi) {
  check_dims(psi, f);
  PolyField out(f.dimension());
  for (int j = 1; j <= f.dimension(); ++j) out += partial_derivative(f, j) * psi[j - 1];
  return out;
}

PolyField laplacian(const PolyField& f) {
  PolyField out(f.dimension());
  for (int i = 1; i <= f.dimension(); ++i) out += partial_derivative(partial_derivative(f, i), i);
  return out;
}

PolyField dirac_left_left(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  return dirac_left(phi, dirac_left(psi, f));
}

PolyField sandwich(const StructuralSet& phi, const PolyField& f, const StructuralSet& psi) {
  check_dims(phi, f);
  check_dims(psi, f);
  const int m = f.dimension();
  PolyField out(m);
  for (int i = 1; i <= m; ++i) {
    const PolyField di = partial_derivative(f, i);
    for (int j = 1; j <= m; ++j) out += phi[i - 1] * partial_derivative(di, j) * psi[j - 1];
  }
  return out;
}

PolyField grade_project(const PolyField& f, int k) {
  return f.map_values([k](const Multivector& v) { return grade_project(v, k); });
}

PolyField even_part(const PolyField& f) {
  return f.map_values([](const Multivector& v) { return even_part(v); });
}

PolyField odd_part(const PolyField& f) {
  return f.map_values([](const Multivector& v) { return odd_part(v); });
}

std::string format_monomial(const MultiIndex& alpha) {
  std::string out;
  for (int i = 0; i < alpha.dimension(); ++i) {
    const int e = alpha.exponents[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string format(const PolyField& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [alpha, v] : f.terms()) {
    const std::string mono = format_monomial(alpha);
    for (const auto& [b, c] : v.terms()) {
      if (!out.empty()) out += " + ";
      out += to_string(c);
      if (!mono.empty()) out += '*' + mono;
      out += '*' + format_blade(b);
    }
  }
  return out;
}

}  // namespace clifan
