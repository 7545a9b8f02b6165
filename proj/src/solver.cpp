#include "clifan/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "clifan/psi.hpp"

namespace clifan {

CoefficientSpace::CoefficientSpace(int m, int d) : m_(m), d_(d) {
  if (m < 1 || m > kMaxDimension) throw DimensionError("unsupported dimension " + std::to_string(m));
  if (d < 0) return;
  monomials_ = monomials_of_degree(m, d);
  const auto& blades = blade_basis(m);
  basis_.reserve(monomials_.size() * blades.size());
  for (const auto& alpha : monomials_)
    for (Blade b : blades) basis_.emplace_back(alpha, b);
}

PolyField CoefficientSpace::to_field(const RationalVector& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate vector has wrong length");
  PolyField out(m_);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!is_zero(coords[i])) out.add_term(basis_[i].first, Multivector(m_, basis_[i].second, coords[i]));
  return out;
}

RationalVector CoefficientSpace::to_vector(const PolyField& f) const {
  if (f.dimension() != m_) throw DimensionError("field dimension mismatch");
  RationalVector out(basis_.size());
  const std::size_t nb = std::size_t{1} << m_;
  for (const auto& [alpha, v] : f.terms()) {
    if (alpha.degree() != d_)
      throw std::invalid_argument("field has a term of degree " + std::to_string(alpha.degree()) + ", space has degree " +
                                  std::to_string(d_));
    const auto it = std::lower_bound(monomials_.begin(), monomials_.end(), alpha, MultiIndexLess{});
    const auto mono = static_cast<std::size_t>(it - monomials_.begin());
    for (const auto& [b, c] : v.terms()) out[mono * nb + blade_position(m_, b)] = c;
  }
  return out;
}

PolyField CoefficientSpace::basis_field(std::size_t i) const {
  return PolyField::monomial(basis_.at(i).first, Multivector(m_, basis_.at(i).second));
}

PolyField OperatorSpec::apply(const PolyField& f) const {
  switch (kind) {
    case OperatorKind::Laplacian: return laplacian(f);
    case OperatorKind::LeftLeft: return dirac_left_left(phi, psi, f);
    case OperatorKind::Sandwich: return sandwich(phi, f, psi);
    case OperatorKind::DiracLeft: return dirac_left(psi, f);
    case OperatorKind::DiracRight: return dirac_right(f, psi);
  }
  throw std::logic_error("unknown operator kind");
}

std::string OperatorSpec::name() const {
  switch (kind) {
    case OperatorKind::Laplacian: return "laplacian";
    case OperatorKind::LeftLeft: return "left-left";
    case OperatorKind::Sandwich: return "sandwich";
    case OperatorKind::DiracLeft: return "dirac-left";
    case OperatorKind::DiracRight: return "dirac-right";
  }
  return "?";
}

OperatorMatrix operator_matrix(const OperatorSpec& op, const CoefficientSpace& space) {
  const int m = space.dimension();
  if (op.phi.dimension() != m || op.psi.dimension() != m) throw DimensionError("operator and space dimensions differ");
  CoefficientSpace target(m, space.degree() - op.order());
  OperatorMatrix out{RationalMatrix(target.size(), space.size()), space, target, space.degree() < op.order()};
  if (out.degenerate) return out;
  for (std::size_t c = 0; c < space.size(); ++c) out.matrix.set_column(c, target.to_vector(op.apply(space.basis_field(c))));
  return out;
}

std::vector<PolyField> NullspaceBasis::fields() const {
  std::vector<PolyField> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(space.to_field(v));
  return out;
}

NullspaceBasis nullspace(const OperatorMatrix& op) { return NullspaceBasis{op.domain, nullspace(op.matrix)}; }

NullspaceBasis common_nullspace(const std::vector<OperatorMatrix>& ops, const CoefficientSpace& space) {
  RationalMatrix stacked(0, space.size());
  for (const auto& op : ops) stacked = vstack(stacked, op.matrix);
  return NullspaceBasis{space, nullspace(stacked)};
}

std::vector<OperatorMatrix> class_operators(const StructuralSet& phi, const StructuralSet& psi,
                                            const CoefficientSpace& space) {
  return {operator_matrix({OperatorKind::Laplacian, phi, psi}, space),
          operator_matrix({OperatorKind::LeftLeft, phi, psi}, space),
          operator_matrix({OperatorKind::Sandwich, phi, psi}, space)};
}

ClassDimensions class_dimensions(const StructuralSet& phi, const StructuralSet& psi, int d) {
  const int m = phi.dimension();
  const CoefficientSpace space(m, d);
  const auto ops = class_operators(phi, psi, space);
  const auto dim = [&](std::initializer_list<int> which) {
    std::vector<OperatorMatrix> chosen;
    for (int w : which) chosen.push_back(ops[static_cast<std::size_t>(w)]);
    return common_nullspace(chosen, space).dimension();
  };
  ClassDimensions out;
  out.m = m;
  out.d = d;
  out.total = space.size();
  out.harmonic = dim({0});
  out.phi_psi_harmonic = dim({1});
  out.inframonogenic = dim({2});
  out.harmonic_phi_psi = dim({0, 1});
  out.harmonic_infra = dim({0, 2});
  out.phi_psi_infra = dim({1, 2});
  out.triple = dim({0, 1, 2});
  return out;
}

std::optional<PolyField> find_region_witness(const StructuralSet& phi, const StructuralSet& psi, int d,
                                             RegionLabel target) {
  const int m = phi.dimension();
  const CoefficientSpace space(m, d);
  const auto ops = class_operators(phi, psi, space);
  const FunctionClass order[] = {FunctionClass::Harmonic, FunctionClass::PhiPsiHarmonic, FunctionClass::Inframonogenic};

  std::vector<OperatorMatrix> required, excluded;
  for (std::size_t i = 0; i < 3; ++i) (target.contains(order[i]) ? required : excluded).push_back(ops[i]);

  std::vector<RationalVector> candidates;
  if (required.empty()) {
    for (std::size_t i = 0; i < space.size(); ++i) {
      RationalVector e(space.size());
      e[i] = 1;
      candidates.push_back(std::move(e));
    }
  } else {
    candidates = common_nullspace(required, space).vectors;
  }

  const auto escapes = [&](const RationalVector& v) {
    if (is_zero_vector(v) && !excluded.empty()) return false;
    return std::all_of(excluded.begin(), excluded.end(),
                       [&](const OperatorMatrix& op) { return !is_zero_vector(op.matrix * v); });
  };
  const auto accept = [&](const RationalVector& v) -> std::optional<PolyField> {
    if (!escapes(v)) return std::nullopt;
    PolyField f = space.to_field(v);
    if (region(phi, psi, f) != target) return std::nullopt;
    return f;
  };

  if (candidates.empty()) {
    // Only the zero field is available; it lies in every class.
    if (excluded.empty()) return PolyField(m);
    return std::nullopt;
  }
  for (const auto& v : candidates)
    if (auto f = accept(v)) return f;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      for (long p = 1; p <= 3; ++p)
        for (long q = -3; q <= 3; ++q) {
          if (q == 0) continue;
          RationalVector v(space.size());
          for (std::size_t t = 0; t < v.size(); ++t) v[t] = Rational(p) * candidates[i][t] + Rational(q) * candidates[j][t];
          if (auto f = accept(v)) return f;
        }
  return std::nullopt;
}

PolyField converse_counterexample(const StructuralSet& phi) {
  const int m = phi.dimension();
  if (m < 2) throw std::invalid_argument("converse counterexample needs m >= 2");
  const PolyField x1 = PolyField::variable(m, 1), x2 = PolyField::variable(m, 2);
  Blade top{(1u << m) - 1};
  // Harmonic scalar and pseudoscalar parts.
  const PolyField base = x1 * x2 + (x1 * x1 - x2 * x2) * Multivector(m, top);
  for (int axis = 1; axis <= m; ++axis)
    for (int index = 1; index <= m; ++index) {
      const PolyField xa = PolyField::variable(m, axis);
      const PolyField f = base + xa * xa * Multivector::basis_vector(m, index);
      const auto membership = classify(phi, phi, f);
      if (membership.harmonic || membership.inframonogenic) continue;
      const PolyField image = apply_psi_plus(phi, phi, f);
      if (is_harmonic(image) && is_inframonogenic(phi, phi, image)) return f;
    }
  throw std::logic_error("no counterexample among candidates");
}

}  // namespace clifan
