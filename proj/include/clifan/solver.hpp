#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifan/classifier.hpp"
#include "clifan/matrix.hpp"
#include "clifan/polyfield.hpp"
#include "clifan/structural_set.hpp"

namespace clifan {

/// Homogeneous degree-d fields in m variables, coordinatized by
/// (monomial, blade) pairs: monomials in MultiIndexLess order, blades in
/// canonical order within each monomial. Negative d gives the zero space.
class CoefficientSpace {
 public:
  CoefficientSpace(int m, int d);

  int dimension() const { return m_; }
  int degree() const { return d_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<std::pair<MultiIndex, Blade>>& basis() const { return basis_; }

  PolyField to_field(const RationalVector& coords) const;
  /// Throws std::invalid_argument if f has terms of another degree.
  RationalVector to_vector(const PolyField& f) const;
  PolyField basis_field(std::size_t i) const;

 private:
  int m_, d_;
  std::vector<MultiIndex> monomials_;
  std::vector<std::pair<MultiIndex, Blade>> basis_;
};

enum class OperatorKind { Laplacian, LeftLeft, Sandwich, DiracLeft, DiracRight };

/// Which operator to linearize. DiracLeft/DiracRight use psi; Laplacian uses neither set.
struct OperatorSpec {
  OperatorKind kind;
  StructuralSet phi;
  StructuralSet psi;

  int order() const { return kind == OperatorKind::DiracLeft || kind == OperatorKind::DiracRight ? 1 : 2; }
  PolyField apply(const PolyField& f) const;
  std::string name() const;
};

struct OperatorMatrix {
  RationalMatrix matrix;  // codomain.size() x domain.size()
  CoefficientSpace domain;
  CoefficientSpace codomain;
  bool degenerate = false;  // degree below operator order: zero map into the zero space
};

OperatorMatrix operator_matrix(const OperatorSpec& op, const CoefficientSpace& space);

struct NullspaceBasis {
  CoefficientSpace space;
  std::vector<RationalVector> vectors;
  std::size_t dimension() const { return vectors.size(); }
  std::vector<PolyField> fields() const;
};

NullspaceBasis nullspace(const OperatorMatrix& op);

/// Kernel of several operators on the same space (stacked matrices).
NullspaceBasis common_nullspace(const std::vector<OperatorMatrix>& ops, const CoefficientSpace& space);

struct ClassDimensions {
  int m = 0, d = 0;
  std::size_t total = 0;
  std::size_t harmonic = 0, phi_psi_harmonic = 0, inframonogenic = 0;
  std::size_t harmonic_phi_psi = 0, harmonic_infra = 0, phi_psi_infra = 0, triple = 0;
};

/// Dimensions of H, Hpp, I and their intersections among degree-d homogeneous fields.
ClassDimensions class_dimensions(const StructuralSet& phi, const StructuralSet& psi, int d);

/// The three class operators (Laplacian, φ∂ψ∂, sandwich) on the given space.
std::vector<OperatorMatrix> class_operators(const StructuralSet& phi, const StructuralSet& psi,
                                            const CoefficientSpace& space);

/// A homogeneous degree-d field lying exactly in `target`, or nullopt when
/// the bounded search (single basis vectors, then p·b_i + q·b_j with
/// 1 <= p <= 3, 1 <= |q| <= 3) finds none. nullopt is not a proof of emptiness.
std::optional<PolyField> find_region_witness(const StructuralSet& phi, const StructuralSet& psi, int d,
                                             RegionLabel target);

/// φ = ψ: a field in neither H nor I_{φ,φ} whose grade-0 and grade-m parts
/// are harmonic, so Ψ_+^{φ,φ}(f) lies in H ∩ I_{φ,φ}. Requires m >= 2.
PolyField converse_counterexample(const StructuralSet& phi);

}  // namespace clifan
