#pragma once

#include <string>
#include <vector>

#include "clifan/matrix.hpp"
#include "clifan/multivector.hpp"
#include "clifan/polyfield.hpp"
#include "clifan/structural_set.hpp"

namespace clifan {

enum class PsiKind { Level, Plus, Minus, Subset };

/// One of the operators Ψ_k^{φ,ψ}, Ψ_±^{φ,ψ} or the restricted Ψ_1^J.
struct PsiOperator {
  StructuralSet phi;
  StructuralSet psi;
  PsiKind kind = PsiKind::Level;
  int level = 1;             // k for PsiKind::Level
  std::vector<int> subset;   // J (1-based) for PsiKind::Subset

  static PsiOperator level_k(StructuralSet phi, StructuralSet psi, int k);
  static PsiOperator plus(StructuralSet phi, StructuralSet psi);
  static PsiOperator minus(StructuralSet phi, StructuralSet psi);
  static PsiOperator restricted(StructuralSet phi, StructuralSet psi, std::vector<int> j);

  int dimension() const { return phi.dimension(); }
  std::string name() const;
};

/// Σ_{|A|=k} φ_A a rev(ψ_A); k = 0 is the identity.
Multivector apply_psi_k(const StructuralSet& phi, const StructuralSet& psi, int k, const Multivector& a);
/// Σ_{j∈J} φ^j a ψ^j
Multivector apply_psi_subset1(const StructuralSet& phi, const StructuralSet& psi, const std::vector<int>& j,
                              const Multivector& a);
Multivector apply_psi_plus(const StructuralSet& phi, const StructuralSet& psi, const Multivector& a);
Multivector apply_psi_minus(const StructuralSet& phi, const StructuralSet& psi, const Multivector& a);
Multivector apply(const PsiOperator& op, const Multivector& a);

/// Matrix of the operator in the blade basis (blade_basis order).
RationalMatrix psi_matrix(const PsiOperator& op);
bool is_bijective(const PsiOperator& op);

/// A linear endomorphism of R_{0,m} held as its blade-basis matrix; acts on
/// multivectors and pointwise on fields.
class LinearMap {
 public:
  LinearMap(int m, RationalMatrix matrix);
  explicit LinearMap(const PsiOperator& op) : LinearMap(op.dimension(), psi_matrix(op)) {}

  int dimension() const { return m_; }
  const RationalMatrix& matrix() const { return matrix_; }
  Multivector operator()(const Multivector& a) const;
  PolyField operator()(const PolyField& f) const;

 private:
  int m_;
  RationalMatrix matrix_;
};

/// λ(m,j,k) with Ψ_j^{φ,φ}(a_k) = λ a_k for pure grade-k a_k (finite binomial sum).
Rational psi_k_closed_form(int m, int j, int k);
/// The same scalar through the terminating 2F1 series at z = -1.
Rational psi_k_hypergeometric(int m, int j, int k);
/// 2F1(a, b; c; z) for a or b a non-positive integer. Throws if neither is,
/// or if c hits a non-positive integer before the series terminates.
Rational hypergeometric_2f1_terminating(long a, long b, long c, const Rational& z);

/// Result of checking one identity; lhs/rhs hold the canonical text of both sides.
struct Verdict {
  std::string identity;
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

Verdict make_verdict(std::string identity, const Multivector& lhs, const Multivector& rhs);
Verdict make_verdict(std::string identity, const PolyField& lhs, const PolyField& rhs);

/// (m-k+1)Ψ_{k-1}(a) + (k+1)Ψ_{k+1}(a) = Ψ_1(Ψ_k(a)), 1 <= k <= m-1.
Verdict check_recursion(const StructuralSet& phi, const StructuralSet& psi, int k, const Multivector& a);

/// φ = ψ parity relations between Ψ_j and Ψ_{m-j}. For odd m the grade k is
/// unused; for even m the relation is checked on [a]_k.
Verdict check_corollary_parity(const StructuralSet& phi, const Multivector& a, int j, int k);

/// φ = ψ: Ψ_+(a) and Ψ_-(a) against 2^{m-1}([a]_0 ± [a]_m).
std::vector<Verdict> check_plus_minus_closed_forms(const StructuralSet& phi, const Multivector& a);

/// φ = ψ: φ^j Ψ_+(a) φ^j = Ψ_-(a) for the given 1-based j.
Verdict check_plus_minus_conjugation(const StructuralSet& phi, const Multivector& a, int j);

/// Ψ_j restricted to grade k equals scalar multiplication by psi_k_closed_form,
/// checked on every grade-k basis blade.
Verdict check_closed_form(const StructuralSet& phi, int j, int k);

enum class CommutationIdentity { First, Second, Third };

/// The commutation identities between twisted Dirac operators and Ψ_1.
/// First and Second yield two verdicts each (the two stated forms; Second's
/// second form is Δ Ψ_1(f) = Ψ_1(Δf)); Third yields one.
std::vector<Verdict> check_commutation(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f,
                                       CommutationIdentity which);

/// φ∂[Ψ_+(f)]ψ∂ = Ψ_-(Δf) and φ∂[Ψ_-(f)]ψ∂ = Ψ_+(Δf).
std::vector<Verdict> check_sandwich_plus_minus(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);

/// Ψ_k^{φ,ψ} applied pointwise to a field.
PolyField apply_psi_k(const StructuralSet& phi, const StructuralSet& psi, int k, const PolyField& f);
PolyField apply_psi_plus(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);
PolyField apply_psi_minus(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);

/// Two-dimensional case. Given ψ and a 2x2 transition matrix C of rotation
/// form ((c1,-c2),(c2,c1)) or reflection form ((c1,c2),(c2,-c1)), the partner
/// set is φ^j = Σ_i C(i,j) ψ^i, so that transition(φ, ψ) == C.
StructuralSet planar_partner(const StructuralSet& psi, PlanarForm form, const Rational& c1, const Rational& c2);

/// Closed forms of Ψ_+ and Ψ_- in the planar case, written through the
/// components f = f0 + f1ψ^1 + f2ψ^2 + f12ψ^1ψ^2 of the field.
std::pair<PolyField, PolyField> planar_plus_minus(const StructuralSet& psi, PlanarForm form, const Rational& c1,
                                                  const Rational& c2, const PolyField& f);

/// Compares planar_plus_minus with the operators applied directly.
std::vector<Verdict> check_planar_formulas(const StructuralSet& psi, PlanarForm form, const Rational& c1,
                                           const Rational& c2, const PolyField& f);

}  // namespace clifan
