#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clifan/polyfield.hpp"
#include "clifan/psi.hpp"
#include "clifan/structural_set.hpp"

namespace clifan {

/// The three function classes: harmonic (H), (φ,ψ)-harmonic (Hpp) and
/// (φ,ψ)-inframonogenic (I).
enum class FunctionClass : std::uint8_t { Harmonic = 1, PhiPsiHarmonic = 2, Inframonogenic = 4 };

/// Exact subset of {H, Hpp, I} containing a field; 8 possible values.
struct RegionLabel {
  std::uint8_t bits = 0;

  static RegionLabel of(bool harmonic, bool phi_psi_harmonic, bool inframonogenic);
  /// Accepts "none", "all" or names joined by '&', e.g. "H&I", "Hpp&I", in any order.
  static std::optional<RegionLabel> parse(const std::string& text);
  static std::vector<RegionLabel> all();

  bool contains(FunctionClass c) const { return bits & static_cast<std::uint8_t>(c); }
  /// Canonical name: "none" or members in H, Hpp, I order joined by '&'.
  std::string name() const;
  friend bool operator==(RegionLabel, RegionLabel) = default;
};

struct ClassMembership {
  bool harmonic = false;
  bool phi_psi_harmonic = false;
  bool inframonogenic = false;
  bool hyperholomorphic_left = false;   // ψ∂f = 0
  bool hyperholomorphic_right = false;  // fψ∂ = 0

  RegionLabel region() const { return RegionLabel::of(harmonic, phi_psi_harmonic, inframonogenic); }
  friend bool operator==(const ClassMembership&, const ClassMembership&) = default;
};

bool is_harmonic(const PolyField& f);
bool is_phi_psi_harmonic(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);
bool is_inframonogenic(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);

ClassMembership classify(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);
RegionLabel region(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);

/// Membership in I and Hpp is equivalent to membership of both the even and
/// the odd part. Two verdicts, lhs = membership of f, rhs = of both parts.
std::vector<Verdict> check_even_odd_membership(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);

/// Even/odd projections commute with the sandwich and φ∂ψ∂ operators.
std::vector<Verdict> check_even_odd_commutation(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);

/// Scalar c in the criterion  f ∈ Hpp  ⇔  ψ∂[f]ψ∂ = c·φ∂[Ψ_1(ψ∂f)].
/// The value consistent with the third commutation identity is -1/2.
inline const Rational kPhiPsiHarmonicCriterionFactor{-1, 2};

/// Odd m only: f ∈ I ⇔ Ψ_1(f) ∈ I, and the Hpp criterion above. Two verdicts
/// whose sides are the truth values of each side of the equivalence.
std::vector<Verdict> check_odd_dimension_equivalences(const StructuralSet& phi, const StructuralSet& psi,
                                                      const PolyField& f,
                                                      const Rational& factor = kPhiPsiHarmonicCriterionFactor);

/// For f in H or I: Ψ_+(f) and Ψ_-(f) both lie in H ∩ I. Returns one verdict
/// per image; fields outside H ∪ I produce no verdicts.
std::vector<Verdict> check_plus_minus_images(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f);

}  // namespace clifan
