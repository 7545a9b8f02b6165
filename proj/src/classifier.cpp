#include "clifan/classifier.hpp"

#include <sstream>

namespace clifan {

namespace {

constexpr std::pair<FunctionClass, const char*> kNames[] = {
    {FunctionClass::Harmonic, "H"},
    {FunctionClass::PhiPsiHarmonic, "Hpp"},
    {FunctionClass::Inframonogenic, "I"},
};

std::string truth(bool b) { return b ? "true" : "false"; }

Verdict equivalence(std::string identity, bool lhs, bool rhs) {
  return Verdict{std::move(identity), lhs == rhs, truth(lhs), truth(rhs)};
}

}  // namespace

RegionLabel RegionLabel::of(bool harmonic, bool phi_psi_harmonic, bool inframonogenic) {
  RegionLabel r;
  if (harmonic) r.bits |= static_cast<std::uint8_t>(FunctionClass::Harmonic);
  if (phi_psi_harmonic) r.bits |= static_cast<std::uint8_t>(FunctionClass::PhiPsiHarmonic);
  if (inframonogenic) r.bits |= static_cast<std::uint8_t>(FunctionClass::Inframonogenic);
  return r;
}

std::optional<RegionLabel> RegionLabel::parse(const std::string& text) {
  if (text == "none") return RegionLabel{};
  if (text == "all") return RegionLabel{7};
  RegionLabel r;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '&')) {
    bool found = false;
    for (const auto& [cls, name] : kNames)
      if (part == name) {
        r.bits |= static_cast<std::uint8_t>(cls);
        found = true;
      }
    if (!found) return std::nullopt;
  }
  if (r.bits == 0) return std::nullopt;
  return r;
}

std::vector<RegionLabel> RegionLabel::all() {
  std::vector<RegionLabel> out;
  for (std::uint8_t b = 0; b < 8; ++b) out.push_back(RegionLabel{b});
  return out;
}

std::string RegionLabel::name() const {
  std::string out;
  for (const auto& [cls, name] : kNames)
    if (contains(cls)) out += (out.empty() ? "" : "&") + std::string(name);
  return out.empty() ? "none" : out;
}

bool is_harmonic(const PolyField& f) { return laplacian(f).is_zero(); }

bool is_phi_psi_harmonic(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  return dirac_left_left(phi, psi, f).is_zero();
}

bool is_inframonogenic(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  return sandwich(phi, f, psi).is_zero();
}

ClassMembership classify(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  if (phi.dimension() != psi.dimension() || phi.dimension() != f.dimension())
    throw DimensionError("classify: dimensions of sets and field differ");
  ClassMembership c;
  c.harmonic = is_harmonic(f);
  c.phi_psi_harmonic = is_phi_psi_harmonic(phi, psi, f);
  c.inframonogenic = is_inframonogenic(phi, psi, f);
  c.hyperholomorphic_left = dirac_left(psi, f).is_zero();
  c.hyperholomorphic_right = dirac_right(f, psi).is_zero();
  return c;
}

RegionLabel region(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  return classify(phi, psi, f).region();
}

std::vector<Verdict> check_even_odd_membership(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  const PolyField even = even_part(f), odd = odd_part(f);
  return {
      equivalence("I membership via even/odd parts", is_inframonogenic(phi, psi, f),
                  is_inframonogenic(phi, psi, even) && is_inframonogenic(phi, psi, odd)),
      equivalence("Hpp membership via even/odd parts", is_phi_psi_harmonic(phi, psi, f),
                  is_phi_psi_harmonic(phi, psi, even) && is_phi_psi_harmonic(phi, psi, odd)),
  };
}

std::vector<Verdict> check_even_odd_commutation(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  const PolyField even = even_part(f), odd = odd_part(f);
  const PolyField sw = sandwich(phi, f, psi);
  const PolyField ll = dirac_left_left(phi, psi, f);
  return {
      make_verdict("even part of sandwich", even_part(sw), sandwich(phi, even, psi)),
      make_verdict("odd part of sandwich", odd_part(sw), sandwich(phi, odd, psi)),
      make_verdict("even part of phi-psi Laplacian", even_part(ll), dirac_left_left(phi, psi, even)),
      make_verdict("odd part of phi-psi Laplacian", odd_part(ll), dirac_left_left(phi, psi, odd)),
  };
}

std::vector<Verdict> check_odd_dimension_equivalences(const StructuralSet& phi, const StructuralSet& psi,
                                                      const PolyField& f, const Rational& factor) {
  if (phi.dimension() % 2 == 0) throw std::invalid_argument("equivalences require odd m");
  const LinearMap psi1(PsiOperator::level_k(phi, psi, 1));
  const PolyField dpsi = dirac_left(psi, f);
  const bool criterion = sandwich(psi, f, psi) == factor * dirac_left(phi, psi1(dpsi));
  return {
      equivalence("f in I iff Psi_1(f) in I", is_inframonogenic(phi, psi, f), is_inframonogenic(phi, psi, psi1(f))),
      equivalence("f in Hpp iff criterion", is_phi_psi_harmonic(phi, psi, f), criterion),
  };
}

std::vector<Verdict> check_plus_minus_images(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  std::vector<Verdict> out;
  if (!is_harmonic(f) && !is_inframonogenic(phi, psi, f)) return out;
  const RegionLabel target = RegionLabel::of(true, false, true);
  for (const auto& [name, image] : {std::pair{"Psi_+", apply_psi_plus(phi, psi, f)},
                                    std::pair{"Psi_-", apply_psi_minus(phi, psi, f)}}) {
    const bool in_h = is_harmonic(image), in_i = is_inframonogenic(phi, psi, image);
    out.push_back(Verdict{std::string(name) + "(f) in H&I", in_h && in_i, RegionLabel::of(in_h, false, in_i).name(),
                          target.name()});
  }
  return out;
}

}  // namespace clifan
