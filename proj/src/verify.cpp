#include "clifan/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "clifan/classifier.hpp"
#include "clifan/expr_parser.hpp"
#include "clifan/random.hpp"
#include "clifan/solver.hpp"

namespace clifan {

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed(); });
}

namespace {

// Declaration order of the suite; the report follows it.
enum Identity : int {
  kRestrictedBijective,
  kPsi1Bijective,
  kClosedForm,
  kHypergeometric,
  kParity,
  kPlusMinusClosedForms,
  kPlusMinusConjugation,
  kRecursion,
  kEvenOddCommutation,
  kEvenOddMembership,
  kCommutationFirst,
  kCommutationSecond,
  kCommutationThird,
  kOddDimensionEquivalences,
  kSandwichPlusMinus,
  kPlusMinusImages,
  kPlanarFormulas,
  kPlanarParts,
  kConverse,
  kIdentityCount,
};

const char* identity_name(int id) {
  switch (id) {
    case kRestrictedBijective: return "restricted Psi_1^J bijective for odd |J|";
    case kPsi1Bijective: return "Psi_1 bijective for odd m";
    case kClosedForm: return "Psi_j on grade k equals binomial closed form";
    case kHypergeometric: return "hypergeometric form equals closed form";
    case kParity: return "parity relation Psi_j vs Psi_{m-j}";
    case kPlusMinusClosedForms: return "Psi_+/Psi_- closed forms for phi = psi";
    case kPlusMinusConjugation: return "phi^j Psi_+(a) phi^j = Psi_-(a)";
    case kRecursion: return "recursion (m-k+1)Psi_{k-1} + (k+1)Psi_{k+1} = Psi_1 Psi_k";
    case kEvenOddCommutation: return "even/odd parts commute with sandwich and phi-psi Laplacian";
    case kEvenOddMembership: return "I and Hpp membership via even/odd parts";
    case kCommutationFirst: return "Dirac/Psi_1 commutation (i)";
    case kCommutationSecond: return "Dirac/Psi_1 commutation (ii)";
    case kCommutationThird: return "Dirac/Psi_1 commutation (iii)";
    case kOddDimensionEquivalences: return "odd m: I and Hpp characterizations";
    case kSandwichPlusMinus: return "sandwich of Psi_+/- equals Psi_-/+ of Laplacian";
    case kPlusMinusImages: return "Psi_+ and Psi_- map H and I into H&I";
    case kPlanarFormulas: return "planar Psi_+/Psi_- component formulas";
    case kPlanarParts: return "planar even/odd part of H or I member lies in H&I";
    case kConverse: return "converse counterexample";
  }
  return "?";
}

class Collector {
 public:
  void record(int id, int m, const Verdict& v) {
    auto& r = slot(id, m);
    ++r.checks;
    if (!v.holds) {
      ++r.failures;
      if (!r.counterexample) r.counterexample = v;
    }
  }
  void record(int id, int m, const std::vector<Verdict>& vs) {
    for (const auto& v : vs) record(id, m, v);
  }
  VerifyReport finish() {
    VerifyReport report;
    for (auto& [key, r] : results_) report.results.push_back(std::move(r));
    return report;
  }

 private:
  IdentityResult& slot(int id, int m) {
    auto [it, inserted] = results_.try_emplace({id, m});
    if (inserted) {
      it->second.name = identity_name(id);
      it->second.m = m;
    }
    return it->second;
  }
  std::map<std::pair<int, int>, IdentityResult> results_;
};

std::vector<std::vector<int>> odd_subsets(int m) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask)
    if (__builtin_popcount(mask) % 2 == 1) out.push_back(Blade{mask}.indices());
  return out;
}

Verdict bijective_verdict(const PsiOperator& op) {
  const RationalMatrix mat = psi_matrix(op);
  const std::size_t r = rank(mat);
  return Verdict{op.name() + " rank", r == mat.rows(), std::to_string(r), std::to_string(mat.rows())};
}

/// Harmonic, (φ,ψ)-harmonic and inframonogenic degree-2 fields for one pair.
struct MemberPool {
  StructuralSet phi, psi;
  std::vector<PolyField> harmonic, phi_psi_harmonic, inframonogenic;
};

MemberPool build_pool(const StructuralSet& phi, const StructuralSet& psi, int degree) {
  const CoefficientSpace space(phi.dimension(), degree);
  const auto ops = class_operators(phi, psi, space);
  return MemberPool{phi, psi, common_nullspace({ops[0]}, space).fields(), common_nullspace({ops[1]}, space).fields(),
                    common_nullspace({ops[2]}, space).fields()};
}

/// A random rational combination of up to three members of `basis`.
PolyField draw_member(Rng& rng, const std::vector<PolyField>& basis, int m) {
  PolyField f(m);
  if (basis.empty()) return f;
  const long count = rng.uniform(1, 3);
  for (long i = 0; i < count; ++i)
    f += rng.rational(3, 2) * basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
  return f;
}

void run_dimension(int m, const VerifyConfig& config, Collector& out) {
  Rng rng(config.seed * 1000003ULL + static_cast<std::uint64_t>(m));
  const int trials = config.trials;

  // Class members per random pair.
  std::vector<MemberPool> pools;
  for (int p = 0; p < 2; ++p) {
    const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
    pools.push_back(build_pool(phi, psi, 2));
  }
  const auto pick_pool = [&]() -> const MemberPool& { return pools[static_cast<std::size_t>(rng.uniform(0, 1))]; };

  const auto subsets = odd_subsets(m);
  for (int t = 0; t < trials; ++t) {
    const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
    if (m <= 4) {
      for (const auto& j : subsets) out.record(kRestrictedBijective, m, bijective_verdict(PsiOperator::restricted(phi, psi, j)));
    } else {
      const auto& j = subsets[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(subsets.size()) - 1))];
      out.record(kRestrictedBijective, m, bijective_verdict(PsiOperator::restricted(phi, psi, j)));
    }
    if (m % 2 == 1) out.record(kPsi1Bijective, m, bijective_verdict(PsiOperator::level_k(phi, psi, 1)));
  }

  for (int t = 0; t < std::min(trials, 6); ++t) {
    const StructuralSet phi = t == 0 ? StructuralSet::standard(m) : rng.signed_permutation(m);
    for (int j = 0; j <= m; ++j)
      for (int k = 0; k <= m; ++k) out.record(kClosedForm, m, check_closed_form(phi, j, k));
  }

  for (int j = 0; j <= m; ++j)
    for (int k = 0; k <= m; ++k) {
      const Rational a = psi_k_closed_form(m, j, k), b = psi_k_hypergeometric(m, j, k);
      out.record(kHypergeometric, m,
                 Verdict{"lambda(" + std::to_string(m) + "," + std::to_string(j) + "," + std::to_string(k) + ")", a == b,
                         to_string(b), to_string(a)});
    }

  for (int t = 0; t < trials; ++t) {
    const StructuralSet phi = t % 2 ? rng.rational_set(m) : rng.signed_permutation(m);
    const Multivector a = rng.multivector(m);
    for (int j = 0; j <= m; ++j) {
      if (m % 2 == 1) out.record(kParity, m, check_corollary_parity(phi, a, j, 0));
      else
        for (int k = 0; k <= m; ++k) out.record(kParity, m, check_corollary_parity(phi, a, j, k));
    }
    out.record(kPlusMinusClosedForms, m, check_plus_minus_closed_forms(phi, a));
    for (int j = 1; j <= m; ++j) out.record(kPlusMinusConjugation, m, check_plus_minus_conjugation(phi, a, j));
  }

  for (int t = 0; t < trials; ++t) {
    const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
    const Multivector a = rng.multivector(m);
    for (int k = 1; k <= m - 1; ++k) {
      if (config.fault == std::string("recursion")) {
        const Multivector lhs = Rational(m - k + 1) * apply_psi_k(phi, psi, k - 1, a) + Rational(k + 1) * apply_psi_k(phi, psi, k + 1, a);
        const Multivector inner = apply_psi_k(phi, psi, k, a);
        const Multivector rhs = apply_psi_k(phi, psi, 1, inner) + inner;
        out.record(kRecursion, m, make_verdict("recursion k=" + std::to_string(k) + " (fault injected)", lhs, rhs));
      } else {
        out.record(kRecursion, m, check_recursion(phi, psi, k, a));
      }
    }
  }

  for (int t = 0; t < trials; ++t) {
    // Alternate between arbitrary fields and genuine class members.
    const MemberPool& pool = pick_pool();
    const bool member = t % 2 == 1;
    const StructuralSet& phi = member ? pool.phi : rng.rational_set(m);
    const StructuralSet& psi = member ? pool.psi : rng.rational_set(m);
    const PolyField f = member ? draw_member(rng, t % 4 == 1 ? pool.inframonogenic : pool.phi_psi_harmonic, m)
                               : rng.field(m, 4, 4);
    out.record(kEvenOddCommutation, m, check_even_odd_commutation(phi, psi, f));
    out.record(kEvenOddMembership, m, check_even_odd_membership(phi, psi, f));
    out.record(kCommutationFirst, m, check_commutation(phi, psi, f, CommutationIdentity::First));
    out.record(kCommutationSecond, m, check_commutation(phi, psi, f, CommutationIdentity::Second));
    out.record(kCommutationThird, m, check_commutation(phi, psi, f, CommutationIdentity::Third));
    if (m % 2 == 1) out.record(kOddDimensionEquivalences, m, check_odd_dimension_equivalences(phi, psi, f));
    out.record(kSandwichPlusMinus, m, check_sandwich_plus_minus(phi, psi, f));
  }

  for (int t = 0; t < trials; ++t) {
    const MemberPool& pool = pick_pool();
    const PolyField f = draw_member(rng, t % 2 ? pool.inframonogenic : pool.harmonic, m);
    out.record(kPlusMinusImages, m, check_plus_minus_images(pool.phi, pool.psi, f));
  }

  if (m == 2) {
    const Rational c1(3, 5), c2(4, 5);
    for (int t = 0; t < trials; ++t) {
      const StructuralSet psi = rng.rational_set(2);
      const PolyField f = rng.field(2, 4, 4);
      out.record(kPlanarFormulas, m, check_planar_formulas(psi, PlanarForm::Rotation, c1, c2, f));
      out.record(kPlanarFormulas, m, check_planar_formulas(psi, PlanarForm::Reflection, c1, c2, f));
    }
    for (PlanarForm form : {PlanarForm::Rotation, PlanarForm::Reflection}) {
      const StructuralSet psi = rng.rational_set(2);
      const StructuralSet phi = planar_partner(psi, form, c1, c2);
      const MemberPool pool = build_pool(phi, psi, 3);
      for (int t = 0; t < trials; ++t) {
        const PolyField f = draw_member(rng, t % 2 ? pool.inframonogenic : pool.harmonic, 2);
        const PolyField part = form == PlanarForm::Rotation ? even_part(f) : odd_part(f);
        const RegionLabel got = region(phi, psi, part);
        const bool ok = got.contains(FunctionClass::Harmonic) && got.contains(FunctionClass::Inframonogenic);
        out.record(kPlanarParts, m,
                   Verdict{form == PlanarForm::Rotation ? "even part (rotation)" : "odd part (reflection)", ok, got.name(),
                           "H&I"});
      }
    }
  }

  if (m >= 2) {
    const StructuralSet phi = rng.rational_set(m);
    const PolyField f = converse_counterexample(phi);
    const auto c = classify(phi, phi, f);
    const PolyField image = apply_psi_plus(phi, phi, f);
    const bool image_ok = is_harmonic(image) && is_inframonogenic(phi, phi, image);
    out.record(kConverse, m,
               Verdict{"f outside H and I, Psi_+(f) in H&I", !c.harmonic && !c.inframonogenic && image_ok,
                       c.region().name() + (image_ok ? " / image in H&I" : " / image outside H&I"),
                       "f outside H, I / image in H&I"});
  }
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be positive");
  for (int m : config.dimensions)
    if (m < 2 || m > 7) throw std::invalid_argument("verification dimension " + std::to_string(m) + " outside 2..7");
  Collector out;
  for (int m : config.dimensions) run_dimension(m, config, out);
  return out.finish();
}

std::string format_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << (r.passed() ? "PASS " : "FAIL ") << "m=" << r.m << "  " << r.name << "  (" << r.checks - r.failures << "/"
       << r.checks << ")\n";
    if (r.counterexample) {
      os << "    counterexample: " << r.counterexample->identity << "\n"
         << "      lhs: " << r.counterexample->lhs << "\n"
         << "      rhs: " << r.counterexample->rhs << "\n";
    }
  }
  os << (report.all_passed() ? "all identities hold\n" : "verification FAILED\n");
  return os.str();
}

json report_to_json(const VerifyReport& report) {
  json results = json::array();
  for (const auto& r : report.results) {
    json entry{{"identity", r.name}, {"m", r.m}, {"checks", r.checks}, {"failures", r.failures}, {"passed", r.passed()}};
    if (r.counterexample) entry["counterexample"] = verdict_to_json(*r.counterexample);
    results.push_back(entry);
  }
  return {{"allPassed", report.all_passed()}, {"results", results}};
}

namespace {

std::string flags(const ClassMembership& c) {
  return c.region().name() + " hypLeft=" + (c.hyperholomorphic_left ? "1" : "0") +
         " hypRight=" + (c.hyperholomorphic_right ? "1" : "0");
}

DemoCase compare(std::string name, std::string expected, std::string actual) {
  const bool ok = expected == actual;
  return DemoCase{std::move(name), std::move(expected), std::move(actual), ok};
}

}  // namespace

std::vector<DemoCase> run_demo() {
  std::vector<DemoCase> out;
  const StructuralSet phi = StructuralSet::standard(3), psi = StructuralSet::reversed(3);

  struct Example {
    const char* expr;
    const char* expected;
  };
  const Example examples[] = {
      {"(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]", "H&Hpp&I hypLeft=1 hypRight=1"},
      {"2*x1*x3*e[1] - x2*e[2] - (x1^2 - x3^2)*e[3]", "H&Hpp&I hypLeft=0 hypRight=0"},
      {"2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", "Hpp&I hypLeft=0 hypRight=0"},
      {"x1*x3*e[1] + x2*e[2]", "H&I hypLeft=0 hypRight=0"},
      {"(x1*x2 + x2*x3)*e[2]", "H&Hpp hypLeft=0 hypRight=0"},
  };
  for (const auto& ex : examples)
    out.push_back(compare(std::string("classify ") + ex.expr, ex.expected, flags(classify(phi, psi, parse_field(ex.expr, 3)))));

  {
    const PolyField f = parse_field("x1^3*e[1,2] + x2*x3^2*e[3] - 1/2*x1*x2", 3);
    const bool ok = dirac_left(psi, dirac_left(psi, f)) == -laplacian(f) && dirac_right(dirac_right(f, psi), psi) == -laplacian(f);
    out.push_back(compare("psi-Dirac squares to -Laplacian", "true", ok ? "true" : "false"));
  }
  {
    const StructuralSet std3 = StructuralSet::standard(3);
    out.push_back(compare("classic Psi(e1) = sum_j e_j e1 e_j in m=3", "1*e[1]",
                          format(apply_psi_k(std3, std3, 1, Multivector::basis_vector(3, 1)))));
    out.push_back(compare("Psi_+(1) for phi = psi, m=3", "4*e[]", format(apply_psi_plus(std3, std3, Multivector(3, Rational(1))))));
  }
  out.push_back(compare("Psi_1^{phi,psi} bijective, m=3, example sets", "true",
                        is_bijective(PsiOperator::level_k(phi, psi, 1)) ? "true" : "false"));
  out.push_back(compare("lambda(2,1,1) (Psi_1 singular on grade 1 in m=2)", "0", to_string(psi_k_closed_form(2, 1, 1))));

  {
    const Rational c1(3, 5), c2(4, 5);
    const StructuralSet base = StructuralSet::standard(2);
    const PolyField f = parse_field("x1^2*e[] + x1*x2*e[1] - 3*x2*e[2] + 5/2*x1*e[1,2]", 2);
    for (PlanarForm form : {PlanarForm::Rotation, PlanarForm::Reflection}) {
      const StructuralSet partner = planar_partner(base, form, c1, c2);
      const std::string tag = form == PlanarForm::Rotation ? "rotation" : "reflection";
      out.push_back(compare("planar transition classified (" + tag + ")", tag,
                            classify_planar(transition(partner, base)) == PlanarForm::Rotation ? "rotation" : "reflection"));
      bool ok = true;
      for (const auto& v : check_planar_formulas(base, form, c1, c2, f)) ok = ok && v.holds;
      out.push_back(compare("planar Psi_+/Psi_- formulas (" + tag + ")", "true", ok ? "true" : "false"));
    }
  }

  {
    const ClassDimensions dims = class_dimensions(phi, psi, 2);
    out.push_back(compare("m=3 d=2 triple intersection non-trivial", "true", dims.triple >= 1 ? "true" : "false"));
    for (const char* target : {"H&Hpp&I", "Hpp&I", "H&I", "H&Hpp"}) {
      const auto w = find_region_witness(phi, psi, 2, *RegionLabel::parse(target));
      out.push_back(compare(std::string("witness for region ") + target, target, w ? region(phi, psi, *w).name() : "not found"));
    }
  }

  {
    const PolyField f = parse_field("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", 3);
    const LinearMap psi1(PsiOperator::level_k(phi, psi, 1));
    const PolyField lhs = sandwich(psi, f, psi);
    const PolyField rhs = kPhiPsiHarmonicCriterionFactor * dirac_left(phi, psi1(dirac_left(psi, f)));
    out.push_back(compare("odd-m Hpp criterion on 2x2x3e1-(x1^2+x2^2)e2 (factor -1/2)", "true", lhs == rhs ? "true" : "false"));
  }

  for (int m : {2, 3}) {
    const StructuralSet s = StructuralSet::standard(m);
    const PolyField f = converse_counterexample(s);
    const PolyField image = apply_psi_plus(s, s, f);
    const std::string actual = region(s, s, f).name() + " -> " + region(s, s, image).name();
    const bool ok = !is_harmonic(f) && !is_inframonogenic(s, s, f) && is_harmonic(image) && is_inframonogenic(s, s, image);
    out.push_back(DemoCase{"converse counterexample m=" + std::to_string(m) + ": " + format(f),
                           "f outside H and I, Psi_+(f) in H&I", actual, ok});
  }
  return out;
}

}  // namespace clifan
