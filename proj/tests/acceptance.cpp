// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "clifan/classifier.hpp"
#include "clifan/expr_parser.hpp"
#include "clifan/random.hpp"
#include "clifan/solver.hpp"
#include "oracles.hpp"

using namespace clifan;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
  void expect(const Verdict& v) { expect(v.holds, v.identity + ": " + v.lhs + " vs " + v.rhs); }
  void expect(const std::vector<Verdict>& vs) {
    for (const auto& v : vs) expect(v);
  }
};

const StructuralSet kPhi = StructuralSet::standard(3);
const StructuralSet kPsi = StructuralSet::reversed(3);

struct Example {
  const char* expr;
  const char* region;
  bool hyperholomorphic;
};
const Example kExamples[] = {
    {"(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]", "H&Hpp&I", true},
    {"2*x1*x3*e[1] - x2*e[2] - (x1^2 - x3^2)*e[3]", "H&Hpp&I", false},
    {"2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]", "Hpp&I", false},
    {"x1*x3*e[1] + x2*e[2]", "H&I", false},
    {"(x1*x2 + x2*x3)*e[2]", "H&Hpp", false},
};

std::string ctx(int m, int j, int k) {
  return "m=" + std::to_string(m) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
}

Outcome examples_classify() {
  Outcome out;
  for (const auto& ex : kExamples) {
    const auto c = classify(kPhi, kPsi, parse_field(ex.expr, 3));
    out.expect(c.region().name() == ex.region, std::string(ex.expr) + " -> " + c.region().name());
    out.expect(c.hyperholomorphic_left == ex.hyperholomorphic && c.hyperholomorphic_right == ex.hyperholomorphic,
               std::string(ex.expr) + " hyperholomorphic flags");
  }
  return out;
}

Outcome closed_form_vs_brute_force() {
  Outcome out;
  Rng rng(2002);
  for (int m = 1; m <= 6; ++m) {
    std::vector<StructuralSet> sets{StructuralSet::standard(m)};
    for (int t = 0; t < 5; ++t) sets.push_back(rng.signed_permutation(m));
    for (const auto& s : sets)
      for (int j = 0; j <= m; ++j)
        for (Blade b : blade_basis(m)) {
          const Multivector blade(m, b);
          out.expect(oracle::psi_k(s, s, j, blade) == blade * psi_k_closed_form(m, j, b.grade()),
                     ctx(m, j, b.grade()) + " set " + format(s));
        }
  }
  return out;
}

Outcome hypergeometric_vs_closed_form() {
  Outcome out;
  std::size_t low = 0, high = 0;
  for (int m = 0; m <= 8; ++m)
    for (int j = 0; j <= m; ++j)
      for (int k = 0; k <= m; ++k) {
        (j + k <= m ? low : high)++;
        out.expect(psi_k_hypergeometric(m, j, k) == psi_k_closed_form(m, j, k), ctx(m, j, k));
      }
  out.expect(low > 0 && high > 0, "both branches exercised");
  return out;
}

Outcome restricted_full_rank() {
  Outcome out;
  Rng rng(4004);
  for (int m = 1; m <= 5; ++m) {
    std::vector<std::vector<int>> odd;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask)
      if (__builtin_popcount(mask) % 2 == 1) odd.push_back(Blade{mask}.indices());
    for (int t = 0; t < 50; ++t) {
      const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
      std::vector<std::vector<int>> subsets = odd;
      if (m == 5) subsets = {odd[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(odd.size()) - 1))]};
      for (const auto& j : subsets) {
        const PsiOperator op = PsiOperator::restricted(phi, psi, j);
        out.expect(rank(psi_matrix(op)) == (1u << m), op.name() + " m=" + std::to_string(m));
      }
    }
  }
  const StructuralSet s2 = StructuralSet::standard(2);
  out.expect(psi_k_closed_form(2, 1, 1) == 0, "lambda(2,1,1) = 0");
  out.expect(rank(psi_matrix(PsiOperator::level_k(s2, s2, 1))) < 4, "Psi_1 singular for m=2, equal sets");
  return out;
}

Outcome parity_and_plus_minus() {
  Outcome out;
  Rng rng(5005);
  for (int m = 2; m <= 6; ++m)
    for (int t = 0; t < 100; ++t) {
      const StructuralSet s = rng.signed_permutation(m);
      const Multivector a = rng.multivector(m);
      for (int j = 0; j <= m; ++j) {
        if (m % 2 == 1) {
          out.expect(check_corollary_parity(s, a, j, 0));
        } else {
          for (int k = 0; k <= m; ++k) out.expect(check_corollary_parity(s, a, j, k));
        }
      }
      out.expect(check_plus_minus_closed_forms(s, a));
      for (int j = 1; j <= m; ++j) out.expect(check_plus_minus_conjugation(s, a, j));
    }
  return out;
}

void field_identities(Outcome& out, const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  const int m = f.dimension();
  out.expect(check_even_odd_membership(phi, psi, f));
  out.expect(check_even_odd_commutation(phi, psi, f));
  for (auto which : {CommutationIdentity::First, CommutationIdentity::Second, CommutationIdentity::Third})
    out.expect(check_commutation(phi, psi, f, which));
  out.expect(check_sandwich_plus_minus(phi, psi, f));
  for (const auto& [alpha, value] : f.terms())
    for (int k = 1; k < m; ++k) out.expect(check_recursion(phi, psi, k, value));
  if (m % 2 == 1) out.expect(check_odd_dimension_equivalences(phi, psi, f));
}

Outcome field_identity_suite() {
  Outcome out;
  Rng rng(6006);
  for (int m : {2, 3, 5}) {
    for (int t = 0; t < 50; ++t) {
      const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
      field_identities(out, phi, psi, rng.field(m, 4, 5));
    }
    if (m % 2 == 1) {
      const StructuralSet phi = rng.rational_set(m), psi = rng.rational_set(m);
      const CoefficientSpace space(m, 2);
      const auto ops = class_operators(phi, psi, space);
      for (std::size_t c : {1u, 2u}) {
        const auto basis = nullspace(ops[c]).fields();
        for (std::size_t i = 0; i < basis.size(); i += (m == 5 ? 7 : 1))
          out.expect(check_odd_dimension_equivalences(phi, psi, basis[i]));
      }
    }
  }
  for (const auto& ex : kExamples) field_identities(out, kPhi, kPsi, parse_field(ex.expr, 3));
  return out;
}

Outcome images_in_intersection() {
  Outcome out;
  for (int d : {2, 3, 4}) {
    const CoefficientSpace space(3, d);
    const auto ops = class_operators(kPhi, kPsi, space);
    for (std::size_t c : {0u, 2u})
      for (const auto& f : nullspace(ops[c]).fields())
        for (const PolyField& image : {apply_psi_plus(kPhi, kPsi, f), apply_psi_minus(kPhi, kPsi, f)}) {
          const RegionLabel r = region(kPhi, kPsi, image);
          out.expect(r.contains(FunctionClass::Harmonic) && r.contains(FunctionClass::Inframonogenic),
                     "d=" + std::to_string(d) + " image of " + format(f) + " in " + r.name());
        }
  }
  return out;
}

Outcome planar_cases() {
  Outcome out;
  const Rational c1(3, 5), c2(4, 5);
  Rng rng(8008);
  for (int t = 0; t < 100; ++t) {
    const StructuralSet psi = rng.rational_set(2);
    const PolyField f = rng.field(2, 4, 5);
    out.expect(check_planar_formulas(psi, PlanarForm::Rotation, c1, c2, f));
    out.expect(check_planar_formulas(psi, PlanarForm::Reflection, c1, c2, f));
  }
  for (PlanarForm form : {PlanarForm::Rotation, PlanarForm::Reflection})
    for (int trial = 0; trial < 3; ++trial) {
      const StructuralSet psi = trial == 0 ? StructuralSet::standard(2) : rng.rational_set(2);
      const StructuralSet phi = planar_partner(psi, form, c1, c2);
      for (int d : {2, 3}) {
        const CoefficientSpace space(2, d);
        const auto ops = class_operators(phi, psi, space);
        for (std::size_t c : {0u, 2u})
          for (const auto& f : nullspace(ops[c]).fields()) {
            const PolyField part = form == PlanarForm::Rotation ? even_part(f) : odd_part(f);
            const RegionLabel r = region(phi, psi, part);
            out.expect(r.contains(FunctionClass::Harmonic) && r.contains(FunctionClass::Inframonogenic),
                       "part of " + format(f) + " in " + r.name());
          }
      }
    }
  return out;
}

Outcome converse() {
  Outcome out;
  Rng rng(9009);
  for (int m : {2, 3})
    for (const StructuralSet& s : {StructuralSet::standard(m), rng.rational_set(m)}) {
      const PolyField f = converse_counterexample(s);
      const PolyField image = apply_psi_plus(s, s, f);
      out.expect(!is_harmonic(f) && !is_inframonogenic(s, s, f), "f outside H and I: " + format(f));
      out.expect(is_harmonic(image) && is_inframonogenic(s, s, image), "Psi_+(f) in H&I: " + format(image));
    }
  return out;
}

Outcome solver_soundness() {
  Outcome out;
  Rng rng(10010);
  const OperatorKind kinds[] = {OperatorKind::Laplacian, OperatorKind::LeftLeft, OperatorKind::Sandwich,
                                OperatorKind::DiracLeft, OperatorKind::DiracRight};
  for (int t = 0; t < 20; ++t) {
    const OperatorSpec op{kinds[rng.uniform(0, 4)], rng.rational_set(3), rng.rational_set(3)};
    const int d = static_cast<int>(rng.uniform(1, 3));
    const OperatorMatrix mat = operator_matrix(op, CoefficientSpace(3, d));
    const NullspaceBasis ker = nullspace(mat);
    const std::string tag = op.name() + " d=" + std::to_string(d);
    for (const auto& v : ker.vectors) out.expect(is_zero_vector(mat.matrix * v), tag + " kernel vector");
    const std::size_t r = rank_reverse_order(mat.matrix);
    out.expect(r + ker.dimension() == mat.matrix.cols(), tag + " rank + nullity");
    std::vector<std::vector<Rational>> rows(mat.matrix.rows(), std::vector<Rational>(mat.matrix.cols()));
    for (std::size_t i = 0; i < mat.matrix.rows(); ++i)
      for (std::size_t j = 0; j < mat.matrix.cols(); ++j) rows[i][j] = mat.matrix(i, j);
    out.expect(oracle::rank(rows) == r, tag + " rank vs oracle");
  }

  const CoefficientSpace space(3, 2);
  const NullspaceBasis h = nullspace(operator_matrix({OperatorKind::Laplacian, kPhi, kPsi}, space));
  std::size_t scalar = 0;
  for (const auto& f : h.fields()) {
    bool only_scalar = true;
    for (const auto& [alpha, v] : f.terms()) only_scalar = only_scalar && v.is_pure_grade(0);
    scalar += only_scalar;
  }
  out.expect(static_cast<long>(scalar) == oracle::harmonic_count(3, 2), "scalar harmonic dimension");
  out.expect(scalar == 5, "scalar harmonic dimension is 5");
  out.expect(h.dimension() == 40, "full harmonic dimension is 40");
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "worked examples classify into their stated regions", 1, examples_classify},
      {2, "closed form equals brute force for m <= 6", 30, closed_form_vs_brute_force},
      {3, "hypergeometric form equals closed form for m <= 8", 5, hypergeometric_vs_closed_form},
      {4, "restricted Psi_1^J full rank for odd |J|; lambda(2,1,1) = 0", 60, restricted_full_rank},
      {5, "parity relation and Psi_+/- closed forms, m = 2..6", 10, parity_and_plus_minus},
      {6, "even/odd, commutation, sandwich lemma, recursion, odd-m criteria", 60, field_identity_suite},
      {7, "Psi_+/- images of H and I bases lie in H&I (m=3, d=2..4)", 120, images_in_intersection},
      {8, "planar formulas and planar parts in H&I", 10, planar_cases},
      {9, "converse counterexample for m = 2, 3", 5, converse},
      {10, "solver soundness and harmonic dimension 5 per component", 30, solver_soundness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = out.ok && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / limit %.0f s", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << out.checks
              << " checks, " << timing << "]\n";
    if (!out.ok) std::cout << "     first failure: " << out.first_failure << "\n";
    if (!in_time) std::cout << "     over time limit\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
