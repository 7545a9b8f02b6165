#include "clifan/psi.hpp"

#include <stdexcept>

namespace clifan {

namespace {

void check_pair(const StructuralSet& phi, const StructuralSet& psi) {
  if (phi.dimension() != psi.dimension()) throw DimensionError("structural sets differ in dimension");
}

void check_level(int m, int k) {
  if (k < 0 || k > m) throw std::out_of_range("level " + std::to_string(k) + " outside 0.." + std::to_string(m));
}

Multivector pow2(int m, int e) {
  Integer p = 1;
  p <<= static_cast<unsigned long>(e);
  return Multivector(m, Rational(p));
}

}  // namespace

PsiOperator PsiOperator::level_k(StructuralSet phi, StructuralSet psi, int k) {
  check_pair(phi, psi);
  check_level(phi.dimension(), k);
  return PsiOperator{std::move(phi), std::move(psi), PsiKind::Level, k, {}};
}

PsiOperator PsiOperator::plus(StructuralSet phi, StructuralSet psi) {
  check_pair(phi, psi);
  return PsiOperator{std::move(phi), std::move(psi), PsiKind::Plus, 0, {}};
}

PsiOperator PsiOperator::minus(StructuralSet phi, StructuralSet psi) {
  check_pair(phi, psi);
  return PsiOperator{std::move(phi), std::move(psi), PsiKind::Minus, 0, {}};
}

PsiOperator PsiOperator::restricted(StructuralSet phi, StructuralSet psi, std::vector<int> j) {
  check_pair(phi, psi);
  const int m = phi.dimension();
  if (j.empty()) throw std::invalid_argument("index set J must be non-empty");
  std::uint32_t seen = 0;
  for (int i : j) {
    if (i < 1 || i > m) throw std::out_of_range("index " + std::to_string(i) + " not in 1.." + std::to_string(m));
    if (seen & (1u << (i - 1))) throw std::invalid_argument("index " + std::to_string(i) + " repeated in J");
    seen |= 1u << (i - 1);
  }
  return PsiOperator{std::move(phi), std::move(psi), PsiKind::Subset, 1, std::move(j)};
}

std::string PsiOperator::name() const {
  switch (kind) {
    case PsiKind::Level: return "Psi_" + std::to_string(level);
    case PsiKind::Plus: return "Psi_+";
    case PsiKind::Minus: return "Psi_-";
    case PsiKind::Subset: {
      std::string s = "Psi_1^{";
      for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i]);
      return s + "}";
    }
  }
  return "Psi";
}

Multivector apply_psi_k(const StructuralSet& phi, const StructuralSet& psi, int k, const Multivector& a) {
  check_pair(phi, psi);
  const int m = phi.dimension();
  check_level(m, k);
  if (a.dimension() != m) throw DimensionError("multivector dimension mismatch");
  if (k == 0) return a;
  Multivector out(m);
  for (Blade b : blade_basis(m)) {
    if (b.grade() != k) continue;
    out += phi.product(b) * a * reverse(psi.product(b));
  }
  return out;
}

Multivector apply_psi_subset1(const StructuralSet& phi, const StructuralSet& psi, const std::vector<int>& j,
                              const Multivector& a) {
  const auto op = PsiOperator::restricted(phi, psi, j);
  Multivector out(a.dimension());
  for (int i : op.subset) out += phi[i - 1] * a * psi[i - 1];
  return out;
}

Multivector apply_psi_plus(const StructuralSet& phi, const StructuralSet& psi, const Multivector& a) {
  Multivector out(a.dimension());
  for (int k = 0; k <= phi.dimension(); k += 2) out += apply_psi_k(phi, psi, k, a);
  return out;
}

Multivector apply_psi_minus(const StructuralSet& phi, const StructuralSet& psi, const Multivector& a) {
  Multivector out(a.dimension());
  for (int k = 1; k <= phi.dimension(); k += 2) out += apply_psi_k(phi, psi, k, a);
  return out;
}

Multivector apply(const PsiOperator& op, const Multivector& a) {
  switch (op.kind) {
    case PsiKind::Level: return apply_psi_k(op.phi, op.psi, op.level, a);
    case PsiKind::Plus: return apply_psi_plus(op.phi, op.psi, a);
    case PsiKind::Minus: return apply_psi_minus(op.phi, op.psi, a);
    case PsiKind::Subset: return apply_psi_subset1(op.phi, op.psi, op.subset, a);
  }
  throw std::logic_error("unknown operator kind");
}

RationalMatrix psi_matrix(const PsiOperator& op) {
  const int m = op.dimension();
  const auto& basis = blade_basis(m);
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    out.set_column(c, apply(op, Multivector(m, basis[c])).coefficients());
  return out;
}

bool is_bijective(const PsiOperator& op) {
  const RationalMatrix mat = psi_matrix(op);
  return rank(mat) == mat.rows();
}

LinearMap::LinearMap(int m, RationalMatrix matrix) : m_(m), matrix_(std::move(matrix)) {
  const std::size_t n = std::size_t{1} << m;
  if (matrix_.rows() != n || matrix_.cols() != n) throw DimensionError("linear map matrix must be 2^m square");
}

Multivector LinearMap::operator()(const Multivector& a) const {
  if (a.dimension() != m_) throw DimensionError("multivector dimension mismatch");
  return Multivector::from_coefficients(m_, matrix_ * a.coefficients());
}

PolyField LinearMap::operator()(const PolyField& f) const {
  return f.map_values([this](const Multivector& v) { return (*this)(v); });
}

Rational psi_k_closed_form(int m, int j, int k) {
  check_level(m, j);
  check_level(m, k);
  Integer sum = 0;
  for (int i = std::max(0, j + k - m); i <= std::min(j, k); ++i) {
    Integer term = binomial(m - k, j - i) * binomial(k, i);
    if (i % 2) sum -= term;
    else sum += term;
  }
  if ((j * (k + 1)) % 2) sum = -sum;
  return Rational(sum);
}

Rational hypergeometric_2f1_terminating(long a, long b, long c, const Rational& z) {
  long terms = -1;
  if (a <= 0) terms = -a;
  if (b <= 0) terms = terms < 0 ? -b : std::min(terms, -b);
  if (terms < 0) throw std::domain_error("2F1 series does not terminate");
  Rational sum = 1, term = 1;
  for (long n = 0; n < terms; ++n) {
    if (c + n == 0) throw std::domain_error("2F1 lower parameter hits zero");
    term *= Rational(a + n) * Rational(b + n) / (Rational(c + n) * Rational(n + 1));
    term *= z;
    sum += term;
  }
  return sum;
}

Rational psi_k_hypergeometric(int m, int j, int k) {
  check_level(m, j);
  check_level(m, k);
  if (j + k - m <= 0) {
    const int sign = (j * (k + 1)) % 2 ? -1 : 1;
    return sign * Rational(binomial(m - k, j)) * hypergeometric_2f1_terminating(-j, -k, 1 - j - k + m, Rational(-1));
  }
  const int sign = (k * (j + 1) + m) % 2 ? -1 : 1;
  return sign * Rational(binomial(k, m - j)) *
         hypergeometric_2f1_terminating(j - m, k - m, 1 + j + k - m, Rational(-1));
}

Verdict make_verdict(std::string identity, const Multivector& lhs, const Multivector& rhs) {
  return Verdict{std::move(identity), lhs == rhs, format(lhs), format(rhs)};
}

Verdict make_verdict(std::string identity, const PolyField& lhs, const PolyField& rhs) {
  return Verdict{std::move(identity), lhs == rhs, format(lhs), format(rhs)};
}

Verdict check_recursion(const StructuralSet& phi, const StructuralSet& psi, int k, const Multivector& a) {
  const int m = phi.dimension();
  if (k < 1 || k > m - 1) throw std::out_of_range("recursion level " + std::to_string(k) + " outside 1.." + std::to_string(m - 1));
  const Multivector lhs = Rational(m - k + 1) * apply_psi_k(phi, psi, k - 1, a) + Rational(k + 1) * apply_psi_k(phi, psi, k + 1, a);
  const Multivector rhs = apply_psi_k(phi, psi, 1, apply_psi_k(phi, psi, k, a));
  return make_verdict("recursion k=" + std::to_string(k), lhs, rhs);
}

Verdict check_corollary_parity(const StructuralSet& phi, const Multivector& a, int j, int k) {
  const int m = phi.dimension();
  check_level(m, j);
  if (m % 2 == 1) {
    return make_verdict("parity m odd j=" + std::to_string(j), apply_psi_k(phi, phi, j, a),
                        -apply_psi_k(phi, phi, m - j, a));
  }
  const Multivector ak = grade_project(a, k);
  Multivector rhs = apply_psi_k(phi, phi, m - j, ak);
  if (k % 2 == 1) rhs = -rhs;
  return make_verdict("parity m even j=" + std::to_string(j) + " k=" + std::to_string(k), apply_psi_k(phi, phi, j, ak), rhs);
}

std::vector<Verdict> check_plus_minus_closed_forms(const StructuralSet& phi, const Multivector& a) {
  const int m = phi.dimension();
  const Multivector scale = pow2(m, m - 1);
  const Multivector lo = grade_project(a, 0), hi = grade_project(a, m);
  const Multivector plus = apply_psi_plus(phi, phi, a);
  const Multivector minus = apply_psi_minus(phi, phi, a);
  std::vector<Verdict> out;
  out.push_back(make_verdict("Psi_+ closed form", plus, scale * (lo + hi)));
  if (m % 2 == 1) out.push_back(make_verdict("Psi_- closed form (m odd)", minus, -(scale * (lo + hi))));
  else out.push_back(make_verdict("Psi_- closed form (m even)", minus, scale * (hi - lo)));
  return out;
}

Verdict check_plus_minus_conjugation(const StructuralSet& phi, const Multivector& a, int j) {
  const int m = phi.dimension();
  if (j < 1 || j > m) throw std::out_of_range("index out of range");
  return make_verdict("phi^j Psi_+ phi^j = Psi_- j=" + std::to_string(j), phi[j - 1] * apply_psi_plus(phi, phi, a) * phi[j - 1],
                      apply_psi_minus(phi, phi, a));
}

Verdict check_closed_form(const StructuralSet& phi, int j, int k) {
  const int m = phi.dimension();
  const Rational lambda = psi_k_closed_form(m, j, k);
  Multivector lhs(m), rhs(m);
  Verdict v{"closed form m=" + std::to_string(m) + " j=" + std::to_string(j) + " k=" + std::to_string(k), true, "", ""};
  for (Blade b : blade_basis(m)) {
    if (b.grade() != k) continue;
    const Multivector blade(m, b);
    const Multivector got = apply_psi_k(phi, phi, j, blade);
    const Multivector want = lambda * blade;
    if (!(got == want)) {
      v.holds = false;
      v.lhs = format(got);
      v.rhs = format(want);
      return v;
    }
  }
  v.lhs = v.rhs = to_string(lambda);
  return v;
}

PolyField apply_psi_k(const StructuralSet& phi, const StructuralSet& psi, int k, const PolyField& f) {
  return LinearMap(PsiOperator::level_k(phi, psi, k))(f);
}

PolyField apply_psi_plus(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  return LinearMap(PsiOperator::plus(phi, psi))(f);
}

PolyField apply_psi_minus(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  return LinearMap(PsiOperator::minus(phi, psi))(f);
}

std::vector<Verdict> check_commutation(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f,
                                       CommutationIdentity which) {
  const LinearMap psi1(PsiOperator::level_k(phi, psi, 1));
  std::vector<Verdict> out;
  switch (which) {
    case CommutationIdentity::First: {
      out.push_back(make_verdict("commutation (i) left", dirac_left(phi, psi1(f)),
                                 Rational(-2) * dirac_right(f, psi) - psi1(dirac_left(phi, f))));
      out.push_back(make_verdict("commutation (i) right", dirac_right(psi1(f), psi),
                                 Rational(-2) * dirac_left(phi, f) - psi1(dirac_right(f, psi))));
      break;
    }
    case CommutationIdentity::Second: {
      out.push_back(make_verdict("commutation (ii) sandwich", sandwich(phi, psi1(f), psi), psi1(sandwich(phi, f, psi))));
      out.push_back(make_verdict("commutation (ii) laplacian", laplacian(psi1(f)), psi1(laplacian(f))));
      break;
    }
    case CommutationIdentity::Third: {
      const PolyField dpsi = dirac_left(psi, f);
      out.push_back(make_verdict("commutation (iii)", psi1(dirac_left_left(phi, psi, f)),
                                 Rational(-2) * dirac_right(dpsi, psi) - dirac_left(phi, psi1(dpsi))));
      break;
    }
  }
  return out;
}

std::vector<Verdict> check_sandwich_plus_minus(const StructuralSet& phi, const StructuralSet& psi, const PolyField& f) {
  const LinearMap plus(PsiOperator::plus(phi, psi));
  const LinearMap minus(PsiOperator::minus(phi, psi));
  const PolyField lap = laplacian(f);
  return {make_verdict("sandwich Psi_+ = Psi_- lap", sandwich(phi, plus(f), psi), minus(lap)),
          make_verdict("sandwich Psi_- = Psi_+ lap", sandwich(phi, minus(f), psi), plus(lap))};
}

StructuralSet planar_partner(const StructuralSet& psi, PlanarForm form, const Rational& c1, const Rational& c2) {
  if (psi.dimension() != 2) throw DimensionError("planar case needs m = 2");
  const TransitionMatrix c = form == PlanarForm::Rotation ? TransitionMatrix(2, {c1, -c2, c2, c1})
                                                          : TransitionMatrix(2, {c1, c2, c2, -c1});
  std::vector<Multivector> vs;
  for (int j = 0; j < 2; ++j) vs.push_back(c(0, j) * psi[0] + c(1, j) * psi[1]);
  return StructuralSet::validate(vs);
}

std::pair<PolyField, PolyField> planar_plus_minus(const StructuralSet& psi, PlanarForm form, const Rational& c1,
                                                  const Rational& c2, const PolyField& f) {
  if (psi.dimension() != 2 || f.dimension() != 2) throw DimensionError("planar case needs m = 2");
  const Multivector one(2, Rational(1));
  const Multivector& p1 = psi[0];
  const Multivector& p2 = psi[1];
  const Multivector p12 = p1 * p2;
  PolyField plus(2), minus(2);
  for (const auto& [alpha, value] : f.terms()) {
    // Coordinates follow blade_basis(2): 1, e1, e2, e12.
    const auto coords = coordinates_in(psi, value);
    const Rational &f0 = coords[0], &f1 = coords[1], &f2 = coords[2], &f12 = coords[3];
    if (form == PlanarForm::Rotation) {
      plus.add_term(alpha, Rational(2) * f0 * one + Rational(2) * f12 * p12);
      minus.add_term(alpha, Rational(-2) * (c1 * f0 + c2 * f12) * one + Rational(2) * (c1 * f12 - c2 * f0) * p12);
    } else {
      plus.add_term(alpha, Rational(2) * f1 * p1 + Rational(2) * f2 * p2);
      minus.add_term(alpha, Rational(-2) * (c1 * f1 + c2 * f2) * p1 + Rational(2) * (c1 * f2 - c2 * f1) * p2);
    }
  }
  return {plus, minus};
}

std::vector<Verdict> check_planar_formulas(const StructuralSet& psi, PlanarForm form, const Rational& c1,
                                           const Rational& c2, const PolyField& f) {
  const StructuralSet phi = planar_partner(psi, form, c1, c2);
  const auto [plus, minus] = planar_plus_minus(psi, form, c1, c2, f);
  const std::string tag = form == PlanarForm::Rotation ? "rotation" : "reflection";
  return {make_verdict("planar " + tag + " Psi_+", apply_psi_plus(phi, psi, f), plus),
          make_verdict("planar " + tag + " Psi_-", apply_psi_minus(phi, psi, f), minus)};
}

}  // namespace clifan
