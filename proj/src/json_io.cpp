#include "clifan/json_io.hpp"

#include <fstream>
#include <sstream>

#include "clifan/expr_parser.hpp"

namespace clifan {

json field_to_json(const PolyField& f) {
  json out = json::array();
  for (const auto& [alpha, v] : f.terms())
    for (const auto& [b, c] : v.terms())
      out.push_back({{"alpha", alpha.exponents}, {"blade", b.indices()}, {"coef", to_string(c)}});
  return out;
}

PolyField field_from_json(const json& j, int m) {
  if (!j.is_array()) throw std::invalid_argument("field JSON must be an array of terms");
  PolyField out(m);
  for (const auto& term : j) {
    const auto alpha = term.at("alpha").get<std::vector<int>>();
    if (static_cast<int>(alpha.size()) != m) throw DimensionError("alpha has wrong length");
    const Blade b = Blade::from_indices(term.at("blade").get<std::vector<int>>());
    out.add_term(MultiIndex(alpha), Multivector(m, b, parse_rational(term.at("coef").get<std::string>())));
  }
  return out;
}

json matrix_to_json(const TransitionMatrix& t) {
  json out = json::array();
  for (int i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < t.size(); ++j) row.push_back(to_string(t(i, j)));
    out.push_back(row);
  }
  return out;
}

TransitionMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a non-empty array of rows");
  const int m = static_cast<int>(j.size());
  TransitionMatrix t(m);
  for (int i = 0; i < m; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != m) throw std::invalid_argument("matrix JSON must be square");
    for (int c = 0; c < m; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      t(i, c) = cell.is_string() ? parse_rational(cell.get<std::string>()) : Rational(cell.get<long>());
    }
  }
  return t;
}

json verdict_to_json(const Verdict& v) {
  return {{"identity", v.identity}, {"holds", v.holds}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

json membership_to_json(const ClassMembership& c) {
  return {{"harmonic", c.harmonic},
          {"phiPsiHarmonic", c.phi_psi_harmonic},
          {"inframonogenic", c.inframonogenic},
          {"hypLeft", c.hyperholomorphic_left},
          {"hypRight", c.hyperholomorphic_right},
          {"region", c.region().name()}};
}

json dimensions_to_json(const ClassDimensions& d) {
  return {{"total", d.total},
          {"H", d.harmonic},
          {"Hpp", d.phi_psi_harmonic},
          {"I", d.inframonogenic},
          {"H∩Hpp", d.harmonic_phi_psi},
          {"H∩I", d.harmonic_infra},
          {"Hpp∩I", d.phi_psi_infra},
          {"triple", d.triple}};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

StructuralSet planar_from_cosine(const std::string& text, int m, bool rotation) {
  if (m != 2) throw std::invalid_argument("rot2/refl2 need m = 2");
  const Rational c1 = parse_rational(text);
  const auto c2 = rational_sqrt(1 - c1 * c1);
  if (!c2) throw std::invalid_argument("1 - c1^2 is not a rational square for c1 = " + text);
  return rotation ? StructuralSet::rotation2(c1, *c2) : StructuralSet::reflection2(c1, *c2);
}

}  // namespace

StructuralSet parse_set_spec(const std::string& spec, int m) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  StructuralSet out = [&] {
    if (kind == "standard") return StructuralSet::standard(m);
    if (kind == "reversed") return StructuralSet::reversed(m);
    if (kind == "signedperm") {
      std::vector<int> p;
      for (const auto& part : split(arg, ',')) p.push_back(std::stoi(part));
      return StructuralSet::signed_permutation(p);
    }
    if (kind == "rot2") return planar_from_cosine(arg, m, true);
    if (kind == "refl2") return planar_from_cosine(arg, m, false);
    if (kind == "matrix") {
      std::ifstream in(arg);
      if (!in) throw std::invalid_argument("cannot open matrix file '" + arg + "'");
      return StructuralSet::from_matrix(matrix_from_json(json::parse(in)));
    }
    if (kind == "vectors") {
      std::vector<Multivector> vs;
      for (const auto& part : split(arg, ';')) vs.push_back(parse_multivector(part, m));
      return StructuralSet::validate(vs);
    }
    throw std::invalid_argument("unknown structural set spec '" + spec + "'");
  }();
  if (out.dimension() != m)
    throw std::invalid_argument("structural set '" + spec + "' has dimension " + std::to_string(out.dimension()) +
                                ", expected " + std::to_string(m));
  return out;
}

}  // namespace clifan
