#include "clifan/multivector.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace clifan {

Blade Blade::from_indices(const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDimension) throw DimensionError("blade index out of range: " + std::to_string(i));
    const std::uint32_t bit = 1u << (i - 1);
    if (bits & bit) throw std::invalid_argument("repeated blade index: " + std::to_string(i));
    bits |= bit;
  }
  return Blade{bits};
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

bool BladeLess::operator()(Blade a, Blade b) const {
  const int ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  const std::uint32_t diff = a.mask ^ b.mask;
  if (diff == 0) return false;
  const std::uint32_t lowest = diff & (~diff + 1);
  return (a.mask & lowest) != 0;
}

int blade_product_sign(Blade a, Blade b) {
  // Moving each factor of b leftwards past the larger factors of a.
  int swaps = 0;
  std::uint32_t rest = b.mask;
  while (rest) {
    const int j = __builtin_ctz(rest);
    rest &= rest - 1;
    swaps += __builtin_popcount(a.mask >> (j + 1));
  }
  swaps += __builtin_popcount(a.mask & b.mask);
  return (swaps & 1) ? -1 : 1;
}

namespace {

struct BasisTables {
  std::array<std::vector<Blade>, kMaxDimension + 1> blades;
  std::array<std::vector<std::uint32_t>, kMaxDimension + 1> position;

  BasisTables() {
    for (int m = 0; m <= kMaxDimension; ++m) {
      auto& list = blades[m];
      list.reserve(std::size_t{1} << m);
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) list.emplace_back(mask);
      std::sort(list.begin(), list.end(), BladeLess{});
      position[m].resize(list.size());
      for (std::size_t i = 0; i < list.size(); ++i) position[m][list[i].mask] = static_cast<std::uint32_t>(i);
    }
  }
};

const BasisTables& tables() {
  static const BasisTables t;
  return t;
}

void check_dimension(int m) {
  if (m < 0 || m > kMaxDimension)
    throw DimensionError("dimension " + std::to_string(m) + " outside 0.." + std::to_string(kMaxDimension));
}

}  // namespace

const std::vector<Blade>& blade_basis(int m) {
  check_dimension(m);
  return tables().blades[m];
}

std::size_t blade_position(int m, Blade b) {
  check_dimension(m);
  return tables().position[m].at(b.mask);
}

Multivector::Multivector(int dimension) : dim_(dimension) { check_dimension(dimension); }

Multivector::Multivector(int dimension, const Rational& scalar) : Multivector(dimension) {
  add_term(Blade{}, scalar);
}

Multivector::Multivector(int dimension, Blade blade, const Rational& coef) : Multivector(dimension) {
  if (blade.mask >> dimension) throw DimensionError("blade " + format_blade(blade) + " exceeds dimension " + std::to_string(dimension));
  add_term(blade, coef);
}

Multivector Multivector::basis_vector(int dimension, int index) {
  if (index < 1 || index > dimension) throw DimensionError("basis index " + std::to_string(index) + " out of range");
  return Multivector(dimension, Blade{1u << (index - 1)});
}

Multivector Multivector::from_coefficients(int dimension, const std::vector<Rational>& coefs) {
  const auto& basis = blade_basis(dimension);
  if (coefs.size() != basis.size()) throw DimensionError("coefficient vector has wrong length");
  Multivector out(dimension);
  for (std::size_t i = 0; i < coefs.size(); ++i)
    if (!clifan::is_zero(coefs[i])) out.terms_.emplace(basis[i], coefs[i]);
  return out;
}

Rational Multivector::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> Multivector::coefficients() const {
  std::vector<Rational> out(std::size_t{1} << dim_);
  for (const auto& [b, c] : terms_) out[blade_position(dim_, b)] = c;
  return out;
}

void Multivector::add_term(Blade b, const Rational& c) {
  if (clifan::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (clifan::is_zero(it->second)) terms_.erase(it);
  }
}

void Multivector::check_same_dimension(const Multivector& other) const {
  if (dim_ != other.dim_)
    throw DimensionError("dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_same_dimension(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_same_dimension(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
  if (clifan::is_zero(s)) {
    terms_.clear();
  } else {
    for (auto& [b, c] : terms_) c *= s;
  }
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  a.check_same_dimension(b);
  Multivector out(a.dim_);
  Rational prod;
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) {
      prod = ca * cb;
      if (blade_product_sign(ba, bb) < 0) prod = -prod;
      out.add_term(Blade{ba.mask ^ bb.mask}, prod);
    }
  }
  return out;
}

bool Multivector::is_pure_grade(int k) const {
  return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first.grade() == k; });
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || k > a.dimension())
    throw std::out_of_range("grade " + std::to_string(k) + " outside 0.." + std::to_string(a.dimension()));
  Multivector out(a.dimension());
  for (const auto& [b, c] : a.terms())
    if (b.grade() == k) out.add_term(b, c);
  return out;
}

namespace {

template <typename SignFn>
Multivector map_by_grade(const Multivector& a, SignFn sign) {
  Multivector out(a.dimension());
  for (const auto& [b, c] : a.terms()) {
    const int s = sign(b.grade());
    if (s > 0) out.add_term(b, c);
    else if (s < 0) out.add_term(b, -c);
  }
  return out;
}

}  // namespace

Multivector even_part(const Multivector& a) {
  return map_by_grade(a, [](int k) { return k % 2 == 0 ? 1 : 0; });
}

Multivector odd_part(const Multivector& a) {
  return map_by_grade(a, [](int k) { return k % 2 == 1 ? 1 : 0; });
}

Multivector conjugate(const Multivector& a) {
  return map_by_grade(a, [](int k) { return ((k * (k + 1) / 2) % 2) ? -1 : 1; });
}

Multivector reverse(const Multivector& a) {
  return map_by_grade(a, [](int k) { return ((k * (k - 1) / 2) % 2) ? -1 : 1; });
}

std::string format_blade(Blade b) {
  std::ostringstream os;
  os << "e[";
  bool first = true;
  for (int i : b.indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << ']';
  return os.str();
}

std::string format(const Multivector& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    out += '*';
    out += format_blade(b);
  }
  return out;
}

}  // namespace clifan
