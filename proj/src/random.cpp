#include "clifan/random.hpp"

#include <numeric>

namespace clifan {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::rational(long max_num, long max_den) {
  Rational r(uniform(-max_num, max_num), uniform(1, max_den));
  r.canonicalize();
  return r;
}

Multivector Rng::multivector(int m, double density) {
  Multivector out(m);
  const long threshold = static_cast<long>(density * 1000);
  for (Blade b : blade_basis(m))
    if (uniform(0, 999) < threshold) out.add_term(b, rational());
  return out;
}

PolyField Rng::field(int m, int max_degree, int terms) {
  PolyField out(m);
  for (int t = 0; t < terms; ++t) {
    MultiIndex alpha = MultiIndex::zero(m);
    const long deg = uniform(0, max_degree);
    for (long d = 0; d < deg; ++d) ++alpha.exponents[static_cast<std::size_t>(uniform(0, m - 1))];
    out.add_term(alpha, multivector(m, 0.3));
  }
  return out;
}

PolyField Rng::homogeneous_field(int m, int degree, int terms) {
  PolyField out(m);
  for (int t = 0; t < terms; ++t) {
    MultiIndex alpha = MultiIndex::zero(m);
    for (int d = 0; d < degree; ++d) ++alpha.exponents[static_cast<std::size_t>(uniform(0, m - 1))];
    out.add_term(alpha, multivector(m, 0.3));
  }
  return out;
}

StructuralSet Rng::signed_permutation(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  for (int i = m - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
  for (int& v : p)
    if (coin()) v = -v;
  return StructuralSet::signed_permutation(p);
}

StructuralSet Rng::rational_set(int m) {
  const StructuralSet base = signed_permutation(m);
  std::vector<std::vector<int>> normals;
  const long count = uniform(1, 2);
  for (long r = 0; r < count; ++r) {
    std::vector<int> n(static_cast<std::size_t>(m));
    bool nonzero = false;
    while (!nonzero) {
      for (int& v : n) {
        v = static_cast<int>(uniform(-2, 2));
        nonzero = nonzero || v != 0;
      }
    }
    normals.push_back(n);
  }
  return StructuralSet::from_matrix(householder_product(m, normals) * base.matrix());
}

}  // namespace clifan
