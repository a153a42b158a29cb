#include "generators.hpp"

namespace qpg::testing {

std::uint64_t Gen::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Gen::between(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

Rational Gen::rational(long num_bound, long den_bound) {
  Rational q(between(-num_bound, num_bound), between(1, den_bound));
  q.canonicalize();
  return q;
}

Polynomial Gen::polynomial(std::size_t nvars, std::size_t max_terms, std::uint32_t max_degree) {
  Polynomial p(nvars);
  std::size_t n = static_cast<std::size_t>(between(0, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < n; ++t) {
    Monomial m(nvars, 0);
    std::uint32_t budget = static_cast<std::uint32_t>(between(0, max_degree));
    for (std::uint32_t d = 0; d < budget && nvars > 0; ++d) ++m[static_cast<std::size_t>(between(0, static_cast<long>(nvars) - 1))];
    p.add_term(m, rational());
  }
  return p;
}

Vector Gen::vector(std::size_t dim) {
  Vector v(dim);
  for (auto& x : v) x = rational();
  return v;
}

MultivectorField Gen::multivector(const RingPtr& ring, std::size_t degree, std::size_t max_terms,
                                  std::uint32_t max_degree) {
  MultivectorField X(ring);
  const std::size_t n = ring->nvars();
  std::size_t terms = static_cast<std::size_t>(between(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    MultivectorField::Index idx;
    for (std::size_t k = 0; k < degree; ++k) idx.push_back(static_cast<std::uint32_t>(between(0, static_cast<long>(n) - 1)));
    X.add_term(idx, polynomial(n, 2, max_degree));
  }
  return X;
}

ExteriorElement Gen::exterior(std::size_t dim, std::size_t degree, std::size_t max_terms) {
  ExteriorElement x(dim);
  std::size_t terms = static_cast<std::size_t>(between(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    ExteriorElement::Index idx;
    for (std::size_t k = 0; k < degree; ++k) idx.push_back(static_cast<std::uint32_t>(between(0, static_cast<long>(dim) - 1)));
    x.add_wedge(idx, rational());
  }
  return x;
}

std::vector<Rational> Gen::point(std::size_t n) {
  std::vector<Rational> p(n);
  for (auto& x : p) x = rational(7, 4);
  return p;
}

}  // namespace qpg::testing
