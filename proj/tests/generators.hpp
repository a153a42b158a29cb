#pragma once

#include "qpg/chart.hpp"
#include "qpg/lie.hpp"
#include "qpg/polynomial.hpp"

#include <cstdint>

namespace qpg::testing {

// Small deterministic generators for property tests (splitmix64 stream).
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  long between(long lo, long hi);
  Rational rational(long num_bound = 5, long den_bound = 3);
  // Sum of up to max_terms monomials of total degree <= max_degree.
  Polynomial polynomial(std::size_t nvars, std::size_t max_terms = 4, std::uint32_t max_degree = 2);
  Vector vector(std::size_t dim);
  MultivectorField multivector(const RingPtr& ring, std::size_t degree, std::size_t max_terms = 3,
                               std::uint32_t max_degree = 2);
  ExteriorElement exterior(std::size_t dim, std::size_t degree, std::size_t max_terms = 3);
  std::vector<Rational> point(std::size_t n);

 private:
  std::uint64_t state_;
};

constexpr int kTrials = 25;

}  // namespace qpg::testing
