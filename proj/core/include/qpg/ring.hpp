#pragma once

#include "qpg/polynomial.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpg {

struct MonomialOrder {
  enum class Kind { grevlex, block };
  Kind kind = Kind::grevlex;
  // For block orders: sizes of consecutive variable blocks, each compared by grevlex.
  std::vector<std::size_t> blocks;

  // True iff a > b.
  bool greater(const Monomial& a, const Monomial& b) const;
  std::string tag() const;
};

class IdealTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Q[vars] / ideal, with a lazily computed reduced Groebner basis.
class CoordinateRing {
 public:
  CoordinateRing(std::vector<std::string> vars, std::vector<Polynomial> ideal = {},
                 MonomialOrder order = {});

  static std::shared_ptr<const CoordinateRing> make(std::vector<std::string> vars,
                                                    std::vector<Polynomial> ideal = {},
                                                    MonomialOrder order = {});

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Polynomial>& ideal_generators() const { return ideal_; }
  const MonomialOrder& order() const { return order_; }
  bool has_ideal() const { return !ideal_.empty(); }

  // Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  const std::vector<Polynomial>& groebner_basis() const;
  Polynomial reduce(const Polynomial& p) const;
  bool ideal_member(const Polynomial& p) const;
  bool contains_point(const std::vector<Rational>& point) const;

  Polynomial zero() const { return Polynomial(nvars()); }
  Polynomial one() const { return Polynomial::constant(nvars(), 1); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), c); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(nvars(), i); }
  Polynomial var(const std::string& name) const;

  std::string print(const Polynomial& p) const { return p.to_string(vars_); }

  // Hard cap on S-polynomial reductions in Buchberger's algorithm.
  static constexpr std::size_t kBuchbergerStepCap = 20000;

 private:
  void compute_basis() const;

  std::vector<std::string> vars_;
  std::vector<Polynomial> ideal_;
  MonomialOrder order_;
  mutable std::once_flag once_;
  mutable std::vector<Polynomial> basis_;
};

using RingPtr = std::shared_ptr<const CoordinateRing>;

// Product of rings: variables concatenated, ideals embedded.
RingPtr product_ring(const std::vector<RingPtr>& factors, const std::vector<std::string>& suffixes);

// Leading monomial and coefficient under an order (p nonzero).
const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& order);

// Groebner basis computation, exposed for tests.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   std::size_t step_cap = CoordinateRing::kBuchbergerStepCap);
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

}  // namespace qpg
