#pragma once

#include "qpg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qpg {

using Monomial = std::vector<std::uint32_t>;

std::uint32_t monomial_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& a, const Monomial& b);
bool monomials_coprime(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q. Variable names live in the ring.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(std::size_t nvars, Monomial m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::uint32_t total_degree() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t i) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Replace variable i by images[i]; all images share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // Embed into a ring with `total` variables, shifting indices by `offset`.
  Polynomial embed(std::size_t total, std::size_t offset) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace qpg
