#pragma once

#include "qpg/parser.hpp"
#include "qpg/ring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qpg {

struct GradedGenerator {
  std::string name;
  int degree = 0;
};

class GradedAlgebra;

// Element of a graded-commutative algebra: a sum of (coefficient) * (word), where
// the coefficient is a polynomial in the degree-0 generators and the word is a
// sorted list of nonzero-degree generator indices (odd ones at most once).
class GradedElement {
 public:
  using Word = std::vector<std::uint32_t>;
  using Terms = std::map<Word, Polynomial>;

  GradedElement() = default;
  explicit GradedElement(const GradedAlgebra* algebra) : alg_(algebra) {}

  const GradedAlgebra* algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * word; the word must already be canonical. Coefficients are reduced.
  void add_term(const Word& w, const Polynomial& c);

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator*(GradedElement a, const Rational& c);
  friend GradedElement operator*(const Rational& c, GradedElement a) { return std::move(a) * c; }
  GradedElement operator-() const;
  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.terms_ == b.terms_;
  }

  GradedElement times(const Polynomial& c) const;
  std::vector<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  std::map<int, GradedElement> homogeneous_components() const;
  // Coefficient of a word (zero polynomial if absent).
  Polynomial coefficient(const Word& w) const;

  std::string to_string() const;

 private:
  const GradedAlgebra* alg_ = nullptr;
  Terms terms_;
};

using DerivationRules = std::vector<std::optional<GradedElement>>;

// Finite presentation of a graded-commutative algebra with a degree -1 bracket.
// Degree-0 generators are the variables of the coordinate ring (with relations);
// the others are free graded-commutative generators.
class GradedAlgebra {
 public:
  GradedAlgebra(std::vector<GradedGenerator> gens, std::vector<Polynomial> relations = {},
                MonomialOrder order = {});
  GradedAlgebra(const GradedAlgebra&) = delete;
  GradedAlgebra& operator=(const GradedAlgebra&) = delete;

  static std::shared_ptr<GradedAlgebra> make(std::vector<GradedGenerator> gens,
                                             std::vector<Polynomial> relations = {},
                                             MonomialOrder order = {});

  std::size_t ngens() const { return gens_.size(); }
  const GradedGenerator& generator(std::size_t i) const { return gens_[i]; }
  const std::vector<GradedGenerator>& generators() const { return gens_; }
  int degree(std::size_t i) const { return gens_[i].degree; }
  bool is_odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }
  int index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;

  const CoordinateRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  // Ring variable of a degree-0 generator, or -1.
  int var_of(std::size_t gen) const { return var_of_gen_[gen]; }
  std::size_t gen_of_var(std::size_t var) const { return gen_of_var_[var]; }

  GradedElement zero() const { return GradedElement(this); }
  GradedElement one() const { return scalar(ring_->one()); }
  GradedElement constant(const Rational& c) const { return scalar(ring_->constant(c)); }
  GradedElement scalar(const Polynomial& p) const;
  GradedElement gen(std::size_t i) const;
  GradedElement gen(const std::string& name) const { return gen(require(name)); }
  int word_degree(const GradedElement::Word& w) const;

  // Bracket table on generators; setting (i,j) also sets (j,i) by graded antisymmetry.
  void set_bracket(std::size_t i, std::size_t j, const GradedElement& value);
  const GradedElement& table(std::size_t i, std::size_t j) const { return table_[i * ngens() + j]; }
  bool table_entry_set(std::size_t i, std::size_t j) const { return set_[i * ngens() + j]; }

  GradedElement parse(std::string_view text) const;

 private:
  std::vector<GradedGenerator> gens_;
  RingPtr ring_;
  std::vector<int> var_of_gen_;
  std::vector<std::size_t> gen_of_var_;
  std::vector<GradedElement> table_;
  std::vector<bool> set_;
};

using GradedAlgebraPtr = std::shared_ptr<GradedAlgebra>;

// Extends generator rules to the unique derivation of degree `sign_degree`
// (graded Leibniz with Koszul signs). Throws if a needed rule is missing.
GradedElement apply_derivation(const DerivationRules& rules, int sign_degree, const GradedElement& x);

// Degree -1 bracket extended from the table as a biderivation.
GradedElement bracket(const GradedElement& a, const GradedElement& b);

// Algebra morphism determined by generator images (degree-0 images must be
// scalars). `images` is indexed by generators of the source algebra.
GradedElement pullback(const std::vector<GradedElement>& images, const GradedElement& x,
                       const GradedAlgebra& target);

// Graded tensor product: generators of each factor are renamed with the
// suffix, brackets are block-diagonal.
GradedAlgebraPtr tensor_product(const std::vector<const GradedAlgebra*>& factors,
                                const std::vector<std::string>& suffixes);

// Image of the generators of factor k inside a tensor product.
std::vector<GradedElement> factor_inclusion(const GradedAlgebra& factor, const GradedAlgebra& product,
                                            std::size_t offset);

}  // namespace qpg
