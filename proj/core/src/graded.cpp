#include "qpg/graded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qpg {

namespace {

void check_same(const GradedElement& a, const GradedElement& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("graded elements from different algebras");
}

// Product of two canonical words; returns false if the product vanishes.
bool multiply_words(const GradedAlgebra& alg, const GradedElement::Word& a, const GradedElement::Word& b,
                    GradedElement::Word& out, int& sign) {
  sign = 1;
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t odd_in_a_greater = 0;
  // For each odd q in b, count odd p in a with p > q.
  std::vector<std::uint32_t> odd_a;
  for (auto p : a)
    if (alg.is_odd(p)) odd_a.push_back(p);
  for (auto q : b) {
    if (!alg.is_odd(q)) continue;
    auto it = std::upper_bound(odd_a.begin(), odd_a.end(), q);
    if (it != odd_a.begin() && *(it - 1) == q) return false;
    odd_in_a_greater += static_cast<std::size_t>(odd_a.end() - it);
  }
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (odd_in_a_greater % 2) sign = -1;
  return true;
}

}  // namespace

void GradedElement::add_term(const Word& w, const Polynomial& c) {
  if (!alg_) throw std::logic_error("graded element without algebra");
  if (c.is_zero()) return;
  Polynomial r = alg_->ring().reduce(c);
  if (r.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.is_zero()) return *this;
  check_same(*this, o);
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  if (!alg_) alg_ = o.alg_;
  if (o.is_zero()) return *this;
  check_same(*this, o);
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  const GradedAlgebra* alg = a.alg_ ? a.alg_ : b.alg_;
  GradedElement r(alg);
  if (a.is_zero() || b.is_zero()) return r;
  check_same(a, b);
  GradedElement::Word w;
  int sign = 1;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      if (!multiply_words(*alg, wa, wb, w, sign)) continue;
      Polynomial c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(w, c);
    }
  }
  return r;
}

GradedElement operator*(GradedElement a, const Rational& c) {
  if (is_zero(c)) {
    a.terms_.clear();
    return a;
  }
  for (auto& [w, p] : a.terms_) p *= c;
  return a;
}

GradedElement GradedElement::operator-() const { return *this * Rational(-1); }

GradedElement GradedElement::times(const Polynomial& c) const {
  GradedElement r(alg_);
  for (const auto& [w, p] : terms_) r.add_term(w, p * c);
  return r;
}

std::vector<int> GradedElement::degrees() const {
  std::set<int> ds;
  for (const auto& [w, c] : terms_) ds.insert(alg_->word_degree(w));
  return {ds.begin(), ds.end()};
}

std::map<int, GradedElement> GradedElement::homogeneous_components() const {
  std::map<int, GradedElement> out;
  for (const auto& [w, c] : terms_) {
    int d = alg_->word_degree(w);
    auto it = out.try_emplace(d, GradedElement(alg_)).first;
    it->second.terms_.emplace(w, c);
  }
  return out;
}

Polynomial GradedElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  if (it != terms_.end()) return it->second;
  return alg_ ? alg_->ring().zero() : Polynomial();
}

std::string GradedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string word;
    for (auto g : w) {
      if (!word.empty()) word += "*";
      word += alg_->generator(g).name;
    }
    std::string coef = alg_->ring().print(c);
    if (!first) out += " + ";
    first = false;
    if (word.empty()) {
      out += c.size() > 1 ? "(" + coef + ")" : coef;
    } else if (coef == "1") {
      out += word;
    } else {
      out += (c.size() > 1 || coef.find('/') != std::string::npos ? "(" + coef + ")" : coef) + "*" + word;
    }
  }
  return out;
}

GradedAlgebra::GradedAlgebra(std::vector<GradedGenerator> gens, std::vector<Polynomial> relations,
                             MonomialOrder order)
    : gens_(std::move(gens)) {
  std::vector<std::string> vars;
  var_of_gen_.assign(gens_.size(), -1);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree == 0) {
      var_of_gen_[i] = static_cast<int>(vars.size());
      gen_of_var_.push_back(i);
      vars.push_back(gens_[i].name);
    }
  }
  std::set<std::string> names;
  for (const auto& g : gens_)
    if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator " + g.name);
  ring_ = CoordinateRing::make(std::move(vars), std::move(relations), std::move(order));
  table_.assign(gens_.size() * gens_.size(), GradedElement(this));
  set_.assign(gens_.size() * gens_.size(), false);
}

GradedAlgebraPtr GradedAlgebra::make(std::vector<GradedGenerator> gens, std::vector<Polynomial> relations,
                                     MonomialOrder order) {
  return std::make_shared<GradedAlgebra>(std::move(gens), std::move(relations), std::move(order));
}

int GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::size_t GradedAlgebra::require(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw std::invalid_argument("unknown generator " + name);
  return static_cast<std::size_t>(i);
}

GradedElement GradedAlgebra::scalar(const Polynomial& p) const {
  GradedElement e(this);
  e.add_term({}, p);
  return e;
}

GradedElement GradedAlgebra::gen(std::size_t i) const {
  if (i >= gens_.size()) throw std::out_of_range("generator index");
  if (var_of_gen_[i] >= 0) return scalar(ring_->var(static_cast<std::size_t>(var_of_gen_[i])));
  GradedElement e(this);
  e.add_term({static_cast<std::uint32_t>(i)}, ring_->one());
  return e;
}

int GradedAlgebra::word_degree(const GradedElement::Word& w) const {
  int d = 0;
  for (auto g : w) d += gens_[g].degree;
  return d;
}

void GradedAlgebra::set_bracket(std::size_t i, std::size_t j, const GradedElement& value) {
  if (!value.is_zero() && value.algebra() != this) throw std::invalid_argument("bracket value from another algebra");
  GradedElement v = value;
  if (v.is_zero()) v = zero();
  table_[i * ngens() + j] = v;
  set_[i * ngens() + j] = true;
  int e = (degree(i) - 1) * (degree(j) - 1);
  GradedElement other = (e % 2 == 0) ? -v : v;
  table_[j * ngens() + i] = other;
  set_[j * ngens() + i] = true;
}

GradedElement GradedAlgebra::parse(std::string_view text) const {
  ExpressionParser<GradedElement>::Hooks hooks{
      [this](const Rational& q) { return constant(q); },
      [this](const std::string& name, std::size_t pos) {
        int i = index_of(name);
        if (i < 0) throw ParseError("unknown identifier '" + name + "'", pos);
        return gen(static_cast<std::size_t>(i));
      },
      [this](const GradedElement& x, unsigned e) {
        GradedElement r = one();
        for (unsigned k = 0; k < e; ++k) r = r * x;
        return r;
      }};
  return ExpressionParser<GradedElement>(text, std::move(hooks)).parse();
}

GradedElement apply_derivation(const DerivationRules& rules, int sign_degree, const GradedElement& x) {
  const GradedAlgebra* alg = x.algebra();
  GradedElement result(alg);
  if (x.is_zero()) return result;
  if (rules.size() != alg->ngens()) throw std::invalid_argument("derivation rules arity mismatch");
  auto rule = [&](std::size_t g) -> const GradedElement& {
    if (!rules[g]) throw std::invalid_argument("missing derivation rule for generator " + alg->generator(g).name);
    return *rules[g];
  };
  const CoordinateRing& ring = alg->ring();
  for (const auto& [w, c] : x.terms()) {
    GradedElement word_elt(alg);
    word_elt.add_term(w, ring.one());
    // D(c) * w
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
      Polynomial dc = c.derivative(v);
      if (dc.is_zero()) continue;
      std::size_t g = alg->gen_of_var(v);
      const GradedElement& dg = rule(g);
      if (dg.is_zero()) continue;
      result += dg.times(dc) * word_elt;
    }
    // c * D(w)
    int prefix_degree = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const GradedElement& dy = rule(w[j]);
      if (!dy.is_zero()) {
        GradedElement prefix(alg), suffix(alg);
        prefix.add_term(GradedElement::Word(w.begin(), w.begin() + static_cast<long>(j)), ring.one());
        suffix.add_term(GradedElement::Word(w.begin() + static_cast<long>(j) + 1, w.end()), ring.one());
        GradedElement term = prefix * dy * suffix;
        bool neg = ((sign_degree * prefix_degree) % 2) != 0;
        term = term.times(c);
        if (neg) result -= term;
        else result += term;
      }
      prefix_degree += alg->degree(w[j]);
    }
  }
  return result;
}

GradedElement bracket(const GradedElement& a, const GradedElement& b) {
  const GradedAlgebra* alg = a.algebra() ? a.algebra() : b.algebra();
  GradedElement result(alg);
  if (a.is_zero() || b.is_zero()) return result;
  if (a.algebra() != b.algebra()) throw std::invalid_argument("bracket of elements from different algebras");

  // Generators that occur in b.
  std::vector<bool> used(alg->ngens(), false);
  for (const auto& [w, c] : b.terms()) {
    for (auto g : w) used[g] = true;
    for (const auto& [m, coef] : c.terms())
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) used[alg->gen_of_var(v)] = true;
  }
  for (const auto& [dx, x] : a.homogeneous_components()) {
    DerivationRules rules_x(alg->ngens());
    for (std::size_t g = 0; g < alg->ngens(); ++g) {
      if (!used[g]) continue;
      DerivationRules row(alg->ngens());
      for (std::size_t h = 0; h < alg->ngens(); ++h) row[h] = alg->table(g, h);
      GradedElement gx = apply_derivation(row, alg->degree(g) - 1, x);
      int e = (dx - 1) * (alg->degree(g) - 1);
      rules_x[g] = (e % 2 == 0) ? -gx : gx;
    }
    result += apply_derivation(rules_x, dx - 1, b);
  }
  return result;
}

GradedElement pullback(const std::vector<GradedElement>& images, const GradedElement& x,
                       const GradedAlgebra& target) {
  const GradedAlgebra* src = x.algebra();
  GradedElement result(&target);
  if (x.is_zero()) return result;
  if (images.size() != src->ngens()) throw std::invalid_argument("pullback arity mismatch");
  std::vector<Polynomial> coord_images;
  for (std::size_t v = 0; v < src->ring().nvars(); ++v) {
    const GradedElement& img = images[src->gen_of_var(v)];
    if (img.is_zero()) {
      coord_images.push_back(target.ring().zero());
      continue;
    }
    if (img.terms().size() != 1 || !img.terms().begin()->first.empty())
      throw std::invalid_argument("degree-0 generator must map to a scalar");
    coord_images.push_back(img.terms().begin()->second);
  }
  for (const auto& [w, c] : x.terms()) {
    Polynomial cc = coord_images.empty() ? Polynomial::constant(target.ring().nvars(), c.constant_term())
                                         : c.substitute(coord_images);
    GradedElement prod = target.scalar(cc);
    for (auto g : w) {
      prod = prod * images[g];
      if (prod.is_zero()) break;
    }
    result += prod;
  }
  return result;
}

GradedAlgebraPtr tensor_product(const std::vector<const GradedAlgebra*>& factors,
                                const std::vector<std::string>& suffixes) {
  std::vector<GradedGenerator> gens;
  std::size_t total_vars = 0;
  for (const auto* f : factors) total_vars += f->ring().nvars();
  std::vector<Polynomial> relations;
  std::size_t var_offset = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (const auto& g : factors[k]->generators()) gens.push_back({g.name + suffixes.at(k), g.degree});
    for (const auto& r : factors[k]->ring().ideal_generators()) relations.push_back(r.embed(total_vars, var_offset));
    var_offset += factors[k]->ring().nvars();
  }
  auto product = GradedAlgebra::make(std::move(gens), std::move(relations));
  std::size_t offset = 0;
  for (const auto* f : factors) {
    auto inc = factor_inclusion(*f, *product, offset);
    for (std::size_t i = 0; i < f->ngens(); ++i)
      for (std::size_t j = i; j < f->ngens(); ++j)
        if (f->table_entry_set(i, j) || !f->table(i, j).is_zero())
          product->set_bracket(offset + i, offset + j, pullback(inc, f->table(i, j), *product));
    offset += f->ngens();
  }
  return product;
}

std::vector<GradedElement> factor_inclusion(const GradedAlgebra& factor, const GradedAlgebra& product,
                                            std::size_t offset) {
  std::vector<GradedElement> inc;
  for (std::size_t i = 0; i < factor.ngens(); ++i) inc.push_back(product.gen(offset + i));
  return inc;
}

}  // namespace qpg
