#include "qpg/ring.hpp"

#include <algorithm>
#include <map>

namespace qpg {

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

struct OrderCmp {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using OrderedTerms = std::map<Monomial, Rational, OrderCmp>;

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  const Monomial& lm = leading_monomial(p, order);
  Rational lc = p.terms().at(lm);
  if (lc == 1) return p;
  return p * Rational(1 / lc);
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::grevlex || blocks.empty()) return grevlex_greater(a, b, 0, a.size());
  std::size_t lo = 0;
  for (std::size_t size : blocks) {
    std::size_t hi = std::min(a.size(), lo + size);
    if (grevlex_greater(a, b, lo, hi)) return true;
    if (grevlex_greater(b, a, lo, hi)) return false;
    lo = hi;
  }
  if (lo < a.size()) return grevlex_greater(a, b, lo, a.size());
  return false;
}

std::string MonomialOrder::tag() const {
  if (kind == Kind::grevlex) return "grevlex";
  std::string s = "block(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(blocks[i]);
  }
  return s + ")";
}

const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (!best || order.greater(m, *best)) best = &m;
  }
  if (!best) throw std::invalid_argument("leading monomial of zero polynomial");
  return *best;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  if (basis.empty() || p.is_zero()) return p;
  std::vector<const Monomial*> lms;
  std::vector<Rational> lcs;
  lms.reserve(basis.size());
  for (const auto& g : basis) {
    lms.push_back(&leading_monomial(g, order));
    lcs.push_back(g.terms().at(*lms.back()));
  }
  auto divisor = [&](const Monomial& m) -> int {
    for (std::size_t k = 0; k < lms.size(); ++k)
      if (monomial_divides(*lms[k], m)) return static_cast<int>(k);
    return -1;
  };
  bool any = false;
  for (const auto& [m, c] : p.terms()) {
    if (divisor(m) >= 0) {
      any = true;
      break;
    }
  }
  if (!any) return p;

  OrderedTerms work(OrderCmp{&order});
  for (const auto& [m, c] : p.terms()) work.emplace(m, c);
  Polynomial rem(p.nvars());
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Rational c = it->second;
    int k = divisor(m);
    if (k < 0) {
      rem.add_term(m, c);
      work.erase(it);
      continue;
    }
    Monomial q = monomial_quotient(m, *lms[k]);
    Rational f = c / lcs[k];
    Monomial t(m.size());
    for (const auto& [gm, gc] : basis[k].terms()) {
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = gm[i] + q[i];
      Rational delta = -f * gc;
      auto [wit, inserted] = work.try_emplace(t, delta);
      if (!inserted) {
        wit->second += delta;
        if (is_zero(wit->second)) work.erase(wit);
      }
    }
  }
  return rem;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                   std::size_t step_cap) {
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    Polynomial r = normal_form(p, g, order);
    if (!r.is_zero()) g.push_back(make_monic(r, order));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  std::size_t steps = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const Monomial& li = leading_monomial(g[i], order);
    const Monomial& lj = leading_monomial(g[j], order);
    if (monomials_coprime(li, lj)) continue;
    Monomial l = monomial_lcm(li, lj);
    // Chain criterion: skip if some other leading monomial divides the lcm and
    // both companion pairs are already resolved.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!monomial_divides(leading_monomial(g[k], order), l)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        return std::find(pairs.begin(), pairs.end(), key) != pairs.end();
      };
      if (!pending(i, k) && !pending(j, k)) chain = true;
    }
    if (chain) continue;
    if (++steps > step_cap) throw IdealTooLarge("ideal too large: Buchberger step cap exceeded");
    Polynomial s = g[i].mul_monomial(monomial_quotient(l, li), Rational(1) / g[i].terms().at(li)) -
                   g[j].mul_monomial(monomial_quotient(l, lj), Rational(1) / g[j].terms().at(lj));
    Polynomial r = normal_form(s, g, order);
    if (r.is_zero()) continue;
    g.push_back(make_monic(r, order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const Monomial& la = leading_monomial(g[a], order);
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& lb = leading_monomial(g[b], order);
      if (monomial_divides(lb, la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (a != b) others.push_back(minimal[b]);
    reduced.push_back(make_monic(normal_form(minimal[a], others, order), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.greater(leading_monomial(y, order), leading_monomial(x, order));
  });
  return reduced;
}

CoordinateRing::CoordinateRing(std::vector<std::string> vars, std::vector<Polynomial> ideal,
                               MonomialOrder order)
    : vars_(std::move(vars)), ideal_(std::move(ideal)), order_(std::move(order)) {
  for (const auto& p : ideal_) {
    if (p.nvars() != vars_.size()) throw std::invalid_argument("ideal generator variable mismatch");
  }
  std::vector<std::string> sorted = vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate variable name");
}

RingPtr CoordinateRing::make(std::vector<std::string> vars, std::vector<Polynomial> ideal,
                             MonomialOrder order) {
  return std::make_shared<const CoordinateRing>(std::move(vars), std::move(ideal), std::move(order));
}

int CoordinateRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

Polynomial CoordinateRing::var(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable " + name);
  return var(static_cast<std::size_t>(i));
}

void CoordinateRing::compute_basis() const {
  std::call_once(once_, [this] { basis_ = buchberger(ideal_, order_); });
}

const std::vector<Polynomial>& CoordinateRing::groebner_basis() const {
  compute_basis();
  return basis_;
}

Polynomial CoordinateRing::reduce(const Polynomial& p) const {
  if (p.nvars() != nvars()) throw std::invalid_argument("polynomial does not live in this ring");
  if (ideal_.empty()) return p;
  return normal_form(p, groebner_basis(), order_);
}

bool CoordinateRing::ideal_member(const Polynomial& p) const { return reduce(p).is_zero(); }

bool CoordinateRing::contains_point(const std::vector<Rational>& point) const {
  for (const auto& g : ideal_)
    if (!is_zero(g.evaluate(point))) return false;
  return true;
}

RingPtr product_ring(const std::vector<RingPtr>& factors, const std::vector<std::string>& suffixes) {
  std::size_t total = 0;
  for (const auto& f : factors) total += f->nvars();
  std::vector<std::string> vars;
  std::vector<Polynomial> ideal;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (const auto& v : factors[k]->vars()) vars.push_back(v + (k < suffixes.size() ? suffixes[k] : ""));
    for (const auto& g : factors[k]->ideal_generators()) ideal.push_back(g.embed(total, offset));
    offset += factors[k]->nvars();
  }
  return CoordinateRing::make(std::move(vars), std::move(ideal));
}

}  // namespace qpg
