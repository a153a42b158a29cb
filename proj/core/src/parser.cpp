#include "qpg/parser.hpp"

namespace qpg {

Polynomial parse_polynomial_raw(std::string_view text, const CoordinateRing& ring) {
  std::size_t n = ring.nvars();
  ExpressionParser<Polynomial>::Hooks hooks{
      [n](const Rational& q) { return Polynomial::constant(n, q); },
      [&ring](const std::string& name, std::size_t pos) {
        int i = ring.index_of(name);
        if (i < 0) throw ParseError("unknown identifier '" + name + "'", pos);
        return ring.var(static_cast<std::size_t>(i));
      },
      [](const Polynomial& p, unsigned e) { return p.pow(e); }};
  return ExpressionParser<Polynomial>(text, std::move(hooks)).parse();
}

Polynomial parse_polynomial(std::string_view text, const CoordinateRing& ring) {
  return ring.reduce(parse_polynomial_raw(text, ring));
}

}  // namespace qpg
