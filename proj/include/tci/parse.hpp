#ifndef TCI_PARSE_HPP
#define TCI_PARSE_HPP

#include <string>

#include "tci/polynomial.hpp"

namespace tci {

// Parses the whitespace-insensitive polynomial grammar
//
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | 'i' | variable | '(' expr ')'
//   rational := integer ('/' natural)?
//
// There is no implicit multiplication.  A numeric literal immediately
// followed by 'i' (e.g. "3i", "1/2i") is accepted as an imaginary literal.
// Errors carry a 1-based character position and the offending token.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx);

// Same grammar restricted to constants ("-3/4", "1/2 + 3*i", "2i", ...).
GaussianRational parse_gaussian_rational(const std::string& text);

} // namespace tci

#endif
