#ifndef NULLCERT_SYSIO_HPP
#define NULLCERT_SYSIO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "nullcert/certificate.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

/// Parsed `.polysys` text.
///
///   # comment
///   vars: x1 x2 x3          (first non-comment line, most significant first)
///   order: lex:x3,x2,x1     (optional, at most once)
///   x2 + x3                 (one polynomial per line)
///   x2*x3
///   x1*x3 + 1
///
/// Polynomials use `+ - * ^ ( )`, integers and `a/b` rationals; '*' is
/// mandatory between factors and a leading '-' is only allowed at the start of
/// an expression.
struct SystemDocument {
  SystemF system;
  std::optional<std::string> order_text;
  std::size_t order_line = 0;
};

/// Throws ParseError (1-based line and column) for malformed text, undeclared
/// identifiers, zero polynomials and systems without polynomials.
SystemDocument parse_document(std::string_view text);
SystemF parse_system(std::string_view text);

/// Parses a single expression over `ring`. Errors are reported on line 1.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// `lex:a,b,c` or `block:[a][b,c]`, covering `registry` exactly. Throws ParseError.
MonomialOrder parse_order(std::string_view text, const VariableRegistry& registry);

/// Terms in descending order, unit coefficients elided before non-constant
/// monomials, '*' between factors, '^' for exponents above 1, "0" for zero.
std::string render_polynomial(const Polynomial& p);
std::string render_polynomial(const Polynomial& p, const MonomialOrder& order);

/// Renders a system back to `.polysys` form.
std::string render_system(const SystemF& system);

}  // namespace nullcert

#endif  // NULLCERT_SYSIO_HPP
