#ifndef NULLCERT_POLYNOMIAL_HPP
#define NULLCERT_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nullcert/monomial.hpp"
#include "nullcert/ordering.hpp"
#include "nullcert/rational.hpp"

namespace nullcert {

/// Variables plus the monomial order every polynomial of the ring is sorted by.
class PolyRing {
 public:
  /// Throws RingMismatch if the order is over a different number of variables.
  PolyRing(VariableRegistry registry, MonomialOrder order);

  const VariableRegistry& registry() const noexcept { return registry_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t num_vars() const noexcept { return registry_.size(); }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  VariableRegistry registry_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(VariableRegistry registry, MonomialOrder order);
/// Lex ring with significance equal to the name order.
RingPtr make_lex_ring(std::vector<std::string> names);
/// Same registry, different order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);
/// The ring without one variable; the order keeps its relative structure.
RingPtr without_variable(const RingPtr& ring, const std::string& name);
/// True when both rings have equal registries and orders.
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Q[registry]: terms strictly descending under the ring's order,
/// no zero coefficients, zero is the empty term list.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, const std::string& name, Monomial::Exponent power = 1);
  static Polynomial monomial(RingPtr ring, const Rational& c, Monomial m);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero counts as constant.
  bool is_constant() const;
  bool is_one() const;
  std::uint64_t total_degree() const;

  /// Leading term under the ring order. Throws ZeroPolynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  /// Exponent of `var` is positive in some term.
  bool uses_variable(std::size_t var) const;

  /// Whether the term list satisfies the canonical-form invariants.
  bool is_canonical() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  /// Multiplication by a single term c*m; keeps the sort because orders are multiplicative.
  Polynomial times_term(const Rational& c, const Monomial& m) const;

  /// Structural equality; polynomials over different rings are never equal.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  /// this += c * m * other, a single merge pass.
  void add_scaled(const Rational& c, const Monomial& m, const Polynomial& other);

  RingPtr ring_;
  std::vector<Term> terms_;

};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, std::uint64_t exponent);

/// Leading term of f under an explicit order (which may differ from the ring order).
Term leading_term(const Polynomial& f, const MonomialOrder& order);
/// f divided by its leading coefficient (ring order). Throws ZeroPolynomial.
Polynomial make_monic(const Polynomial& f);
Polynomial make_monic(const Polynomial& f, const MonomialOrder& order);

/// Re-expresses f in `target`, matching variables by name. Throws
/// UnknownVariable if f uses a variable `target` lacks.
Polynomial embed(const Polynomial& f, const RingPtr& target);

/// Variable name -> image polynomial.
using Assignment = std::map<std::string, Polynomial>;

/// Image of f under the ring homomorphism sending each assigned variable to its
/// image and every other variable to the same-named variable of `target`.
/// Images must live in `target`. Throws UnknownVariable when an unassigned
/// variable of f is missing from `target`.
Polynomial substitute(const Polynomial& f, const Assignment& assignment, const RingPtr& target);
/// As above with target = f's ring (or the images' ring when nonempty).
Polynomial substitute(const Polynomial& f, const Assignment& assignment);

}  // namespace nullcert

#endif  // NULLCERT_POLYNOMIAL_HPP
