#ifndef NULLCERT_GROEBNER_HPP
#define NULLCERT_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nullcert/error.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

/// Caps that make every basis computation terminate.
struct ComputationLimits {
  std::size_t max_pair_reductions = 200000;
  std::uint64_t max_total_degree = 200;

  /// Throws InvalidArgument unless both caps are positive.
  void validate() const;
};

/// Groebner basis with respect to the order of `ring`.
///
/// Invariants: no zero elements, every S-polynomial of two elements reduces to
/// zero. When `reduced` is set, elements are additionally monic, no term of an
/// element is divisible by another element's leading monomial, and elements are
/// sorted by descending leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
  bool reduced = false;
};

struct Division {
  std::vector<Polynomial> quotients;  // aligned with the divisor list
  Polynomial remainder;
};

/// Multivariate division of f by `basis` under the ring order:
///   f = sum quotients[i] * basis[i] + remainder
/// with no remainder term divisible by a leading monomial of the basis. When
/// several leading monomials divide the current term, the divisor whose leading
/// monomial is largest wins (earliest index on ties).
Division normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Remainder only; skips quotient bookkeeping.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis);

/// (lcm / LT(f)) * f - (lcm / LT(g)) * g. Throws ZeroPolynomial.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the normal selection strategy, the coprime
/// criterion and the chain criterion. New basis elements are made monic.
/// Throws LimitExceeded (carrying progress statistics) when a cap is hit.
/// Stops early once a nonzero constant enters the basis.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const ComputationLimits& limits = {});

/// The unique reduced Groebner basis of the ideal generated by `basis`, which
/// must already be a Groebner basis.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// buchberger followed by reduce_basis.
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, const ComputationLimits& limits = {});

/// Whether some element is a nonzero constant, i.e. the ideal is the whole ring.
bool contains_one(const GroebnerBasis& basis);

/// Normal form of f is zero.
bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

/// Independent re-check of the Groebner property: every pairwise S-polynomial
/// reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> basis);

}  // namespace nullcert

#endif  // NULLCERT_GROEBNER_HPP
