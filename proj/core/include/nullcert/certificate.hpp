#ifndef NULLCERT_CERTIFICATE_HPP
#define NULLCERT_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nullcert/groebner.hpp"
#include "nullcert/polynomial.hpp"

namespace nullcert {

/// A finite system f_1..f_k of nonzero polynomials over one x-ring.
class SystemF {
 public:
  /// Throws InvalidArgument on an empty list or a zero polynomial, RingMismatch
  /// if the polynomials do not share `ring`.
  SystemF(RingPtr ring, std::vector<Polynomial> polys);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  std::size_t size() const noexcept { return polys_.size(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> polys_;
};

/// Names of the adjoined variables: y1..yk and z.
std::vector<std::string> graph_variable_names(std::size_t k);
inline const std::string kScaleVariable = "z";

/// z, x's (F's significance order), y1..yk. Throws NameClash on "z" or y names.
VariableRegistry scaled_graph_registry(const SystemF& system);

struct IdealPresentation {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// <y_i - f_i> in Q[x, y] with lex, x's (in F's significance order) above y1 > ... > yk.
/// Throws NameClash if F already uses one of the y names.
IdealPresentation build_graph_ideal(const SystemF& system);

/// <y_i - z f_i> in Q[z, x, y] with lex z > x's > y's, or with `order` when
/// given (parsed against the z, x, y registry). Throws NameClash on "z" or y names.
IdealPresentation build_scaled_graph_ideal(const SystemF& system, const std::optional<MonomialOrder>& order = {});

/// p(x, f) = 0 and p(x, 0) is a nonzero constant. False for any p that mentions
/// variables outside x and y1..yk.
bool is_final_polynomial(const Polynomial& p, const SystemF& system);

/// p(z, x, z f) = 0 and p(z, x, 0) = c z with c != 0. False for any p that
/// mentions variables outside z, x and y1..yk.
bool is_extended_final_polynomial(const Polynomial& p, const SystemF& system);

/// First basis element, in stored order, that is final for the system.
std::optional<Polynomial> find_final_in_basis(const GroebnerBasis& basis, const SystemF& system);

/// The basis element whose leading monomial is exactly z, provided it is an
/// extended final polynomial. Throws OrderNotEliminating unless the basis order
/// puts z above every z-free monomial.
std::optional<Polynomial> find_extended_final(const GroebnerBasis& basis, const SystemF& system);

struct CertificateBundle {
  Polynomial extended_final;     // over z, x, y
  Rational c;                    // p(z, x, 0) = c z
  std::vector<Polynomial> lambdas;  // over the x-ring
  bool verified = false;         // sum lambda_i f_i == 1
};

/// Splits p = c z + sum h_i y_i (each non-z term goes to the lowest i whose y_i
/// divides it) and sets lambda_i = -h_i(1, x, f) / c.
/// Throws InvalidArgument if p is not extended final, DecompositionFailure when
/// some term is neither c z nor divisible by a y variable.
CertificateBundle extract_certificate(const Polynomial& p, const SystemF& system);

/// p(1, x, y), over the same registry without z. Polynomials whose ring has no
/// z are returned unchanged.
Polynomial specialize_z_one(const Polynomial& p);

/// z - sum lambda_i y_i over the scaled graph ring. Throws CertificateInvalid
/// unless sum lambda_i f_i == 1.
Polynomial extended_from_certificate(const std::vector<Polynomial>& lambdas, const SystemF& system);

/// sum lambda_i f_i, in the x-ring.
Polynomial certificate_combination(const std::vector<Polynomial>& lambdas, const SystemF& system);

struct Consistent {};

struct CertifyOptions {
  ComputationLimits limits;
  /// Order for the scaled graph ideal; must be z-eliminating. Defaults to lex z > x > y.
  std::optional<MonomialOrder> scaled_order;
};

/// Decides V(F) = {} via the reduced basis of <F>. If inconsistent, computes
/// the reduced basis of the scaled graph ideal, takes its extended final
/// polynomial and extracts a verified certificate. A system containing a
/// nonzero constant f_j short-circuits to lambda_j = 1 / f_j.
/// Throws InvariantViolation if the extended final element does not have the
/// form z + (terms divisible by some y_i).
std::variant<Consistent, CertificateBundle> certify(const SystemF& system, const CertifyOptions& options = {});

}  // namespace nullcert

#endif  // NULLCERT_CERTIFICATE_HPP
