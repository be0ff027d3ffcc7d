#include "nullcert/certificate.hpp"

#include <algorithm>
#include <set>

namespace nullcert {

namespace {

std::set<std::string> allowed_names(const SystemF& system, bool with_z) {
  std::set<std::string> names(system.ring()->registry().names().begin(), system.ring()->registry().names().end());
  for (auto& y : graph_variable_names(system.size())) names.insert(std::move(y));
  if (with_z) names.insert(kScaleVariable);
  return names;
}

/// Every variable that actually occurs in p belongs to `allowed`.
bool support_within(const Polynomial& p, const std::set<std::string>& allowed) {
  const auto& reg = p.ring()->registry();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (p.uses_variable(i) && allowed.count(reg.name(i)) == 0) return false;
  }
  return true;
}

/// Lex ring z > x's over which extended final polynomials are checked.
RingPtr scale_ring(const SystemF& system) {
  std::vector<std::string> names{kScaleVariable};
  const auto& reg = system.ring()->registry();
  for (auto v : system.ring()->order().significance()) names.push_back(reg.name(v));
  return make_lex_ring(std::move(names));
}

RingPtr scaled_graph_ring(const SystemF& system, const std::optional<MonomialOrder>& order) {
  VariableRegistry full = scaled_graph_registry(system);
  const auto n = full.size();
  return make_ring(std::move(full), order ? *order : MonomialOrder::lex(n));
}

Polynomial z_monomial(const RingPtr& ring) { return Polynomial::variable(ring, kScaleVariable); }

}  // namespace

SystemF::SystemF(RingPtr ring, std::vector<Polynomial> polys) : ring_(std::move(ring)), polys_(std::move(polys)) {
  if (!ring_) throw InvalidArgument("system without a ring");
  if (polys_.empty()) throw InvalidArgument("system must contain at least one polynomial");
  for (const auto& f : polys_) {
    if (!same_ring(f.ring(), ring_)) throw RingMismatch("system polynomials must share one ring");
    if (f.is_zero()) throw InvalidArgument("zero polynomial in system");
  }
}

std::vector<std::string> graph_variable_names(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

VariableRegistry scaled_graph_registry(const SystemF& system) {
  const auto& reg = system.ring()->registry();
  std::vector<std::string> names;
  for (auto v : system.ring()->order().significance()) names.push_back(reg.name(v));
  VariableRegistry with_y =
      extend_registry(VariableRegistry(std::move(names)), graph_variable_names(system.size()), Position::back);
  return extend_registry(with_y, {kScaleVariable}, Position::front);
}

IdealPresentation build_graph_ideal(const SystemF& system) {
  const auto& reg = system.ring()->registry();
  std::vector<std::string> names;
  for (auto v : system.ring()->order().significance()) names.push_back(reg.name(v));
  VariableRegistry full = extend_registry(VariableRegistry(std::move(names)), graph_variable_names(system.size()),
                                          Position::back);
  const auto n = full.size();
  IdealPresentation out{make_ring(std::move(full), MonomialOrder::lex(n)), {}};
  const auto ys = graph_variable_names(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    out.generators.push_back(Polynomial::variable(out.ring, ys[i]) - embed(system.polys()[i], out.ring));
  }
  return out;
}

IdealPresentation build_scaled_graph_ideal(const SystemF& system, const std::optional<MonomialOrder>& order) {
  IdealPresentation out{scaled_graph_ring(system, order), {}};
  const auto ys = graph_variable_names(system.size());
  const Polynomial z = z_monomial(out.ring);
  for (std::size_t i = 0; i < system.size(); ++i) {
    out.generators.push_back(Polynomial::variable(out.ring, ys[i]) - z * embed(system.polys()[i], out.ring));
  }
  return out;
}

bool is_final_polynomial(const Polynomial& p, const SystemF& system) {
  if (!support_within(p, allowed_names(system, false))) return false;
  const auto ys = graph_variable_names(system.size());
  const RingPtr& xring = system.ring();
  Assignment to_f;
  Assignment to_zero;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    to_f.emplace(ys[i], system.polys()[i]);
    to_zero.emplace(ys[i], Polynomial(xring));
  }
  if (!substitute(p, to_f, xring).is_zero()) return false;
  const Polynomial base = substitute(p, to_zero, xring);
  return !base.is_zero() && base.is_constant();
}

bool is_extended_final_polynomial(const Polynomial& p, const SystemF& system) {
  if (system.ring()->registry().contains(kScaleVariable)) return false;
  if (!support_within(p, allowed_names(system, true))) return false;
  const RingPtr zx = scale_ring(system);
  const auto ys = graph_variable_names(system.size());
  const Polynomial z = z_monomial(zx);
  Assignment to_zf;
  Assignment to_zero;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    to_zf.emplace(ys[i], z * embed(system.polys()[i], zx));
    to_zero.emplace(ys[i], Polynomial(zx));
  }
  if (!substitute(p, to_zf, zx).is_zero()) return false;
  const Polynomial base = substitute(p, to_zero, zx);
  return base.size() == 1 && base.leading_monomial() == z.leading_monomial();
}

std::optional<Polynomial> find_final_in_basis(const GroebnerBasis& basis, const SystemF& system) {
  for (const auto& g : basis.elements) {
    if (is_final_polynomial(g, system)) return g;
  }
  return std::nullopt;
}

std::optional<Polynomial> find_extended_final(const GroebnerBasis& basis, const SystemF& system) {
  const auto& reg = basis.ring->registry();
  if (!is_eliminating_order(basis.ring->order(), reg, {kScaleVariable})) {
    throw OrderNotEliminating("basis order " + format_order(basis.ring->order(), reg) +
                              " does not place z above all z-free monomials");
  }
  const Monomial z = Monomial::variable(reg.size(), reg.index_of(kScaleVariable));
  for (const auto& g : basis.elements) {
    if (g.is_zero() || g.leading_monomial() != z) continue;
    if (is_extended_final_polynomial(g, system)) return g;
    return std::nullopt;
  }
  return std::nullopt;
}

Polynomial certificate_combination(const std::vector<Polynomial>& lambdas, const SystemF& system) {
  if (lambdas.size() != system.size()) {
    throw InvalidArgument("expected " + std::to_string(system.size()) + " cofactors, got " +
                          std::to_string(lambdas.size()));
  }
  Polynomial sum(system.ring());
  for (std::size_t i = 0; i < lambdas.size(); ++i) sum += lambdas[i] * system.polys()[i];
  return sum;
}

CertificateBundle extract_certificate(const Polynomial& p, const SystemF& system) {
  if (!is_extended_final_polynomial(p, system)) {
    throw InvalidArgument("extract_certificate: polynomial is not an extended final polynomial");
  }
  const RingPtr& ring = p.ring();
  const auto& reg = ring->registry();
  const auto ys = graph_variable_names(system.size());
  std::vector<std::optional<std::size_t>> y_index(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) y_index[i] = reg.find(ys[i]);
  const auto z_index = reg.find(kScaleVariable);

  Rational c;
  std::vector<std::vector<Term>> h_terms(ys.size());
  for (const auto& t : p.terms()) {
    if (z_index && t.mono == Monomial::variable(reg.size(), *z_index)) {
      c += t.coeff;
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i < ys.size() && !placed; ++i) {
      if (!y_index[i] || t.mono[*y_index[i]] == 0) continue;
      h_terms[i].push_back(Term{t.coeff, t.mono / Monomial::variable(reg.size(), *y_index[i])});
      placed = true;
    }
    if (!placed) throw DecompositionFailure("term is neither c*z nor divisible by a y variable");
  }

  const RingPtr& xring = system.ring();
  Assignment specialize;
  specialize.emplace(kScaleVariable, Polynomial::constant(xring, Rational(1)));
  for (std::size_t i = 0; i < ys.size(); ++i) specialize.emplace(ys[i], system.polys()[i]);

  const Rational scale = -c.inverse();
  CertificateBundle bundle{p, c, {}, false};
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Polynomial h = Polynomial::from_terms(ring, std::move(h_terms[i]));
    bundle.lambdas.push_back(scale * substitute(h, specialize, xring));
  }
  bundle.verified = certificate_combination(bundle.lambdas, system).is_one();
  return bundle;
}

Polynomial specialize_z_one(const Polynomial& p) {
  if (!p.ring()->registry().contains(kScaleVariable)) return p;
  const RingPtr target = without_variable(p.ring(), kScaleVariable);
  Assignment one;
  one.emplace(kScaleVariable, Polynomial::constant(target, Rational(1)));
  return substitute(p, one, target);
}

Polynomial extended_from_certificate(const std::vector<Polynomial>& lambdas, const SystemF& system) {
  for (const auto& l : lambdas) {
    if (!same_ring(l.ring(), system.ring())) throw RingMismatch("cofactors must live in the system ring");
  }
  if (!certificate_combination(lambdas, system).is_one()) {
    throw CertificateInvalid("sum of lambda_i * f_i is not 1");
  }
  const RingPtr ring = scaled_graph_ring(system, std::nullopt);
  const auto ys = graph_variable_names(system.size());
  Polynomial p = z_monomial(ring);
  for (std::size_t i = 0; i < ys.size(); ++i) p -= embed(lambdas[i], ring) * Polynomial::variable(ring, ys[i]);
  return p;
}

std::variant<Consistent, CertificateBundle> certify(const SystemF& system, const CertifyOptions& options) {
  const GroebnerBasis base = reduced_groebner_basis(system.polys(), options.limits);
  if (!contains_one(base)) return Consistent{};

  const auto& polys = system.polys();
  if (auto it = std::find_if(polys.begin(), polys.end(), [](const Polynomial& f) { return f.is_constant(); });
      it != polys.end()) {
    std::vector<Polynomial> lambdas(polys.size(), Polynomial(system.ring()));
    const auto j = static_cast<std::size_t>(it - polys.begin());
    lambdas[j] = Polynomial::constant(system.ring(), it->leading_coeff().inverse());
    Polynomial p = extended_from_certificate(lambdas, system);
    return CertificateBundle{std::move(p), Rational(1), std::move(lambdas), true};
  }

  const IdealPresentation scaled = build_scaled_graph_ideal(system, options.scaled_order);
  const GroebnerBasis basis = reduced_groebner_basis(scaled.generators, options.limits);
  const auto p = find_extended_final(basis, system);
  if (!p) throw InvariantViolation("reduced basis of the scaled graph ideal has no extended final polynomial");

  // Shape forced by the elimination order: z + (terms divisible by some y_i).
  const auto& reg = scaled.ring->registry();
  const auto z_index = reg.index_of(kScaleVariable);
  const Monomial z = Monomial::variable(reg.size(), z_index);
  for (const auto& t : p->terms()) {
    if (t.mono == z) {
      if (!t.coeff.is_one()) throw InvariantViolation("coefficient of z in the extended final element is not 1");
      continue;
    }
    if (t.mono[z_index] != 0) throw InvariantViolation("extended final element has a z-term other than z");
    bool has_y = false;
    for (const auto& y : graph_variable_names(system.size())) has_y = has_y || t.mono[reg.index_of(y)] != 0;
    if (!has_y) throw InvariantViolation("extended final element has a y-free term other than z");
  }

  CertificateBundle bundle = extract_certificate(*p, system);
  if (!bundle.verified) throw InvariantViolation("extracted certificate does not sum to 1");
  return bundle;
}

}  // namespace nullcert
