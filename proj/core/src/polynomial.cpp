#include "nullcert/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "nullcert/error.hpp"

namespace nullcert {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* op) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch(std::string(op) + ": operands belong to different rings");
}

}  // namespace

PolyRing::PolyRing(VariableRegistry registry, MonomialOrder order)
    : registry_(std::move(registry)), order_(std::move(order)) {
  if (registry_.size() != order_.num_vars()) throw RingMismatch("order and registry sizes differ");
}

RingPtr make_ring(VariableRegistry registry, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(registry), std::move(order));
}

RingPtr make_lex_ring(std::vector<std::string> names) {
  VariableRegistry reg(std::move(names));
  const auto n = reg.size();
  return make_ring(std::move(reg), MonomialOrder::lex(n));
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) { return make_ring(ring->registry(), std::move(order)); }

RingPtr without_variable(const RingPtr& ring, const std::string& name) {
  const auto idx = ring->registry().index_of(name);
  std::vector<std::string> names = ring->registry().names();
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(idx));
  return make_ring(VariableRegistry(std::move(names)), ring->order().without_variable(idx));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvalidArgument("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{c, Monomial(p.ring_->num_vars())});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name, Monomial::Exponent power) {
  Polynomial p(std::move(ring));
  const auto idx = p.ring_->registry().index_of(name);
  p.terms_.push_back(Term{Rational(1), Monomial::variable(p.ring_->num_vars(), idx, power)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c, Monomial m) {
  Polynomial p(std::move(ring));
  if (m.num_vars() != p.ring_->num_vars()) throw RingMismatch("monomial arity does not match the ring");
  if (!c.is_zero()) p.terms_.push_back(Term{c, std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& order = p.ring_->order();
  for (const auto& t : terms) {
    if (t.mono.num_vars() != p.ring_->num_vars()) throw RingMismatch("monomial arity does not match the ring");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw ZeroPolynomial("leading_term");
  return terms_.front();
}

bool Polynomial::uses_variable(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

bool Polynomial::is_canonical() const {
  const auto& order = ring_->order();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff.is_zero() || !terms_[i].coeff.is_canonical()) return false;
    if (terms_[i].mono.num_vars() != ring_->num_vars()) return false;
    if (i > 0 && order.compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m, const Polynomial& other) {
  if (c.is_zero() || other.is_zero()) return;
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  while (jt != other.terms_.end()) {
    Term scaled{c * jt->coeff, m * jt->mono};
    while (it != terms_.end() && order.compare(it->mono, scaled.mono) > 0) out.push_back(std::move(*it++));
    if (it != terms_.end() && it->mono == scaled.mono) {
      it->coeff += scaled.coeff;
      if (!it->coeff.is_zero()) out.push_back(std::move(*it));
      ++it;
    } else {
      out.push_back(std::move(scaled));
    }
    ++jt;
  }
  while (it != terms_.end()) out.push_back(std::move(*it++));
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(*this, rhs, "add");
  add_scaled(Rational(1), Monomial(ring_->num_vars()), rhs);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(*this, rhs, "subtract");
  add_scaled(Rational(-1), Monomial(ring_->num_vars()), rhs);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  require_same_ring(*this, rhs, "multiply");
  Polynomial product(ring_);
  for (const auto& t : terms_) product.add_scaled(t.coeff, t.mono, rhs);
  terms_ = std::move(product.terms_);
  return *this;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c.is_zero()) return Polynomial(p.ring());
  Polynomial r = p;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (m.num_vars() != ring_->num_vars()) throw RingMismatch("monomial arity does not match the ring");
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{c * t.coeff, m * t.mono});
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial pow(const Polynomial& f, std::uint64_t exponent) {
  Polynomial result = Polynomial::constant(f.ring(), Rational(1));
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Term leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial("leading_term");
  const auto& terms = f.terms();
  auto best = terms.begin();
  for (auto it = terms.begin() + 1; it != terms.end(); ++it) {
    if (order.compare(it->mono, best->mono) > 0) best = it;
  }
  return *best;
}

Polynomial make_monic(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("make_monic");
  return f.leading_coeff().inverse() * f;
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial("make_monic");
  return leading_term(f, order).coeff.inverse() * f;
}

Polynomial embed(const Polynomial& f, const RingPtr& target) {
  if (same_ring(f.ring(), target)) return f;
  const auto& src = f.ring()->registry();
  const auto n = target->num_vars();
  std::vector<std::optional<std::size_t>> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->registry().find(src.name(i));
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> e(n, 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map[i]) throw UnknownVariable(src.name(i));
      e[*map[i]] = t.mono[i];
    }
    terms.push_back(Term{t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const Assignment& assignment, const RingPtr& target) {
  for (const auto& [name, image] : assignment) {
    if (!same_ring(image.ring(), target)) throw RingMismatch("substitution image for '" + name + "' is not in the target ring");
  }
  const auto& src = f.ring()->registry();
  std::vector<std::optional<Polynomial>> images(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (!f.uses_variable(i)) continue;
    if (auto it = assignment.find(src.name(i)); it != assignment.end()) {
      images[i] = it->second;
    } else {
      if (!target->registry().contains(src.name(i))) throw UnknownVariable(src.name(i));
      images[i] = Polynomial::variable(target, src.name(i));
    }
  }
  // powers[i][e] caches images[i]^e
  std::vector<std::map<Monomial::Exponent, Polynomial>> powers(src.size());
  auto power_of = [&](std::size_t i, Monomial::Exponent e) -> const Polynomial& {
    auto& cache = powers[i];
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    return cache.emplace(e, pow(*images[i], e)).first->second;
  };

  Polynomial result(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.size() && !term.is_zero(); ++i) {
      if (t.mono[i] == 0) continue;
      term *= power_of(i, t.mono[i]);
    }
    result += term;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const Assignment& assignment) {
  const RingPtr& target = assignment.empty() ? f.ring() : assignment.begin()->second.ring();
  return substitute(f, assignment, target);
}

}  // namespace nullcert
