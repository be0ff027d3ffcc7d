#include "nullcert/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace nullcert {

namespace {

/// Divisor indices sorted by descending leading monomial, stable on ties.
std::vector<std::size_t> divisor_priority(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<std::size_t> idx(basis.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(basis[a].leading_monomial(), basis[b].leading_monomial()) > 0;
  });
  return idx;
}

/// Core division loop. `quotients` may be null. The working polynomial lives in
/// an ordered map (largest monomial first) so that each reduction step costs
/// O(|divisor| log |p|) instead of a full merge.
Polynomial divide(const Polynomial& f, std::span<const Polynomial> basis, std::vector<Polynomial>* quotients) {
  const RingPtr& ring = f.ring();
  for (const auto& b : basis) {
    if (!same_ring(b.ring(), ring)) throw RingMismatch("normal_form: divisor from a different ring");
    if (b.is_zero()) throw ZeroPolynomial("normal_form divisor");
  }
  const auto& order = ring->order();
  const auto priority = divisor_priority(basis, order);
  std::vector<std::vector<Term>> quotient_terms(quotients ? basis.size() : 0);
  std::vector<Term> rest;

  auto descending = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(descending)> work(descending);
  for (const auto& t : f.terms()) work.emplace_hint(work.end(), t.mono, t.coeff);

  while (!work.empty()) {
    auto lead = work.begin();
    bool divided = false;
    for (auto i : priority) {
      const Term& blt = basis[i].leading_term();
      if (!blt.mono.divides(lead->first)) continue;
      const Rational c = lead->second / blt.coeff;
      const Monomial m = lead->first / blt.mono;
      work.erase(lead);
      const auto& bterms = basis[i].terms();
      for (auto it = bterms.begin() + 1; it != bterms.end(); ++it) {
        Monomial prod = m * it->mono;
        auto [pos, inserted] = work.try_emplace(std::move(prod));
        pos->second -= c * it->coeff;
        if (pos->second.is_zero()) work.erase(pos);
      }
      if (quotients) quotient_terms[i].push_back(Term{c, m});
      divided = true;
      break;
    }
    if (!divided) {
      rest.push_back(Term{lead->second, lead->first});
      work.erase(lead);
    }
  }
  if (quotients) {
    quotients->clear();
    for (auto& qt : quotient_terms) quotients->push_back(Polynomial::from_terms(ring, std::move(qt)));
  }
  return Polynomial::from_terms(ring, std::move(rest));
}

bool criterion_chain(std::size_t i, std::size_t j, const std::vector<Polynomial>& basis, const Monomial& pair_lcm,
                     const std::set<std::pair<std::size_t, std::size_t>>& pending) {
  auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == i || k == j) continue;
    if (pending.count(key(i, k)) || pending.count(key(j, k))) continue;
    if (basis[k].leading_monomial().divides(pair_lcm)) return true;
  }
  return false;
}

}  // namespace

void ComputationLimits::validate() const {
  if (max_pair_reductions == 0) throw InvalidArgument("max_pair_reductions must be positive");
  if (max_total_degree == 0) throw InvalidArgument("max_total_degree must be positive");
}

Division normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  Division d{{}, Polynomial(f.ring())};
  d.remainder = divide(f, basis, &d.quotients);
  return d;
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis) { return divide(f, basis, nullptr); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("s_polynomial");
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch("s_polynomial: operands from different rings");
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Monomial l = lcm(lf.mono, lg.mono);
  return f.times_term(lf.coeff.inverse(), l / lf.mono) - g.times_term(lg.coeff.inverse(), l / lg.mono);
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const ComputationLimits& limits) {
  limits.validate();
  if (generators.empty()) throw InvalidArgument("buchberger: empty generator list");
  const RingPtr ring = generators.front().ring();
  const auto& order = ring->order();

  GroebnerBasis out{ring, {}, false};
  ComputationStats stats;
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatch("buchberger: generators from different rings");
    if (g.is_zero()) continue;
    stats.max_degree_seen = std::max(stats.max_degree_seen, g.total_degree());
    if (g.total_degree() > limits.max_total_degree) {
      stats.basis_size = out.elements.size();
      throw LimitExceeded("max total degree", stats);
    }
    out.elements.push_back(make_monic(g));
    if (g.is_constant()) return out;
  }
  if (out.elements.empty()) return out;  // zero ideal

  auto& basis = out.elements;
  using Pair = std::pair<std::size_t, std::size_t>;
  struct Candidate {
    Monomial lcm;
    Pair pair;
  };
  // normal strategy: smallest lcm first, ties by index pair
  auto before = [&order](const Candidate& a, const Candidate& b) {
    const auto c = order.compare(a.lcm, b.lcm);
    return c != 0 ? c < 0 : a.pair < b.pair;
  };
  std::set<Candidate, decltype(before)> queue(before);
  std::set<Pair> pending;
  auto add_pairs_with = [&](std::size_t t) {
    for (std::size_t k = 0; k < t; ++k) {
      queue.insert(Candidate{lcm(basis[k].leading_monomial(), basis[t].leading_monomial()), Pair{k, t}});
      pending.emplace(k, t);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_with(j);

  while (!queue.empty()) {
    const Candidate cand = *queue.begin();
    queue.erase(queue.begin());
    const auto [i, j] = cand.pair;
    pending.erase(cand.pair);

    const bool coprime = basis[i].leading_monomial().coprime(basis[j].leading_monomial());
    if (!coprime && !criterion_chain(i, j, basis, cand.lcm, pending)) {
      if (stats.pairs_reduced >= limits.max_pair_reductions) {
        stats.pairs_pending = pending.size();
        stats.basis_size = basis.size();
        throw LimitExceeded("max pair reductions", stats);
      }
      ++stats.pairs_reduced;
      Polynomial h = reduce(s_polynomial(basis[i], basis[j]), basis);
      if (!h.is_zero()) {
        const auto deg = h.total_degree();
        stats.max_degree_seen = std::max(stats.max_degree_seen, deg);
        if (deg > limits.max_total_degree) {
          stats.pairs_pending = pending.size();
          stats.basis_size = basis.size();
          throw LimitExceeded("max total degree", stats);
        }
        const bool unit = h.is_constant();
        basis.push_back(make_monic(h));
        if (unit) return out;
        add_pairs_with(basis.size() - 1);
      }
    }
  }
  return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  const RingPtr& ring = basis.ring;
  const auto& order = ring->order();
  GroebnerBasis out{ring, {}, true};

  std::vector<Polynomial> elems;
  for (const auto& g : basis.elements) {
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      out.elements.push_back(Polynomial::constant(ring, Rational(1)));
      return out;
    }
    elems.push_back(make_monic(g));
  }
  std::stable_sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });

  // minimalize: drop any element whose leading monomial is divisible by another kept one
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < elems.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < elems.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = elems[a].leading_monomial();
      const auto& lb = elems[b].leading_monomial();
      if (lb.divides(la) && (la != lb || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(elems[a]);
  }

  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    minimal[a] = make_monic(reduce(minimal[a], others));
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  out.elements = std::move(minimal);
  return out;
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, const ComputationLimits& limits) {
  return reduce_basis(buchberger(generators, limits));
}

bool contains_one(const GroebnerBasis& basis) {
  return std::any_of(basis.elements.begin(), basis.elements.end(),
                     [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); });
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.is_zero()) return true;
  return reduce(f, basis.elements).is_zero();
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace nullcert
