#include "nullcert/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "nullcert/error.hpp"

namespace nullcert {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

void check_same_arity(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw RingMismatch("monomials over registries of different size");
}

}  // namespace

VariableRegistry::VariableRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("variable registry must not be empty");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidArgument("variable names must be nonempty");
    if (!seen.insert(n).second) throw NameClash(n);
  }
}

std::optional<std::size_t> VariableRegistry::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VariableRegistry::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable(std::string(name));
}

VariableRegistry extend_registry(const VariableRegistry& registry, const std::vector<std::string>& new_names,
                                 Position position) {
  for (const auto& n : new_names) {
    if (registry.contains(n)) throw NameClash(n);
  }
  std::vector<std::string> names;
  names.reserve(registry.size() + new_names.size());
  if (position == Position::front) names.insert(names.end(), new_names.begin(), new_names.end());
  names.insert(names.end(), registry.names().begin(), registry.names().end());
  if (position == Position::back) names.insert(names.end(), new_names.begin(), new_names.end());
  return VariableRegistry(std::move(names));  // rejects duplicates inside new_names
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { (void)total_degree(); }

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  if (index >= num_vars) throw InvalidArgument("variable index out of range");
  Monomial m(num_vars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  if (d > kMaxExponent) throw ExponentOverflow();
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_same_arity(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_arity(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  Monomial r(a.num_vars());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    const std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) throw ExponentOverflow();
    total += e;
    r.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  if (total > kMaxExponent) throw ExponentOverflow();
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw InvalidArgument("monomial division is not exact");
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_arity(a, b);
  Monomial r(a.num_vars());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  (void)r.total_degree();
  return r;
}

}  // namespace nullcert
