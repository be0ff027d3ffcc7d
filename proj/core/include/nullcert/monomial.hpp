#ifndef NULLCERT_MONOMIAL_HPP
#define NULLCERT_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nullcert {

/// Ordered list of distinct variable names. Index 0 is the most significant
/// variable of the default lex order.
class VariableRegistry {
 public:
  /// Throws InvalidArgument on an empty list or an empty name, NameClash on duplicates.
  explicit VariableRegistry(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t index) const { return names_.at(index); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  friend bool operator==(const VariableRegistry&, const VariableRegistry&) = default;

 private:
  std::vector<std::string> names_;
};

enum class Position { front, back };

/// Adjoins fresh variables. Throws NameClash if a new name is already present
/// or repeated.
VariableRegistry extend_registry(const VariableRegistry& registry, const std::vector<std::string>& new_names,
                                 Position position);

/// Exponent vector over a fixed registry. Exponents and the total degree are
/// kept below 2^32; operations that would leave that range throw
/// ExponentOverflow.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const;
  bool is_one() const;

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b. Precondition: b divides a (InvalidArgument otherwise).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

}  // namespace nullcert

#endif  // NULLCERT_MONOMIAL_HPP
