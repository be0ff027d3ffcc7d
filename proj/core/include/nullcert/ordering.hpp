#ifndef NULLCERT_ORDERING_HPP
#define NULLCERT_ORDERING_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nullcert/monomial.hpp"

namespace nullcert {

/// Lex or block monomial order over the variables of one registry, stored by
/// variable index.
///
/// Lex compares exponents variable by variable in significance order. A block
/// order compares the total degree restricted to the first block, breaks ties
/// by lex inside that block, and then moves on to the next block. A leading
/// block {z} therefore makes every monomial containing z larger than every
/// z-free monomial.
class MonomialOrder {
 public:
  enum class Kind { lex, block };

  /// Lex with significance 0 > 1 > ... > num_vars-1.
  static MonomialOrder lex(std::size_t num_vars);
  /// Lex with the given significance permutation. Throws InvalidOrder unless
  /// `significance` is a permutation of 0..n-1.
  static MonomialOrder lex(std::vector<std::size_t> significance);
  /// Throws InvalidOrder unless the blocks are nonempty and partition 0..n-1.
  static MonomialOrder block(std::vector<std::vector<std::size_t>> blocks);

  Kind kind() const noexcept { return kind_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  /// For lex, a single block holding the significance permutation.
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  /// All variable indices in significance order.
  std::vector<std::size_t> significance() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  /// Same order with variable `index` removed and the remaining indices shifted down.
  MonomialOrder without_variable(std::size_t index) const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t num_vars, std::vector<std::vector<std::size_t>> blocks)
      : kind_(kind), num_vars_(num_vars), blocks_(std::move(blocks)) {}

  Kind kind_ = Kind::lex;
  std::size_t num_vars_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// Free-function form of MonomialOrder::compare. Throws RingMismatch when the
/// arities disagree.
std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order);

/// Structural check that every monomial involving one of `elim_vars` is greater
/// than every monomial free of them. Lex: the variables form a prefix of the
/// significance list. Block: they are exactly the union of a prefix of blocks.
/// Throws UnknownVariable for an index outside the order.
bool is_eliminating_order(const MonomialOrder& order, const std::vector<std::size_t>& elim_vars);
bool is_eliminating_order(const MonomialOrder& order, const VariableRegistry& registry,
                          const std::vector<std::string>& elim_names);

/// Renders `lex:a,b,c` or `block:[a][b,c]`.
std::string format_order(const MonomialOrder& order, const VariableRegistry& registry);

using MonomialComparator = std::function<std::strong_ordering(const Monomial&, const Monomial&)>;

struct OrderAxiomReport {
  bool passed = true;
  std::size_t checked = 0;
  std::string violation;  // empty when passed
};

/// Samples monomial triples from a seeded generator and checks antisymmetry,
/// transitivity, compatibility with multiplication and that 1 is the minimum.
/// Stops at the first violation.
OrderAxiomReport verify_order_axioms(const MonomialComparator& cmp, std::size_t num_vars, std::uint64_t seed,
                                     std::size_t samples = 500, Monomial::Exponent max_exponent = 3);
OrderAxiomReport verify_order_axioms(const MonomialOrder& order, std::uint64_t seed, std::size_t samples = 500,
                                     Monomial::Exponent max_exponent = 3);

}  // namespace nullcert

#endif  // NULLCERT_ORDERING_HPP
