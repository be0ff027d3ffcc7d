#include "nullcert/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "nullcert/error.hpp"

namespace nullcert {

namespace {

std::strong_ordering lex_within(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& vars) {
  for (auto v : vars) {
    if (a[v] != b[v]) return a[v] < b[v] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

void check_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (const auto& blk : blocks) {
    if (blk.empty()) throw InvalidOrder("order blocks must be nonempty");
    for (auto v : blk) {
      if (v >= n) throw InvalidOrder("order refers to variable index " + std::to_string(v) + " outside the registry");
      if (seen[v]) throw InvalidOrder("variable index " + std::to_string(v) + " appears twice in the order");
      seen[v] = true;
      ++count;
    }
  }
  if (count != n) throw InvalidOrder("order does not mention every variable");
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t num_vars) {
  std::vector<std::size_t> perm(num_vars);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return lex(std::move(perm));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> significance) {
  const std::size_t n = significance.size();
  if (n == 0) throw InvalidOrder("order over zero variables");
  std::vector<std::vector<std::size_t>> blocks{std::move(significance)};
  check_partition(n, blocks);
  return MonomialOrder(Kind::lex, n, std::move(blocks));
}

MonomialOrder MonomialOrder::block(std::vector<std::vector<std::size_t>> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  if (n == 0) throw InvalidOrder("order over zero variables");
  check_partition(n, blocks);
  return MonomialOrder(Kind::block, n, std::move(blocks));
}

std::vector<std::size_t> MonomialOrder::significance() const {
  std::vector<std::size_t> out;
  out.reserve(num_vars_);
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != num_vars_ || b.num_vars() != num_vars_) {
    throw RingMismatch("monomial arity does not match the order");
  }
  if (kind_ == Kind::lex) return lex_within(a, b, blocks_.front());
  for (const auto& blk : blocks_) {
    std::uint64_t da = 0;
    std::uint64_t db = 0;
    for (auto v : blk) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = lex_within(a, b, blk); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::without_variable(std::size_t index) const {
  if (index >= num_vars_) throw InvalidOrder("variable index out of range");
  if (num_vars_ == 1) throw InvalidOrder("cannot remove the only variable of an order");
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& blk : blocks_) {
    std::vector<std::size_t> nb;
    for (auto v : blk) {
      if (v == index) continue;
      nb.push_back(v > index ? v - 1 : v);
    }
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }
  return MonomialOrder(kind_, num_vars_ - 1, std::move(blocks));
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  return order.compare(a, b);
}

bool is_eliminating_order(const MonomialOrder& order, const std::vector<std::size_t>& elim_vars) {
  std::set<std::size_t> elim(elim_vars.begin(), elim_vars.end());
  for (auto v : elim) {
    if (v >= order.num_vars()) throw UnknownVariable("#" + std::to_string(v));
  }
  if (order.kind() == MonomialOrder::Kind::lex) {
    const auto& sig = order.blocks().front();
    return std::all_of(sig.begin(), sig.begin() + static_cast<std::ptrdiff_t>(elim.size()),
                       [&](std::size_t v) { return elim.count(v) != 0; });
  }
  std::set<std::size_t> covered;
  for (const auto& blk : order.blocks()) {
    if (covered == elim) return true;
    if (covered.size() >= elim.size()) return false;
    covered.insert(blk.begin(), blk.end());
  }
  return covered == elim;
}

bool is_eliminating_order(const MonomialOrder& order, const VariableRegistry& registry,
                          const std::vector<std::string>& elim_names) {
  if (registry.size() != order.num_vars()) throw RingMismatch("order and registry sizes differ");
  std::vector<std::size_t> idx;
  idx.reserve(elim_names.size());
  for (const auto& n : elim_names) idx.push_back(registry.index_of(n));
  return is_eliminating_order(order, idx);
}

std::string format_order(const MonomialOrder& order, const VariableRegistry& registry) {
  std::ostringstream os;
  if (order.kind() == MonomialOrder::Kind::lex) {
    os << "lex:";
    const auto& sig = order.blocks().front();
    for (std::size_t i = 0; i < sig.size(); ++i) os << (i ? "," : "") << registry.name(sig[i]);
    return os.str();
  }
  os << "block:";
  for (const auto& blk : order.blocks()) {
    os << '[';
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? "," : "") << registry.name(blk[i]);
    os << ']';
  }
  return os.str();
}

OrderAxiomReport verify_order_axioms(const MonomialComparator& cmp, std::size_t num_vars, std::uint64_t seed,
                                     std::size_t samples, Monomial::Exponent max_exponent) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    std::vector<Monomial::Exponent> e(num_vars);
    for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % (std::uint64_t{max_exponent} + 1));
    return Monomial(std::move(e));
  };
  auto name = [](const Monomial& m) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < m.num_vars(); ++i) os << (i ? "," : "") << m[i];
    os << ')';
    return os.str();
  };

  OrderAxiomReport report;
  const Monomial one(num_vars);
  for (std::size_t s = 0; s < samples; ++s) {
    const Monomial a = draw();
    const Monomial b = draw();
    const Monomial c = draw();
    ++report.checked;
    const auto ab = cmp(a, b);
    const auto ba = cmp(b, a);
    if ((ab == 0) != (a == b)) {
      report.passed = false;
      report.violation = "totality: " + name(a) + " vs " + name(b);
      return report;
    }
    if (ab != 0 && (ab < 0) == (ba < 0)) {
      report.passed = false;
      report.violation = "antisymmetry: " + name(a) + " vs " + name(b);
      return report;
    }
    if (cmp(a * c, b * c) != ab) {
      report.passed = false;
      report.violation = "multiplicativity: " + name(a) + ", " + name(b) + " times " + name(c);
      return report;
    }
    if (!a.is_one() && cmp(a, one) <= 0) {
      report.passed = false;
      report.violation = "minimum: " + name(a) + " is not above 1";
      return report;
    }
    const auto bc = cmp(b, c);
    if (ab < 0 && bc < 0 && cmp(a, c) >= 0) {
      report.passed = false;
      report.violation = "transitivity: " + name(a) + " < " + name(b) + " < " + name(c);
      return report;
    }
  }
  return report;
}

OrderAxiomReport verify_order_axioms(const MonomialOrder& order, std::uint64_t seed, std::size_t samples,
                                     Monomial::Exponent max_exponent) {
  return verify_order_axioms([&order](const Monomial& a, const Monomial& b) { return order.compare(a, b); },
                             order.num_vars(), seed, samples, max_exponent);
}

}  // namespace nullcert
