#ifndef NULLCERT_RATIONAL_HPP
#define NULLCERT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nullcert {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_class. Every constructor and every arithmetic result is
/// canonical, so equality is plain structural equality of numerator and
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// numerator/denominator, canonicalized. Throws DivisionByZero if denominator == 0.
  Rational(long numerator, long denominator);

  /// Parses `a` or `a/b` with an optional leading '-'. Digits only, b > 0.
  /// Throws InvalidArgument on anything else.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Multiplicative inverse. Throws DivisionByZero on zero.
  Rational inverse() const;

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }
  std::string to_string() const;

  /// Whether the stored value is in lowest terms with a positive denominator.
  bool is_canonical() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  const mpq_class& gmp() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
Rational rat_inv(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nullcert

#endif  // NULLCERT_RATIONAL_HPP
