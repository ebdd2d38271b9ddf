#pragma once

/**
 * @file rational.hpp
 * @brief Exact positive rationals in canonical reduced form.
 *
 * Every value is stored as p/q with p, q >= 1 and gcd(p, q) = 1, so two
 * values are equal iff their fields are identical and the order is the
 * real-number order. Backed by GMP, so no operation can overflow.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sumdiv {

class Rational {
 public:
  // 1/1
  Rational() : value_(1) {}

  static Rational from_integer(std::uint64_t n);
  // Reduces num/den; throws InputError unless both are positive.
  static Rational from_fraction(const mpz_class& num, const mpz_class& den);
  // Throws InputError unless q is strictly positive.
  static Rational from_mpq(mpq_class q);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }
  bool is_integer() const { return value_.get_den() == 1; }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ + y.value_));
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ * y.value_));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ / y.value_));
  }
  friend bool operator==(const Rational& x, const Rational& y) {
    return mpq_equal(x.value_.get_mpq_t(), y.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) <=> 0;
  }

 private:
  // Trusted: q must already be canonical and positive.
  explicit Rational(mpq_class q) : value_(std::move(q)) {}

  mpq_class value_;
};

/// Accepts "p/q", "p" or a finite decimal "d.ddd"; surrounding whitespace is
/// ignored. Throws InputError for malformed text, a zero denominator, or a
/// value that is not strictly positive.
Rational parse_rational(std::string_view text);

inline Rational rat_add(const Rational& x, const Rational& y) { return x + y; }
inline Rational rat_mul(const Rational& x, const Rational& y) { return x * y; }
inline Rational rat_div(const Rational& x, const Rational& y) { return x / y; }
inline std::strong_ordering rat_cmp(const Rational& x, const Rational& y) { return x <=> y; }

}  // namespace sumdiv
