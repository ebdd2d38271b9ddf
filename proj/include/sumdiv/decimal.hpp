#pragma once

#include <string>

#include <gmpxx.h>

namespace sumdiv {

inline constexpr int kDefaultPrecision = 15;

// Renders an exact value with `digits` significant digits, rounding
// half to even. Layout follows printf's %g: fixed notation when the decimal
// exponent lies in [-4, digits), scientific otherwise; trailing zeros dropped.
std::string to_decimal(const mpq_class& value, int digits = kDefaultPrecision);
// The exact binary value of `value`, rendered as above.
std::string to_decimal(double value, int digits = kDefaultPrecision);

// num / den^(5/2) evaluated in 512-bit floating point, then rendered as above.
std::string ratio_over_power_five_halves(const mpz_class& num, const mpz_class& den,
                                         int digits = kDefaultPrecision);

}  // namespace sumdiv
