#include "sumdiv/decimal.hpp"

#include <cmath>

#include "sumdiv/errors.hpp"

namespace sumdiv {
namespace {

mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

mpq_class scale_by_pow10(const mpq_class& x, long e) {
  mpq_class r(x);
  if (e > 0) r *= mpq_class(pow10(e));
  if (e < 0) r /= mpq_class(pow10(-e));
  return r;
}

}  // namespace

std::string to_decimal(const mpq_class& signed_value, int digits) {
  if (digits < 1) throw InputError("precision must be at least 1");
  if (sgn(signed_value) == 0) return "0";
  if (sgn(signed_value) < 0) return "-" + to_decimal(mpq_class(-signed_value), digits);
  const mpq_class& value = signed_value;

  // Decimal exponent x with 10^x <= value < 10^(x+1).
  long x = static_cast<long>(mpz_sizeinbase(value.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(value.get_den().get_mpz_t(), 10));
  while (scale_by_pow10(value, -x) >= 10) ++x;
  while (scale_by_pow10(value, -x) < 1) --x;

  const mpq_class scaled = scale_by_pow10(value, digits - 1 - x);
  mpz_class q = scaled.get_num() / scaled.get_den();
  const mpq_class rem = scaled - mpq_class(q);
  const int half = cmp(rem, mpq_class(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == pow10(digits)) {
    q = pow10(digits - 1);
    ++x;
  }

  std::string mant = q.get_str();
  std::string out;
  if (x >= -4 && x < digits) {
    if (x >= 0) {
      out = mant.substr(0, x + 1);
      std::string frac = mant.substr(x + 1);
      while (!frac.empty() && frac.back() == '0') frac.pop_back();
      if (!frac.empty()) out += "." + frac;
    } else {
      while (!mant.empty() && mant.back() == '0') mant.pop_back();
      out = "0." + std::string(static_cast<std::size_t>(-x - 1), '0') + mant;
    }
  } else {
    std::string frac = mant.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = mant.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += (x < 0 ? "e-" : "e+");
    const std::string ex = std::to_string(x < 0 ? -x : x);
    out += (ex.size() < 2 ? "0" : "") + ex;
  }
  return out;
}

std::string to_decimal(double value, int digits) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  return to_decimal(mpq_class(value), digits);
}

std::string ratio_over_power_five_halves(const mpz_class& num, const mpz_class& den, int digits) {
  constexpr mp_bitcnt_t kBits = 512;
  mpf_class root(0, kBits);
  mpf_class d(den, kBits);
  mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
  mpf_class v(num, kBits);
  v /= d * d * root;
  return to_decimal(mpq_class(v), digits);
}

}  // namespace sumdiv
