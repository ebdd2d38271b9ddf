#include "sumdiv/rational.hpp"

#include <cctype>

#include "sumdiv/errors.hpp"

namespace sumdiv {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void malformed(std::string_view text) {
  throw InputError("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational Rational::from_integer(std::uint64_t n) {
  if (n == 0) throw InputError("rational must be positive, got 0");
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof n, 0, 0, &n);
  return Rational(mpq_class(z));
}

Rational Rational::from_fraction(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("zero denominator");
  if (sgn(num) <= 0 || sgn(den) <= 0)
    throw InputError("rational must be positive, got " + num.get_str() + "/" + den.get_str());
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  if (sgn(q) <= 0) throw InputError("rational must be positive, got " + q.get_str());
  return Rational(std::move(q));
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (!s.empty() && s.front() == '-') {
    const std::string_view rest = s.substr(1);
    if (all_digits(rest) || rest.find_first_of("/.") != std::string_view::npos)
      throw InputError("rational must be positive, got '" + std::string(s) + "'");
    malformed(text);
  }

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    return Rational::from_fraction(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
  }

  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) malformed(text);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    const mpz_class num(std::string(whole) + std::string(frac), 10);
    return Rational::from_fraction(num, den);
  }

  if (!all_digits(s)) malformed(text);
  return Rational::from_fraction(mpz_class(std::string(s), 10), mpz_class(1));
}

}  // namespace sumdiv
