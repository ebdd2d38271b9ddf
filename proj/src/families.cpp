#include "sumdiv/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "sumdiv/errors.hpp"
#include "sumdiv/random.hpp"

namespace sumdiv {
namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw InputError(std::string(what) + ": n must be at least 1");
}

std::uint64_t parse_count(std::string_view key, std::string_view value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw InputError("family parameter " + std::string(key) + ": expected an integer, got '" +
                     std::string(value) + "'");
  return v;
}

}  // namespace

PositiveSet interval_set(std::uint64_t n) {
  require_positive(n, "interval");
  std::vector<Rational> v;
  v.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) v.push_back(Rational::from_integer(i));
  return PositiveSet::from_values(std::move(v));
}

PositiveSet geometric_set(const Rational& ratio, std::uint64_t n) {
  require_positive(n, "geometric");
  if (ratio == Rational::from_integer(1)) throw InputError("geometric ratio must differ from 1");
  std::vector<Rational> v;
  v.reserve(n);
  Rational term;
  for (std::uint64_t i = 0; i < n; ++i) {
    v.push_back(term);
    term = term * ratio;
  }
  return PositiveSet::from_values(std::move(v));
}

PositiveSet farey_set(std::uint64_t n) {
  require_positive(n, "farey");
  std::vector<Rational> v;
  v.reserve(farey_size(n));
  for (std::uint64_t q = 1; q <= n; ++q)
    for (std::uint64_t a = 1; a <= q; ++a)
      if (std::gcd(a, q) == 1)
        v.push_back(Rational::from_fraction(mpz_class(static_cast<unsigned long>(a)),
                                            mpz_class(static_cast<unsigned long>(q))));
  return PositiveSet::from_values(std::move(v));
}

std::vector<std::uint32_t> totients(std::uint32_t n) {
  std::vector<std::uint32_t> phi(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::uint32_t> primes;
  if (n >= 1) phi[1] = 1;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (phi[i] == 0) {
      phi[i] = i - 1;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t m = static_cast<std::uint64_t>(i) * p;
      if (m > n) break;
      if (i % p == 0) {
        phi[m] = phi[i] * p;
        break;
      }
      phi[m] = phi[i] * (p - 1);
    }
  }
  return phi;
}

std::uint64_t farey_size(std::uint64_t n) {
  require_positive(n, "farey_size");
  if (n > 0xFFFFFFFFull) throw CapExceeded("farey_size: n exceeds the sieve range");
  const auto phi = totients(static_cast<std::uint32_t>(n));
  return std::accumulate(phi.begin(), phi.end(), std::uint64_t{0});
}

double farey_asymptotic(std::uint64_t n) {
  const double x = static_cast<double>(n);
  return 3.0 * x * x / (std::numbers::pi * std::numbers::pi);
}

std::uint64_t mult_table_count(std::uint64_t n, std::uint64_t bit_budget) {
  require_positive(n, "mult_table_count");
  if (n > 0xFFFFFFFFull || n * n + 1 > bit_budget)
    throw CapExceeded("multiplication table of order " + std::to_string(n) +
                      " exceeds the bitmap budget of " + std::to_string(bit_budget) + " bits");
  const std::uint64_t max_product = n * n;
  std::vector<std::uint64_t> marks(max_product / 64 + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t p = i * i; p <= i * n; p += i) marks[p >> 6] |= std::uint64_t{1} << (p & 63);
  std::uint64_t count = 0;
  for (auto w : marks) count += static_cast<std::uint64_t>(std::popcount(w));
  return count;
}

long double beta_constant() {
  const long double ln2 = std::log(2.0L);
  return 1.0L - (1.0L + std::log(ln2)) / ln2;
}

std::uint64_t distinct_fraction_count(std::uint64_t bound) {
  return bound == 0 ? 0 : 2 * farey_size(bound) - 1;
}

PositiveSet random_set(const RandomSetSpec& spec) {
  if (spec.size == 0) throw InputError("random set size must be at least 1");
  if (spec.element_bound == 0) throw InputError("random element bound must be at least 1");
  const std::uint64_t available = distinct_fraction_count(spec.element_bound);
  if (spec.size > available)
    throw InputError("only " + std::to_string(available) + " distinct fractions have parts <= " +
                     std::to_string(spec.element_bound) + ", asked for " +
                     std::to_string(spec.size));

  std::mt19937_64 rng(spec.seed);
  const auto b = spec.element_bound;
  auto fraction = [](std::uint64_t p, std::uint64_t q) {
    return Rational::from_fraction(mpz_class(static_cast<unsigned long>(p)),
                                   mpz_class(static_cast<unsigned long>(q)));
  };

  std::vector<Rational> chosen;
  if (2 * spec.size <= available) {
    std::set<Rational> seen;
    while (seen.size() < spec.size) {
      const auto p = uniform_between(rng, 1, b);
      seen.insert(fraction(p, uniform_between(rng, 1, b)));
    }
    chosen.assign(seen.begin(), seen.end());
  } else {
    // Dense request: partial Fisher-Yates over every reduced fraction.
    std::vector<Rational> all;
    all.reserve(available);
    for (std::uint64_t q = 1; q <= b; ++q)
      for (std::uint64_t p = 1; p <= b; ++p)
        if (std::gcd(p, q) == 1) all.push_back(fraction(p, q));
    for (std::uint64_t i = 0; i < spec.size; ++i) {
      const auto j = i + uniform_below(rng, all.size() - i);
      std::swap(all[i], all[j]);
    }
    all.resize(spec.size);
    chosen = std::move(all);
  }
  return PositiveSet::from_values(std::move(chosen));
}

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (kind == "interval") spec.kind = FamilyKind::interval;
  else if (kind == "geometric") spec.kind = FamilyKind::geometric;
  else if (kind == "farey") spec.kind = FamilyKind::farey;
  else if (kind == "random") spec.kind = FamilyKind::random;
  else throw InputError("unknown family '" + std::string(kind) + "'");

  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InputError("family parameter '" + std::string(item) + "' is not key=value");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "n") spec.n = parse_count(key, value);
    else if (key == "ratio") spec.ratio = parse_rational(value);
    else if (key == "bound") spec.element_bound = parse_count(key, value);
    else if (key == "seed") spec.seed = parse_count(key, value);
    else throw InputError("unknown family parameter '" + std::string(key) + "'");
  }
  if (spec.n == 0) throw InputError("family parameter n must be at least 1");
  if (spec.kind == FamilyKind::geometric && spec.ratio == Rational::from_integer(1))
    throw InputError("geometric ratio must differ from 1");
  if (spec.kind == FamilyKind::random && spec.element_bound == 0)
    throw InputError("random bound must be at least 1");
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  const std::string n = "n=" + std::to_string(spec.n);
  switch (spec.kind) {
    case FamilyKind::interval: return "interval:" + n;
    case FamilyKind::geometric: return "geometric:ratio=" + spec.ratio.str() + "," + n;
    case FamilyKind::farey: return "farey:" + n;
    case FamilyKind::random:
      return "random:" + n + ",bound=" + std::to_string(spec.element_bound) +
             ",seed=" + std::to_string(spec.seed);
  }
  return {};
}

PositiveSet make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::interval: return interval_set(spec.n);
    case FamilyKind::geometric: return geometric_set(spec.ratio, spec.n);
    case FamilyKind::farey: return farey_set(spec.n);
    case FamilyKind::random: return random_set({spec.n, spec.element_bound, spec.seed});
  }
  throw InputError("unknown family kind");
}

FareyStatistics farey_statistics(std::uint64_t n, std::uint64_t pair_cap) {
  const PositiveSet f = farey_set(n);
  FareyStatistics st;
  st.n = n;
  st.farey_size = f.size();
  st.pair_count = static_cast<std::uint64_t>(f.size()) * f.size();
  if (st.pair_count > pair_cap)
    throw CapExceeded("Farey statistics of order " + std::to_string(n) + " need " +
                      std::to_string(st.pair_count) + " pairs, cap is " +
                      std::to_string(pair_cap));
  st.sumset_size = sumset(f, f, pair_cap).size();
  st.productset_size = productset(f, f, pair_cap).size();
  st.ratioset_size = ratioset(f, f, pair_cap).size();

  std::vector<Rational> diffs;
  diffs.reserve(f.size() * (f.size() - 1) / 2);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      diffs.push_back(Rational::from_mpq(f[i].value() - f[j].value()));
  std::sort(diffs.begin(), diffs.end());
  st.positive_difference_count =
      static_cast<std::uint64_t>(std::unique(diffs.begin(), diffs.end()) - diffs.begin());
  return st;
}

}  // namespace sumdiv
