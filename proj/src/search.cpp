#include "sumdiv/search.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>

#include "sumdiv/errors.hpp"
#include "sumdiv/families.hpp"
#include "sumdiv/random.hpp"

namespace sumdiv {
namespace {

mpz_class big(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return z;
}

void validate(const SearchConfig& c) {
  if (c.cardinality == 0) throw InputError("search cardinality must be at least 1");
  if (c.mode == SearchMode::local) {
    if (c.iterations == 0) throw InputError("local search needs at least one iteration");
    if (c.element_bound == 0) throw InputError("local search element bound must be positive");
  } else if (c.universe < c.cardinality) {
    throw InputError("universe {1.." + std::to_string(c.universe) + "} has fewer than " +
                     std::to_string(c.cardinality) + " elements");
  }
}

// Strictly better value, or equal value with a lexicographically smaller set.
bool better(const Rational& v, const PositiveSet& s, const Rational& best_v,
            const PositiveSet& best_s) {
  if (v != best_v) return v < best_v;
  return s < best_s;
}

}  // namespace

Objective parse_objective(std::string_view text) {
  if (text == "J" || text == "joint") return Objective::joint;
  if (text == "R" || text == "max") return Objective::max_form;
  throw InputError("unknown objective '" + std::string(text) + "' (expected J or R)");
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::exhaustive;
  if (text == "local") return SearchMode::local;
  throw InputError("unknown search mode '" + std::string(text) + "'");
}

std::string_view to_string(Objective o) { return o == Objective::joint ? "J" : "R"; }
std::string_view to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "local";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  if (!r.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return r.get_ui();
}

Rational evaluate_objective(const PositiveSet& a, Objective objective, std::uint64_t pair_cap) {
  const std::uint64_t n = a.size();
  const std::uint64_t s = sumset(a, a, pair_cap).size();
  const std::uint64_t r = ratioset(a, a, pair_cap).size();
  mpz_class n4;
  mpz_pow_ui(n4.get_mpz_t(), big(n).get_mpz_t(), 4);
  const mpz_class joint = big(s) * big(s) * big(r);
  const std::uint64_t mx = std::max(s, r);
  const mpz_class cube = big(mx) * big(mx) * big(mx);
  if (4 * joint < n4 || 8 * cube < n4)
    throw InvariantViolation("objective bound violated by set {" + format_set(a) + "}");
  return Rational::from_fraction(objective == Objective::joint ? joint : cube, n4);
}

SearchResult exhaustive_search(const SearchConfig& config) {
  validate(config);
  const std::uint64_t total = binomial(config.universe, config.cardinality);
  if (total > config.evaluation_budget)
    throw CapExceeded("exhaustive search needs " +
                      (total == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                          : std::to_string(total)) +
                      " evaluations, budget is " + std::to_string(config.evaluation_budget));

  const auto k = config.cardinality;
  std::vector<std::uint64_t> pick(k);
  for (std::uint64_t i = 0; i < k; ++i) pick[i] = i + 1;

  std::optional<SearchResult> result;
  std::uint64_t evaluations = 0;
  while (true) {
    PositiveSet candidate = PositiveSet::from_integers(pick);
    Rational value = evaluate_objective(candidate, config.objective, config.pair_cap);
    ++evaluations;
    if (!result) {
      result = SearchResult{candidate, value, 0, {}};
      result->trace.push_back({evaluations, value, candidate});
    } else if (better(value, candidate, result->best_value, result->best_set)) {
      result->best_set = candidate;
      result->best_value = value;
      result->trace.push_back({evaluations, std::move(value), std::move(candidate)});
    }

    // Next combination in lexicographic order.
    std::uint64_t i = k;
    while (i > 0 && pick[i - 1] == config.universe - k + i) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::uint64_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  result->evaluations = evaluations;
  return std::move(*result);
}

SearchResult local_search(const SearchConfig& config) {
  validate(config);
  const auto n = config.cardinality;
  PositiveSet start = interval_set(n);
  Rational start_value = evaluate_objective(start, config.objective, config.pair_cap);
  std::uint64_t evaluations = 1;
  if (n > 1) {
    PositiveSet geo = geometric_set(Rational::from_integer(2), n);
    Rational geo_value = evaluate_objective(geo, config.objective, config.pair_cap);
    ++evaluations;
    if (better(geo_value, geo, start_value, start)) {
      start = std::move(geo);
      start_value = std::move(geo_value);
    }
  }

  SearchResult result{start, start_value, 0, {}};
  result.trace.push_back({evaluations, start_value, start});
  std::mt19937_64 rng(config.seed);
  const auto b = config.element_bound;
  for (std::uint64_t it = 0; it < config.iterations; ++it) {
    const auto slot = uniform_below(rng, n);
    const auto p = uniform_between(rng, 1, b);
    const auto q = uniform_between(rng, 1, b);
    const Rational replacement =
        Rational::from_fraction(mpz_class(static_cast<unsigned long>(p)),
                                mpz_class(static_cast<unsigned long>(q)));
    const auto elems = result.best_set.elements();
    if (std::find(elems.begin(), elems.end(), replacement) != elems.end()) continue;

    std::vector<Rational> next(elems.begin(), elems.end());
    next[slot] = replacement;
    PositiveSet candidate = PositiveSet::from_values(std::move(next));
    Rational value = evaluate_objective(candidate, config.objective, config.pair_cap);
    ++evaluations;
    if (value < result.best_value) {
      result.best_set = candidate;
      result.best_value = value;
      result.trace.push_back({evaluations, std::move(value), std::move(candidate)});
    }
  }
  result.evaluations = evaluations;
  return result;
}

SearchResult run_search(const SearchConfig& config) {
  return config.mode == SearchMode::exhaustive ? exhaustive_search(config) : local_search(config);
}

}  // namespace sumdiv
