#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sumdiv/positive_set.hpp"

namespace sumdiv {

enum class Objective {
  joint,     // J(A) = |A+A|^2 |A/A| / |A|^4, always >= 1/4
  max_form,  // R(A) = max{|A+A|, |A/A|}^3 / |A|^4, always >= 1/8
};

enum class SearchMode { exhaustive, local };

Objective parse_objective(std::string_view text);
SearchMode parse_search_mode(std::string_view text);
std::string_view to_string(Objective o);
std::string_view to_string(SearchMode m);

struct SearchConfig {
  Objective objective = Objective::joint;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t cardinality = 3;
  // exhaustive: subsets of {1..universe}
  std::uint64_t universe = 12;
  std::uint64_t evaluation_budget = 10'000'000;
  // local: replacements are p/q with 1 <= p, q <= element_bound
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  std::uint64_t element_bound = 32;
  std::uint64_t pair_cap = kDefaultPairCap;
};

struct Improvement {
  std::uint64_t evaluation;  // 1-based evaluation count when found
  Rational value;
  PositiveSet set;
};

struct SearchResult {
  PositiveSet best_set;
  Rational best_value;
  std::uint64_t evaluations = 0;
  std::vector<Improvement> trace;
};

/// Exact objective value. Also checks J >= 1/4 and R >= 1/8 in integers and
/// throws InvariantViolation if either fails.
Rational evaluate_objective(const PositiveSet& a, Objective objective,
                            std::uint64_t pair_cap = kDefaultPairCap);

// Every `cardinality`-subset of {1..universe}, in lexicographic order; ties
// keep the lexicographically smallest witness. Throws CapExceeded if the
// subset count exceeds the evaluation budget.
SearchResult exhaustive_search(const SearchConfig& config);

/// Seeded hill descent. Starts from whichever of {1..n} and {1,2,...,2^(n-1)}
/// scores lower, then repeatedly swaps one element for a random fraction and
/// keeps strict improvements.
SearchResult local_search(const SearchConfig& config);

SearchResult run_search(const SearchConfig& config);

// binomial(n, k), saturating at UINT64_MAX
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sumdiv
