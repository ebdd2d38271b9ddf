#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumdiv/positive_set.hpp"

namespace sumdiv {

// Default bitmap budget for mult_table_count: 2^33 bits (1 GiB).
inline constexpr std::uint64_t kDefaultTableBits = std::uint64_t{1} << 33;

PositiveSet interval_set(std::uint64_t n);

// {ratio^0, ..., ratio^(n-1)}; ratio must differ from 1.
PositiveSet geometric_set(const Rational& ratio, std::uint64_t n);

// Reduced fractions a/q with 1 <= a <= q <= n.
PositiveSet farey_set(std::uint64_t n);

// Euler phi(0..n) by a linear sieve; phi[0] = 0.
std::vector<std::uint32_t> totients(std::uint32_t n);

// sum_{q<=n} phi(q) = |F_n|, without materialising the set.
std::uint64_t farey_size(std::uint64_t n);

// 3 n^2 / pi^2
double farey_asymptotic(std::uint64_t n);

// Number of distinct products ij with 1 <= i, j <= n. Uses an n^2-bit
// bitmap; throws CapExceeded if that exceeds `bit_budget`.
std::uint64_t mult_table_count(std::uint64_t n, std::uint64_t bit_budget = kDefaultTableBits);

// 1 - (1 + ln ln 2) / ln 2
long double beta_constant();

struct RandomSetSpec {
  std::uint64_t size = 1;
  // numerators and denominators are drawn from [1, element_bound]
  std::uint64_t element_bound = 100;
  std::uint64_t seed = 0;
};

// `size` distinct rationals p/q, 1 <= p, q <= element_bound, reproducible per seed.
PositiveSet random_set(const RandomSetSpec& spec);

// Number of distinct values p/q with 1 <= p, q <= bound.
std::uint64_t distinct_fraction_count(std::uint64_t bound);

enum class FamilyKind { interval, geometric, farey, random };

struct FamilySpec {
  FamilyKind kind = FamilyKind::interval;
  std::uint64_t n = 1;
  Rational ratio = Rational::from_integer(2);
  std::uint64_t element_bound = 100;
  std::uint64_t seed = 0;
};

/// Inline family syntax: "interval:n=8", "geometric:ratio=3/2,n=5",
/// "farey:n=6", "random:n=10,bound=50,seed=7". Unlisted keys keep defaults.
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);
PositiveSet make_family(const FamilySpec& spec);

struct FareyStatistics {
  std::uint64_t n = 0;
  std::uint64_t farey_size = 0;
  std::uint64_t sumset_size = 0;
  // |{a - b : a, b in F_n, a > b}|; the full difference set has 2x+1 elements
  std::uint64_t positive_difference_count = 0;
  std::uint64_t productset_size = 0;
  std::uint64_t ratioset_size = 0;
  std::uint64_t pair_count = 0;  // |F_n|^2
};

FareyStatistics farey_statistics(std::uint64_t n, std::uint64_t pair_cap = kDefaultPairCap);

}  // namespace sumdiv
