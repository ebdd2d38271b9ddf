#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracle.hpp"
#include "sumdiv/errors.hpp"
#include "sumdiv/families.hpp"

using namespace sumdiv;

namespace {

std::vector<std::string> strs(const PositiveSet& a) {
  std::vector<std::string> out;
  for (const auto& x : a) out.push_back(x.str());
  return out;
}

using Strs = std::vector<std::string>;

}  // namespace

TEST_CASE("interval and geometric sets") {
  CHECK(strs(interval_set(3)) == Strs{"1", "2", "3"});
  CHECK(strs(interval_set(1)) == Strs{"1"});
  CHECK_THROWS_AS(interval_set(0), InputError);
  CHECK(strs(geometric_set(Rational::from_integer(2), 4)) == Strs{"1", "2", "4", "8"});
  CHECK(strs(geometric_set(parse_rational("1/3"), 3)) == Strs{"1/9", "1/3", "1"});
  CHECK_THROWS_AS(geometric_set(Rational::from_integer(1), 3), InputError);
}

TEST_CASE("Farey fractions") {
  CHECK(strs(farey_set(3)) == Strs{"1/3", "1/2", "2/3", "1"});
  CHECK(farey_set(5).size() == 10);
  CHECK(strs(farey_set(1)) == Strs{"1"});
  CHECK(farey_size(5) == 10);
  CHECK(farey_size(1) == 1);
  CHECK(farey_size(10) == 32);
  CHECK(farey_size(100) == 3044);
  CHECK_THROWS_AS(farey_set(0), InputError);

  // Brute-force totients.
  const auto phi = totients(300);
  for (std::uint32_t q = 1; q <= 300; ++q) {
    std::uint32_t count = 0;
    for (std::uint32_t a = 1; a <= q; ++a) count += std::gcd(a, q) == 1;
    CHECK(phi[q] == count);
  }
  for (std::uint64_t n = 1; n <= 120; ++n) CHECK(farey_size(n) == farey_set(n).size());

  const double ratio = static_cast<double>(farey_size(1000)) / farey_asymptotic(1000);
  CHECK(std::fabs(ratio - 1.0) < 0.005);
}

TEST_CASE("multiplication table count") {
  CHECK(mult_table_count(1) == 1);
  CHECK(mult_table_count(4) == 9);
  CHECK(mult_table_count(5) == 14);
  CHECK(mult_table_count(100) == 2906);
  for (std::uint64_t n = 1; n <= 60; ++n) CHECK(mult_table_count(n) == oracle::mult_table(n));
  CHECK_THROWS_AS(mult_table_count(1000, 1000), CapExceeded);
  CHECK_THROWS_AS(mult_table_count(0), InputError);

  std::uint64_t prev = 0;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto m = mult_table_count(n);
    CHECK(m >= prev);
    CHECK(m <= n * (n + 1) / 2);
    prev = m;
  }
}

TEST_CASE("beta constant") {
  const long double beta = beta_constant();
  CHECK(std::fabs(static_cast<double>(beta) - 0.0860713) < 5e-8);
  const long double c = 1.0L - beta;
  CHECK(c > 0.91L);
  CHECK(c < 0.92L);
  CHECK(beta > 0.0L);
  CHECK(beta < 1.0L);
}

TEST_CASE("random sets are reproducible and respect bounds") {
  const RandomSetSpec spec{20, 30, 123};
  const auto a = random_set(spec);
  CHECK(a.size() == 20);
  CHECK(a == random_set(spec));
  CHECK(a != random_set({20, 30, 124}));
  for (const auto& x : a) {
    CHECK(x.numerator() <= 30);
    CHECK(x.denominator() <= 30);
  }
  // All 3 distinct values with parts <= 2: 1/2, 1, 2 (dense path).
  CHECK(strs(random_set({3, 2, 9})) == Strs{"1/2", "1", "2"});
  CHECK_THROWS_AS(random_set({4, 2, 9}), InputError);
  CHECK_THROWS_AS(random_set({0, 2, 9}), InputError);
  CHECK(distinct_fraction_count(1) == 1);
  CHECK(distinct_fraction_count(2) == 3);
  CHECK(distinct_fraction_count(3) == 7);
}

TEST_CASE("family spec parsing") {
  const auto g = parse_family_spec("geometric:ratio=3/2,n=5");
  CHECK(g.kind == FamilyKind::geometric);
  CHECK(g.n == 5);
  CHECK(g.ratio.str() == "3/2");
  CHECK(format_family_spec(g) == "geometric:ratio=3/2,n=5");
  const auto r = parse_family_spec("random:n=10,bound=50,seed=7");
  CHECK(format_family_spec(r) == "random:n=10,bound=50,seed=7");
  CHECK(make_family(r) == random_set({10, 50, 7}));
  CHECK(make_family(parse_family_spec("farey:n=3")).size() == 4);
  CHECK(make_family(parse_family_spec("interval:n=8")).size() == 8);
  CHECK_THROWS_AS(parse_family_spec("cantor:n=3"), InputError);
  CHECK_THROWS_AS(parse_family_spec("interval:n=0"), InputError);
  CHECK_THROWS_AS(parse_family_spec("interval:n=x"), InputError);
  CHECK_THROWS_AS(parse_family_spec("interval:m=3"), InputError);
  CHECK_THROWS_AS(parse_family_spec("geometric:ratio=1,n=3"), InputError);
}

TEST_CASE("Farey statistics") {
  const auto one = farey_statistics(1);
  CHECK(one.sumset_size == 1);
  CHECK(one.productset_size == 1);
  CHECK(one.ratioset_size == 1);
  CHECK(one.positive_difference_count == 0);

  const auto two = farey_statistics(2);
  CHECK(two.farey_size == 2);
  CHECK(two.sumset_size == 3);
  CHECK(two.productset_size == 3);
  CHECK(two.ratioset_size == 3);
  CHECK(two.positive_difference_count == 1);

  const auto five = farey_statistics(5);
  CHECK(five.sumset_size == 43);
  CHECK(five.positive_difference_count == 22);
  CHECK(five.productset_size == 38);
  CHECK(five.ratioset_size == 45);

  const auto thirty = farey_statistics(30);
  CHECK(thirty.pair_count == 77284);
  CHECK(thirty.sumset_size == 30153);
  CHECK(thirty.positive_difference_count == 15083);
  CHECK(thirty.productset_size == 12977);
  CHECK(thirty.ratioset_size == 21491);
  CHECK(thirty.sumset_size < thirty.pair_count);
  CHECK(2 * thirty.positive_difference_count + 1 < thirty.pair_count);

  CHECK_THROWS_AS(farey_statistics(30, 1000), CapExceeded);
}
