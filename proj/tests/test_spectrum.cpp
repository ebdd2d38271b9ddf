#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "oracle.hpp"
#include "sumdiv/errors.hpp"
#include "sumdiv/spectrum.hpp"

using namespace sumdiv;

namespace {

PositiveSet ints(std::initializer_list<std::uint64_t> xs) {
  std::vector<std::uint64_t> v(xs);
  return PositiveSet::from_integers(v);
}

using U = std::vector<std::uint64_t>;

}  // namespace

TEST_CASE("spectrum of {1,2,4}") {
  const auto s = ratio_spectrum(ints({1, 2, 4}));
  CHECK(s.multiplicities() == U{1, 1, 2, 2, 3});
  std::vector<std::string> ratios;
  for (const auto& e : s.entries()) ratios.push_back(e.ratio.str());
  CHECK(ratios == std::vector<std::string>{"1/4", "4", "1/2", "2", "1"});
  CHECK(s.total_mass() == 9);

  const auto t = threshold_index(s);
  CHECK(t == ThresholdResult{4, 2, 4, 5});
  CHECK(tail_mass(s, 4) == 5);
  CHECK(tail_mass(s, 1) == 9);
  CHECK(tail_mass(s, 5) == 3);
  CHECK_THROWS_AS(tail_mass(s, 0), std::out_of_range);
  CHECK_THROWS_AS(tail_mass(s, 6), std::out_of_range);
  CHECK(multiplicative_energy(s) == 19);
}

TEST_CASE("spectrum of {1,2,3} and of a singleton") {
  const auto s = ratio_spectrum(ints({1, 2, 3}));
  CHECK(s.multiplicities() == U{1, 1, 1, 1, 1, 1, 3});
  CHECK(threshold_index(s) == ThresholdResult{5, 1, 4, 5});

  const auto one = ratio_spectrum(make_set({parse_rational("5/7")}));
  REQUIRE(one.size() == 1);
  CHECK(one.entries()[0].ratio.str() == "1");
  CHECK(one.entries()[0].multiplicity == 1);
  CHECK(threshold_index(one) == ThresholdResult{1, 1, 0, 1});
}

TEST_CASE("spectrum CSV") {
  CHECK(spectrum_csv(ratio_spectrum(ints({1, 2, 4}))) ==
        "ratio,multiplicity,cumulative_mass\n1/4,1,1\n4,1,2\n1/2,2,4\n2,2,6\n1,3,9\n");
}

TEST_CASE("spectrum constructor rejects broken invariants") {
  auto e = [](const char* r, std::uint64_t m) { return SpectrumEntry{parse_rational(r), m}; };
  CHECK_THROWS_AS(MultiplicitySpectrum({e("2", 2), e("1", 1)}, 1), InputError);
  CHECK_THROWS_AS(MultiplicitySpectrum({e("2", 1), e("1", 1)}, 1), InputError);
  CHECK_THROWS_AS(MultiplicitySpectrum({e("1", 3)}, 1), InvariantViolation);
  CHECK_THROWS_AS(MultiplicitySpectrum({}, 1), InputError);
}

TEST_CASE("property: mass identity, threshold contract, oracle agreement") {
  const auto corpus = testing_corpus::make(300, 40, 4242);
  for (const auto& a : corpus) {
    const std::uint64_t n = a.size();
    const auto s = ratio_spectrum(a);
    const auto m = s.multiplicities();
    std::uint64_t mass = 0;
    for (auto x : m) mass += x;
    CHECK(mass == n * n);
    CHECK(std::is_sorted(m.begin(), m.end()));

    const auto o = oracle::from_set(a);
    CHECK(m == oracle::multiplicities(o));
    const auto t = threshold_index(s);
    const auto ot = oracle::threshold(oracle::multiplicities(o), n);
    CHECK(t.k == ot.k);
    CHECK(t.m_k == ot.m_k);
    CHECK(t.head_mass == ot.head);
    CHECK(t.tail_mass == ot.tail);

    CHECK(2 * t.head_mass < n * n);
    CHECK(n * n <= 2 * (t.head_mass + t.m_k));
    CHECK(t.head_mass + t.tail_mass == n * n);
    CHECK(2 * tail_mass(s, t.k) >= n * n);

    // Ratio 1 carries the diagonal.
    for (const auto& e : s.entries())
      if (e.ratio == Rational()) CHECK(e.multiplicity >= n);
  }
}

TEST_CASE("property: threshold is independent of how ties are ordered") {
  const auto corpus = testing_corpus::make(200, 30, 99);
  std::mt19937_64 rng(5);
  for (const auto& a : corpus) {
    const auto s = ratio_spectrum(a);
    std::vector<SpectrumEntry> shuffled(s.entries().begin(), s.entries().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::stable_sort(shuffled.begin(), shuffled.end(),
                     [](const auto& l, const auto& r) { return l.multiplicity < r.multiplicity; });
    std::vector<std::uint64_t> m;
    for (const auto& e : shuffled) m.push_back(e.multiplicity);
    CHECK(threshold_index(m, s.total_mass()) == threshold_index(s));
  }
}

TEST_CASE("property: spectrum is dilation invariant") {
  const auto corpus = testing_corpus::make(60, 20, 7);
  const Rational c = parse_rational("17/5");
  for (const auto& a : corpus) {
    std::vector<Rational> scaled;
    for (const auto& x : a) scaled.push_back(x * c);
    const auto s1 = ratio_spectrum(a);
    const auto s2 = ratio_spectrum(make_set(scaled));
    CHECK(std::equal(s1.entries().begin(), s1.entries().end(), s2.entries().begin(),
                     s2.entries().end()));
  }
}
