#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "sumdiv/rational.hpp"

namespace sumdiv {

inline constexpr std::uint64_t kDefaultPairCap = 100'000'000;

// Pair cap from SUMDIV_PAIR_CAP when set to a positive integer, else kDefaultPairCap.
std::uint64_t default_pair_cap();

/// A finite, nonempty set of positive rationals held in strictly increasing
/// order. Immutable after construction.
class PositiveSet {
 public:
  // Sorts and deduplicates; throws InputError on empty input.
  static PositiveSet from_values(std::vector<Rational> values);
  static PositiveSet from_integers(std::span<const std::uint64_t> values);

  std::span<const Rational> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Rational& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const PositiveSet&, const PositiveSet&) = default;
  // Lexicographic on the ascending element sequence.
  friend auto operator<=>(const PositiveSet& a, const PositiveSet& b) {
    return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                  b.elements_.begin(), b.elements_.end());
  }

 private:
  explicit PositiveSet(std::vector<Rational> sorted_unique)
      : elements_(std::move(sorted_unique)) {}

  std::vector<Rational> elements_;
};

inline PositiveSet make_set(std::vector<Rational> values) {
  return PositiveSet::from_values(std::move(values));
}

// Throws CapExceeded if |A|·|B| > cap.
PositiveSet sumset(const PositiveSet& a, const PositiveSet& b,
                   std::uint64_t pair_cap = kDefaultPairCap);
PositiveSet productset(const PositiveSet& a, const PositiveSet& b,
                       std::uint64_t pair_cap = kDefaultPairCap);
PositiveSet ratioset(const PositiveSet& a, const PositiveSet& b,
                     std::uint64_t pair_cap = kDefaultPairCap);

PositiveSet square_set(const PositiveSet& a);

/// |(A×A)+(A×A)| by building every planar sum (a1+a2, b1+b2) explicitly.
/// Needs |A|^4 pairs under the cap.
std::uint64_t grid_sumset_size(const PositiveSet& a, std::uint64_t pair_cap = kDefaultPairCap);

struct RadAngSizes {
  std::uint64_t radius_count;  // distinct a²+b²
  std::uint64_t angle_count;   // distinct a/b
};
RadAngSizes rad_ang_sizes(const PositiveSet& a, std::uint64_t pair_cap = kDefaultPairCap);

// Set file: one rational per line, '#' starts a comment line, blank lines
// ignored. Errors carry the 1-based line number.
PositiveSet read_set(std::istream& in);
PositiveSet read_set_file(const std::filesystem::path& path);
std::string format_set(const PositiveSet& a);

}  // namespace sumdiv
