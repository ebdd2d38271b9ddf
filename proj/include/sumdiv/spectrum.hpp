#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumdiv/positive_set.hpp"

namespace sumdiv {

struct SpectrumEntry {
  Rational ratio;
  std::uint64_t multiplicity;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Distinct ratios a/b over the ordered pairs of A×A with their
/// representation counts, sorted by multiplicity ascending and then by
/// ratio ascending. The multiplicities sum to |A|².
class MultiplicitySpectrum {
 public:
  MultiplicitySpectrum(std::vector<SpectrumEntry> entries, std::uint64_t source_cardinality);

  std::span<const SpectrumEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t source_cardinality() const { return source_cardinality_; }
  std::uint64_t total_mass() const { return source_cardinality_ * source_cardinality_; }
  std::vector<std::uint64_t> multiplicities() const;

 private:
  std::vector<SpectrumEntry> entries_;
  std::uint64_t source_cardinality_;
};

MultiplicitySpectrum ratio_spectrum(const PositiveSet& a, std::uint64_t pair_cap = kDefaultPairCap);

struct ThresholdResult {
  std::size_t k;  // 1-based
  std::uint64_t m_k;
  std::uint64_t head_mass;  // sum of m_i for i < k
  std::uint64_t tail_mass;  // sum of m_i for i >= k

  friend bool operator==(const ThresholdResult&, const ThresholdResult&) = default;
};

// The unique k with 2·head < total <= 2·(head + m_k). `multiplicities` must be
// nondecreasing, positive and sum to `total_mass`.
ThresholdResult threshold_index(std::span<const std::uint64_t> multiplicities,
                                std::uint64_t total_mass);
ThresholdResult threshold_index(const MultiplicitySpectrum& s);

// Sum of m_i for i = k..y (1-based). Throws std::out_of_range unless 1 <= k <= y.
std::uint64_t tail_mass(const MultiplicitySpectrum& s, std::size_t k);

// Sum of m_i². Auxiliary; not used by the estimate chain.
std::uint64_t multiplicative_energy(const MultiplicitySpectrum& s);

// Header "ratio,multiplicity,cumulative_mass", one row per entry in spectrum order.
std::string spectrum_csv(const MultiplicitySpectrum& s);

}  // namespace sumdiv
