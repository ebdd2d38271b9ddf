#include "sumdiv/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sumdiv/errors.hpp"

namespace sumdiv {

MultiplicitySpectrum::MultiplicitySpectrum(std::vector<SpectrumEntry> entries,
                                           std::uint64_t source_cardinality)
    : entries_(std::move(entries)), source_cardinality_(source_cardinality) {
  if (entries_.empty() || source_cardinality_ == 0)
    throw InputError("a spectrum needs at least one entry");
  std::uint64_t mass = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.multiplicity == 0) throw InputError("spectrum multiplicities must be positive");
    if (i > 0) {
      const auto& prev = entries_[i - 1];
      if (prev.multiplicity > e.multiplicity ||
          (prev.multiplicity == e.multiplicity && !(prev.ratio < e.ratio)))
        throw InputError("spectrum entries are not in (multiplicity, ratio) order");
    }
    mass += e.multiplicity;
  }
  if (mass != total_mass())
    throw InvariantViolation("spectrum mass " + std::to_string(mass) + " != |A|^2 = " +
                             std::to_string(total_mass()));
}

std::vector<std::uint64_t> MultiplicitySpectrum::multiplicities() const {
  std::vector<std::uint64_t> m;
  m.reserve(entries_.size());
  for (const auto& e : entries_) m.push_back(e.multiplicity);
  return m;
}

MultiplicitySpectrum ratio_spectrum(const PositiveSet& a, std::uint64_t pair_cap) {
  const std::uint64_t n = a.size();
  if (n * n > pair_cap)
    throw CapExceeded("ratio spectrum needs " + std::to_string(n * n) + " pairs, cap is " +
                      std::to_string(pair_cap));
  std::vector<Rational> ratios;
  ratios.reserve(n * n);
  for (const auto& x : a)
    for (const auto& y : a) ratios.push_back(x / y);
  std::sort(ratios.begin(), ratios.end());

  std::vector<SpectrumEntry> entries;
  for (std::size_t i = 0; i < ratios.size();) {
    std::size_t j = i + 1;
    while (j < ratios.size() && ratios[j] == ratios[i]) ++j;
    entries.push_back({std::move(ratios[i]), j - i});
    i = j;
  }
  // Already ratio-ascending; a stable sort keeps that as the tie-break.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& l, const SpectrumEntry& r) {
                     return l.multiplicity < r.multiplicity;
                   });
  return MultiplicitySpectrum(std::move(entries), n);
}

ThresholdResult threshold_index(std::span<const std::uint64_t> multiplicities,
                                std::uint64_t total_mass) {
  std::uint64_t head = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    const std::uint64_t m = multiplicities[i];
    if (2 * (head + m) >= total_mass) return {i + 1, m, head, total_mass - head};
    head += m;
  }
  throw InputError("multiplicities do not reach half of the total mass");
}

ThresholdResult threshold_index(const MultiplicitySpectrum& s) {
  const auto m = s.multiplicities();
  return threshold_index(m, s.total_mass());
}

std::uint64_t tail_mass(const MultiplicitySpectrum& s, std::size_t k) {
  if (k < 1 || k > s.size())
    throw std::out_of_range("threshold index " + std::to_string(k) + " outside 1.." +
                            std::to_string(s.size()));
  const auto e = s.entries();
  return std::accumulate(e.begin() + static_cast<std::ptrdiff_t>(k - 1), e.end(),
                         std::uint64_t{0},
                         [](std::uint64_t acc, const SpectrumEntry& x) { return acc + x.multiplicity; });
}

std::uint64_t multiplicative_energy(const MultiplicitySpectrum& s) {
  std::uint64_t energy = 0;
  for (const auto& e : s.entries()) energy += e.multiplicity * e.multiplicity;
  return energy;
}

std::string spectrum_csv(const MultiplicitySpectrum& s) {
  std::ostringstream out;
  out << "ratio,multiplicity,cumulative_mass\n";
  std::uint64_t cumulative = 0;
  for (const auto& e : s.entries()) {
    cumulative += e.multiplicity;
    out << e.ratio.str() << ',' << e.multiplicity << ',' << cumulative << '\n';
  }
  return out.str();
}

}  // namespace sumdiv
