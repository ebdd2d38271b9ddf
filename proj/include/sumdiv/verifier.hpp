#pragma once

/**
 * @file verifier.hpp
 * @brief Exact checks of |A+A|²·|A/A| >= |A|⁴/4 and of each step leading to it.
 *
 * Every inequality with a fractional constant is cleared of denominators
 * (or cubed) and compared in arbitrary-precision integers.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sumdiv/decimal.hpp"
#include "sumdiv/positive_set.hpp"
#include "sumdiv/spectrum.hpp"

namespace sumdiv {

// Bounds of the form |A+A|^2 |AA| >= |A|^4 / (4 ceil(log2 |A|)) only apply to
// sets with at least two elements.
struct LogBoundCheck {
  bool applicable = false;
  bool passes = false;
  std::uint64_t ceil_log2 = 0;
};

struct ReportRatios {
  std::uint64_t productset_size = 0;
  std::uint64_t multiplicative_energy = 0;
  // 4 ceil(log2 n) |A+A|^2 |AA| >= n^4
  LogBoundCheck log_joint_bound;
  // (2 max{|A+A|,|AA|})^3 ceil(log2 n) >= n^4
  LogBoundCheck log_max_bound;
  // |A+A|^2 |A/A| / n^4
  Rational joint_ratio;
  // |A+A|^6 |A/A| / n^8, report only
  Rational sixth_power_ratio;
  std::string sixth_power_ratio_decimal;
  // |A+A| |A/A| / n^(5/2), report only
  std::string five_halves_ratio_decimal;
};

struct VerificationReport {
  std::uint64_t cardinality = 0;
  std::uint64_t sumset_size = 0;
  std::uint64_t ratioset_size = 0;
  std::size_t k = 0;
  std::uint64_t m_k = 0;
  std::uint64_t head_mass = 0;
  std::uint64_t tail_mass = 0;
  mpz_class lhs;         // |A+A|^2 |A/A|
  mpz_class rhs_times4;  // |A|^4
  bool passes_est1 = false;  // |A/A| >= k and 2 m_k k >= |A|^2
  bool passes_est2 = false;  // 2 tail >= |A|^2
  bool passes_est3 = false;  // |A+A|^2 >= m_k tail
  bool passes_theorem = false;  // 4 lhs >= |A|^4
  // The product of the three estimates, divided by m_k·tail, is the theorem.
  bool chain_implies_theorem = false;
  std::uint64_t corollary_lhs = 0;  // max{|A+A|, |A/A|}
  bool passes_corollary = false;    // (2 max)^3 >= |A|^4
  ReportRatios report_ratios;
};

// Throws InvariantViolation when a proved inequality fails or the chain
// product does not reduce to the theorem.
VerificationReport verify_sum_division(const PositiveSet& a,
                                       std::uint64_t pair_cap = kDefaultPairCap,
                                       int precision = kDefaultPrecision);

// Reports without throwing; callers decide what a failed flag means.
VerificationReport compute_report(const PositiveSet& a, std::uint64_t pair_cap = kDefaultPairCap,
                                  int precision = kDefaultPrecision);

struct CorollaryCheck {
  std::uint64_t max_value;
  bool passes;
};
CorollaryCheck corollary_max(const PositiveSet& a, std::uint64_t pair_cap = kDefaultPairCap);
// (2 max)^3 >= n^4 in integers.
bool corollary_holds(std::uint64_t max_value, std::uint64_t n);

struct RadAngCheck {
  std::uint64_t radius_count;
  std::uint64_t angle_count;
  bool passes;
  // radius_count == |Â+Â| and angle_count == |Â/Â| with Â = {a²}
  bool matches_squared_set;
};
RadAngCheck rad_ang_bound(const PositiveSet& a, std::uint64_t pair_cap = kDefaultPairCap);

ReportRatios report_ratios(const PositiveSet& a, std::uint64_t pair_cap = kDefaultPairCap,
                           int precision = kDefaultPrecision);

struct Ray {
  Rational ratio;  // points (a, b) of A×A with a/b = ratio
  std::uint64_t multiplicity;
};

/// Lower-bound witness for |(A×A)+(A×A)| built from rays through the origin.
/// Rays whose multiplicity is at least that of spectrum entry `from_index`
/// are ordered by ratio; for each pair of
/// neighbouring rays every point on one is added to every point on the other.
/// Those sums are pairwise distinct and lie in the sector between the two
/// rays, so their count L' is at most |A+A|².
struct RayCertificate {
  std::vector<Ray> slope_sorted_rays;
  std::size_t selected_from = 0;
  std::uint64_t pair_bound = 0;  // L'
  std::uint64_t direct_grid_size = 0;
  bool distinctness_verified = false;
  bool sectors_verified = false;
  bool bound_holds = false;  // L' <= direct_grid_size
};

// from_index is 1-based into the spectrum order; throws std::out_of_range.
RayCertificate ray_certificate(const PositiveSet& a, std::size_t from_index,
                               std::uint64_t pair_cap = kDefaultPairCap);

std::uint64_t ceil_log2(std::uint64_t n);

}  // namespace sumdiv
