#include "sumdiv/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "sumdiv/errors.hpp"

namespace sumdiv {
namespace {

mpz_class big(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return z;
}

mpz_class ipow(std::uint64_t base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), big(base).get_mpz_t(), e);
  return r;
}

ReportRatios build_ratios(std::uint64_t n, std::uint64_t sum_size, std::uint64_t ratio_size,
                          std::uint64_t product_size, std::uint64_t energy, int precision) {
  ReportRatios r;
  r.productset_size = product_size;
  r.multiplicative_energy = energy;

  const mpz_class n4 = ipow(n, 4);
  if (n >= 2) {
    const std::uint64_t lg = ceil_log2(n);
    r.log_joint_bound = {true, 4 * big(lg) * ipow(sum_size, 2) * big(product_size) >= n4, lg};
    const std::uint64_t mx = std::max(sum_size, product_size);
    r.log_max_bound = {true, ipow(2 * mx, 3) * big(lg) >= n4, lg};
  }

  r.joint_ratio = Rational::from_fraction(ipow(sum_size, 2) * big(ratio_size), n4);
  r.sixth_power_ratio = Rational::from_fraction(ipow(sum_size, 6) * big(ratio_size), ipow(n, 8));
  r.sixth_power_ratio_decimal = to_decimal(r.sixth_power_ratio.value(), precision);
  r.five_halves_ratio_decimal =
      ratio_over_power_five_halves(big(sum_size) * big(ratio_size), big(n), precision);
  return r;
}

void check_consistent(const VerificationReport& r) {
  if (!r.passes_theorem)
    throw InvariantViolation("4|A+A|^2|A/A| >= |A|^4 failed for |A| = " +
                             std::to_string(r.cardinality));
  if (!r.passes_est1 || !r.passes_est2 || !r.passes_est3)
    throw InvariantViolation("an intermediate estimate failed for |A| = " +
                             std::to_string(r.cardinality));
  if (!r.chain_implies_theorem)
    throw InvariantViolation("estimate chain does not reduce to the theorem");
  if (!r.passes_corollary)
    throw InvariantViolation("max{|A+A|,|A/A|} >= |A|^(4/3)/2 failed");
}

}  // namespace

std::uint64_t ceil_log2(std::uint64_t n) {
  std::uint64_t lg = 0;
  while ((std::uint64_t{1} << lg) < n) ++lg;
  return lg;
}

bool corollary_holds(std::uint64_t max_value, std::uint64_t n) {
  return ipow(2 * max_value, 3) >= ipow(n, 4);
}

VerificationReport compute_report(const PositiveSet& a, std::uint64_t pair_cap, int precision) {
  VerificationReport r;
  const std::uint64_t n = a.size();
  r.cardinality = n;
  r.sumset_size = sumset(a, a, pair_cap).size();
  const MultiplicitySpectrum spectrum = ratio_spectrum(a, pair_cap);
  r.ratioset_size = spectrum.size();

  const ThresholdResult t = threshold_index(spectrum);
  r.k = t.k;
  r.m_k = t.m_k;
  r.head_mass = t.head_mass;
  r.tail_mass = t.tail_mass;

  const mpz_class n2 = ipow(n, 2);
  const mpz_class s2 = ipow(r.sumset_size, 2);
  r.lhs = s2 * big(r.ratioset_size);
  r.rhs_times4 = ipow(n, 4);

  // |A/A| >= k >= |A|^2 / (2 m_k)
  const mpz_class est1_lhs = 2 * big(r.m_k) * big(r.ratioset_size);
  r.passes_est1 = r.ratioset_size >= r.k && 2 * big(r.m_k) * big(r.k) >= n2 && est1_lhs >= n2;
  // tail >= |A|^2 / 2
  const mpz_class est2_lhs = 2 * big(r.tail_mass);
  r.passes_est2 = est2_lhs >= n2;
  // |A+A|^2 >= m_k tail
  const mpz_class est3_rhs = big(r.m_k) * big(r.tail_mass);
  r.passes_est3 = s2 >= est3_rhs;
  r.passes_theorem = 4 * r.lhs >= r.rhs_times4;

  // Multiply the three inequalities side by side:
  //   (2 m_k |A/A|)(2 tail)|A+A|^2 >= |A|^2 |A|^2 m_k tail
  // and cancel the positive factor m_k tail on both sides.
  const mpz_class chain_lhs = est1_lhs * est2_lhs * s2;
  const mpz_class chain_rhs = n2 * n2 * est3_rhs;
  const bool chain_holds = chain_lhs >= chain_rhs;
  const bool cancels = chain_lhs == 4 * r.lhs * est3_rhs && chain_rhs == r.rhs_times4 * est3_rhs;
  const bool est_all = r.passes_est1 && r.passes_est2 && r.passes_est3;
  r.chain_implies_theorem = cancels && (!est_all || chain_holds) && (!chain_holds || r.passes_theorem);

  r.corollary_lhs = std::max(r.sumset_size, r.ratioset_size);
  r.passes_corollary = corollary_holds(r.corollary_lhs, n);

  r.report_ratios = build_ratios(n, r.sumset_size, r.ratioset_size,
                                 productset(a, a, pair_cap).size(),
                                 multiplicative_energy(spectrum), precision);
  return r;
}

VerificationReport verify_sum_division(const PositiveSet& a, std::uint64_t pair_cap,
                                       int precision) {
  VerificationReport r = compute_report(a, pair_cap, precision);
  check_consistent(r);
  return r;
}

CorollaryCheck corollary_max(const PositiveSet& a, std::uint64_t pair_cap) {
  const std::uint64_t mx =
      std::max(sumset(a, a, pair_cap).size(), ratioset(a, a, pair_cap).size());
  return {mx, corollary_holds(mx, a.size())};
}

RadAngCheck rad_ang_bound(const PositiveSet& a, std::uint64_t pair_cap) {
  const RadAngSizes sizes = rad_ang_sizes(a, pair_cap);
  const PositiveSet squares = square_set(a);
  const bool matches = sizes.radius_count == sumset(squares, squares, pair_cap).size() &&
                       sizes.angle_count == ratioset(squares, squares, pair_cap).size();
  return {sizes.radius_count, sizes.angle_count,
          corollary_holds(std::max(sizes.radius_count, sizes.angle_count), a.size()), matches};
}

ReportRatios report_ratios(const PositiveSet& a, std::uint64_t pair_cap, int precision) {
  const MultiplicitySpectrum spectrum = ratio_spectrum(a, pair_cap);
  return build_ratios(a.size(), sumset(a, a, pair_cap).size(), spectrum.size(),
                      productset(a, a, pair_cap).size(), multiplicative_energy(spectrum),
                      precision);
}

RayCertificate ray_certificate(const PositiveSet& a, std::size_t from_index,
                               std::uint64_t pair_cap) {
  const MultiplicitySpectrum spectrum = ratio_spectrum(a, pair_cap);
  if (from_index < 1 || from_index > spectrum.size())
    throw std::out_of_range("ray index " + std::to_string(from_index) + " outside 1.." +
                            std::to_string(spectrum.size()));

  RayCertificate cert;
  cert.selected_from = from_index;
  const auto entries = spectrum.entries();
  // Every ray at least as heavy as entry `from_index`, including ties that
  // the ratio tie-break happened to place before it.
  const std::uint64_t threshold = entries[from_index - 1].multiplicity;
  for (const auto& e : entries)
    if (e.multiplicity >= threshold) cert.slope_sorted_rays.push_back({e.ratio, e.multiplicity});
  std::sort(cert.slope_sorted_rays.begin(), cert.slope_sorted_rays.end(),
            [](const Ray& l, const Ray& r) { return l.ratio < r.ratio; });

  const auto& rays = cert.slope_sorted_rays;
  for (std::size_t j = 0; j + 1 < rays.size(); ++j)
    cert.pair_bound += rays[j].multiplicity * rays[j + 1].multiplicity;
  if (cert.pair_bound > pair_cap)
    throw CapExceeded("ray certificate needs " + std::to_string(cert.pair_bound) +
                      " planar sums, cap is " + std::to_string(pair_cap));

  // Points of A×A keyed by the ratio of their coordinates.
  using Point = std::pair<Rational, Rational>;
  std::vector<std::tuple<Rational, Rational, Rational>> by_ratio;
  by_ratio.reserve(a.size() * a.size());
  for (const auto& x : a)
    for (const auto& y : a) by_ratio.emplace_back(x / y, x, y);
  std::sort(by_ratio.begin(), by_ratio.end());
  auto points_on = [&](const Rational& z) {
    std::vector<Point> pts;
    auto it = std::lower_bound(by_ratio.begin(), by_ratio.end(), z,
                               [](const auto& t, const Rational& v) { return std::get<0>(t) < v; });
    for (; it != by_ratio.end() && std::get<0>(*it) == z; ++it)
      pts.emplace_back(std::get<1>(*it), std::get<2>(*it));
    return pts;
  };

  std::vector<Point> sums;
  sums.reserve(cert.pair_bound);
  bool in_sector = true;
  for (std::size_t j = 0; j + 1 < rays.size(); ++j) {
    const auto lower = points_on(rays[j].ratio);
    const auto upper = points_on(rays[j + 1].ratio);
    if (lower.size() != rays[j].multiplicity || upper.size() != rays[j + 1].multiplicity)
      throw InvariantViolation("ray point count disagrees with the spectrum");
    for (const auto& p : lower) {
      for (const auto& q : upper) {
        Point s{p.first + q.first, p.second + q.second};
        const Rational slope = s.first / s.second;
        in_sector = in_sector && rays[j].ratio <= slope && slope <= rays[j + 1].ratio;
        sums.push_back(std::move(s));
      }
    }
  }
  std::sort(sums.begin(), sums.end());
  cert.distinctness_verified = std::adjacent_find(sums.begin(), sums.end()) == sums.end();
  cert.sectors_verified = in_sector;
  cert.direct_grid_size = grid_sumset_size(a, pair_cap);
  cert.bound_holds = cert.pair_bound <= cert.direct_grid_size;
  return cert;
}

}  // namespace sumdiv
