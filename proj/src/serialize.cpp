#include "sumdiv/serialize.hpp"

namespace sumdiv {
namespace {

Json log_bound_json(const LogBoundCheck& c) {
  Json j;
  j["applicable"] = c.applicable;
  j["ceil_log2"] = c.applicable ? Json(c.ceil_log2) : Json(nullptr);
  j["passes"] = c.applicable ? Json(c.passes) : Json(nullptr);
  return j;
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

Json set_to_json(const PositiveSet& a) {
  Json arr = Json::array();
  for (const auto& x : a) arr.push_back(x.str());
  return arr;
}

Json to_json(const ReportRatios& r) {
  Json j;
  j["productset_size"] = r.productset_size;
  j["multiplicative_energy"] = r.multiplicative_energy;
  j["log_joint_bound"] = log_bound_json(r.log_joint_bound);
  j["log_max_bound"] = log_bound_json(r.log_max_bound);
  j["joint_ratio"] = {{"exact", r.joint_ratio.str()},
                      {"decimal", to_decimal(r.joint_ratio.value())}};
  j["sixth_power_ratio"] = {{"exact", r.sixth_power_ratio.str()},
                            {"decimal", r.sixth_power_ratio_decimal},
                            {"report_only", true}};
  j["five_halves_ratio"] = {{"decimal", r.five_halves_ratio_decimal}, {"report_only", true}};
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["cardinality"] = r.cardinality;
  j["sumset_size"] = r.sumset_size;
  j["ratioset_size"] = r.ratioset_size;
  j["k"] = r.k;
  j["m_k"] = r.m_k;
  j["head_mass"] = r.head_mass;
  j["tail_mass"] = r.tail_mass;
  j["lhs"] = r.lhs.get_str();
  j["rhs_times4"] = r.rhs_times4.get_str();
  j["passes_est1"] = r.passes_est1;
  j["passes_est2"] = r.passes_est2;
  j["passes_est3"] = r.passes_est3;
  j["passes_theorem"] = r.passes_theorem;
  j["chain_implies_theorem"] = r.chain_implies_theorem;
  j["corollary_lhs"] = r.corollary_lhs;
  j["passes_corollary"] = r.passes_corollary;
  j["report_ratios"] = to_json(r.report_ratios);
  return j;
}

Json to_json(const RayCertificate& c) {
  Json rays = Json::array();
  for (const auto& r : c.slope_sorted_rays)
    rays.push_back({{"ratio", r.ratio.str()}, {"multiplicity", r.multiplicity}});
  Json j;
  j["selected_from"] = c.selected_from;
  j["slope_sorted_rays"] = std::move(rays);
  j["pair_bound"] = c.pair_bound;
  j["direct_grid_size"] = c.direct_grid_size;
  j["distinctness_verified"] = c.distinctness_verified;
  j["sectors_verified"] = c.sectors_verified;
  j["bound_holds"] = c.bound_holds;
  return j;
}

Json to_json(const MultiplicitySpectrum& s) {
  Json entries = Json::array();
  std::uint64_t cumulative = 0;
  for (const auto& e : s.entries()) {
    cumulative += e.multiplicity;
    entries.push_back({{"ratio", e.ratio.str()},
                       {"multiplicity", e.multiplicity},
                       {"cumulative_mass", cumulative}});
  }
  const ThresholdResult t = threshold_index(s);
  Json j;
  j["cardinality"] = s.source_cardinality();
  j["total_mass"] = s.total_mass();
  j["entries"] = std::move(entries);
  j["threshold"] = {{"k", t.k}, {"m_k", t.m_k}, {"head_mass", t.head_mass},
                    {"tail_mass", t.tail_mass}};
  return j;
}

Json to_json(const FareyStatistics& s, int precision) {
  auto frac = [&](std::uint64_t v) {
    return to_decimal(mpq_class(mpz_class(static_cast<unsigned long>(v)),
                                mpz_class(static_cast<unsigned long>(s.pair_count))),
                      precision);
  };
  Json j;
  j["n"] = s.n;
  j["farey_size"] = s.farey_size;
  j["pair_count"] = s.pair_count;
  j["sumset_size"] = s.sumset_size;
  j["positive_difference_count"] = s.positive_difference_count;
  j["difference_set_size"] = 2 * s.positive_difference_count + 1;
  j["productset_size"] = s.productset_size;
  j["ratioset_size"] = s.ratioset_size;
  j["ratios_to_pair_count"] = {{"sumset", frac(s.sumset_size)},
                               {"positive_difference", s.positive_difference_count == 0
                                                           ? std::string("0")
                                                           : frac(s.positive_difference_count)},
                               {"productset", frac(s.productset_size)},
                               {"ratioset", frac(s.ratioset_size)}};
  return j;
}

Json to_json(const SearchConfig& config, const SearchResult& result, int precision) {
  Json cfg;
  cfg["objective"] = std::string(to_string(config.objective));
  cfg["mode"] = std::string(to_string(config.mode));
  cfg["cardinality"] = config.cardinality;
  if (config.mode == SearchMode::exhaustive) {
    cfg["universe"] = config.universe;
    cfg["evaluation_budget"] = config.evaluation_budget;
  } else {
    cfg["seed"] = config.seed;
    cfg["iterations"] = config.iterations;
    cfg["element_bound"] = config.element_bound;
  }
  Json trace = Json::array();
  for (const auto& t : result.trace)
    trace.push_back({{"evaluation", t.evaluation}, {"value", t.value.str()},
                     {"set", set_to_json(t.set)}});
  Json j;
  j["config"] = std::move(cfg);
  j["best_set"] = set_to_json(result.best_set);
  j["best_value"] = result.best_value.str();
  j["best_value_decimal"] = to_decimal(result.best_value.value(), precision);
  j["evaluations"] = result.evaluations;
  j["trace"] = std::move(trace);
  return j;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) line += ',';
    line += csv_field(fields[i]);
  }
  return line;
}

const std::vector<std::string>& verify_csv_columns() {
  static const std::vector<std::string> cols = {
      "input",        "cardinality", "sumset_size", "ratioset_size",   "k",
      "m_k",          "tail_mass",   "lhs",         "rhs_times4",      "passes_est1",
      "passes_est2",  "passes_est3", "passes_theorem", "corollary_lhs", "passes_corollary",
      "error"};
  return cols;
}

std::vector<std::string> verify_csv_row(std::string_view input, const VerificationReport& r) {
  return {std::string(input),           std::to_string(r.cardinality),
          std::to_string(r.sumset_size), std::to_string(r.ratioset_size),
          std::to_string(r.k),           std::to_string(r.m_k),
          std::to_string(r.tail_mass),   r.lhs.get_str(),
          r.rhs_times4.get_str(),        flag(r.passes_est1),
          flag(r.passes_est2),           flag(r.passes_est3),
          flag(r.passes_theorem),        std::to_string(r.corollary_lhs),
          flag(r.passes_corollary),      ""};
}

SetStats compute_stats(const PositiveSet& a, std::uint64_t pair_cap, int precision) {
  const RadAngSizes ra = rad_ang_sizes(a, pair_cap);
  SetStats s{a.size(), sumset(a, a, pair_cap).size(), 0, ra.angle_count, ra.radius_count,
             ra.angle_count, report_ratios(a, pair_cap, precision)};
  s.productset_size = s.ratios.productset_size;
  return s;
}

Json to_json(const SetStats& s) {
  Json j;
  j["cardinality"] = s.cardinality;
  j["sumset_size"] = s.sumset_size;
  j["productset_size"] = s.productset_size;
  j["ratioset_size"] = s.ratioset_size;
  j["radius_count"] = s.radius_count;
  j["angle_count"] = s.angle_count;
  j["report_ratios"] = to_json(s.ratios);
  return j;
}

const std::vector<std::string>& stats_csv_columns() {
  static const std::vector<std::string> cols = {
      "input",        "cardinality", "sumset_size",      "productset_size",
      "ratioset_size", "radius_count", "angle_count", "joint_ratio",
      "sixth_power_ratio", "five_halves_ratio", "error"};
  return cols;
}

std::vector<std::string> stats_csv_row(std::string_view input, const SetStats& s) {
  return {std::string(input),
          std::to_string(s.cardinality),
          std::to_string(s.sumset_size),
          std::to_string(s.productset_size),
          std::to_string(s.ratioset_size),
          std::to_string(s.radius_count),
          std::to_string(s.angle_count),
          s.ratios.joint_ratio.str(),
          s.ratios.sixth_power_ratio_decimal,
          s.ratios.five_halves_ratio_decimal,
          ""};
}

}  // namespace sumdiv
