#pragma once

// JSON documents and CSV rows for the command-line tool. Field names and
// column orders here are a stable interface; see README.md.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sumdiv/families.hpp"
#include "sumdiv/search.hpp"
#include "sumdiv/verifier.hpp"

namespace sumdiv {

using Json = nlohmann::ordered_json;

Json to_json(const ReportRatios& r);
Json to_json(const VerificationReport& r);
Json to_json(const RayCertificate& c);
Json to_json(const MultiplicitySpectrum& s);
Json to_json(const FareyStatistics& s, int precision = kDefaultPrecision);
Json to_json(const SearchConfig& config, const SearchResult& result,
             int precision = kDefaultPrecision);
Json set_to_json(const PositiveSet& a);

// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

const std::vector<std::string>& verify_csv_columns();
std::vector<std::string> verify_csv_row(std::string_view input, const VerificationReport& r);

struct SetStats {
  std::uint64_t cardinality;
  std::uint64_t sumset_size;
  std::uint64_t productset_size;
  std::uint64_t ratioset_size;
  std::uint64_t radius_count;
  std::uint64_t angle_count;
  ReportRatios ratios;
};
SetStats compute_stats(const PositiveSet& a, std::uint64_t pair_cap, int precision);
Json to_json(const SetStats& s);
const std::vector<std::string>& stats_csv_columns();
std::vector<std::string> stats_csv_row(std::string_view input, const SetStats& s);

std::string join_csv(const std::vector<std::string>& fields);

}  // namespace sumdiv
