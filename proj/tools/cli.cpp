#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "sumdiv/errors.hpp"
#include "sumdiv/families.hpp"
#include "sumdiv/search.hpp"
#include "sumdiv/serialize.hpp"
#include "sumdiv/spectrum.hpp"
#include "sumdiv/verifier.hpp"

namespace sumdiv::cli {
namespace {

struct Common {
  std::string format;
  std::uint64_t pair_cap = default_pair_cap();
  int precision = kDefaultPrecision;
};

struct Inputs {
  std::vector<std::string> files;
  std::vector<std::string> families;
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
};

struct Source {
  std::string label;
  std::function<PositiveSet()> load;
};

int code_for(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const CapExceeded&) {
    return kCapExceeded;
  } catch (const InvariantViolation&) {
    return kInvariantViolation;
  } catch (...) {
    return kInputError;
  }
}

std::string message_of(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const std::exception& ex) {
    return ex.what();
  } catch (...) {
    return "unknown error";
  }
}

void add_common(CLI::App* cmd, Common& c, const char* default_format) {
  c.format = default_format;
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--pair-cap", c.pair_cap, "Maximum pairs a pairwise operation may enumerate")
      ->capture_default_str();
  cmd->add_option("--precision", c.precision, "Significant digits of decimal renderings")
      ->check(CLI::Range(1, 100))
      ->capture_default_str();
}

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("files", in.files, "Set files (one rational per line)");
  cmd->add_option("--family", in.families,
                  "Inline family, e.g. interval:n=8, geometric:ratio=2,n=5, farey:n=6, "
                  "random:n=10,bound=50,seed=7");
  cmd->add_option("--count", in.count, "Number of random sets per random family (seeds advance by 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", in.seed, "Override the seed of random families");
}

std::vector<Source> collect(const Inputs& in) {
  std::vector<Source> sources;
  for (const auto& f : in.files)
    sources.push_back({f, [f] { return read_set_file(f); }});
  for (const auto& text : in.families) {
    FamilySpec spec = parse_family_spec(text);
    if (spec.kind != FamilyKind::random) {
      sources.push_back({format_family_spec(spec), [spec] { return make_family(spec); }});
      continue;
    }
    if (in.seed) spec.seed = *in.seed;
    for (std::uint64_t i = 0; i < in.count; ++i) {
      FamilySpec s = spec;
      s.seed = spec.seed + i;
      sources.push_back({format_family_spec(s), [s] { return make_family(s); }});
    }
  }
  if (sources.empty()) throw InputError("no input: pass set files or --family");
  return sources;
}

struct Range {
  std::uint64_t first;
  std::uint64_t last;
};

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw InputError("expected a positive integer, got '" + std::string(s) + "'");
  return v;
}

Range parse_range(std::string_view s) {
  if (const auto dots = s.find(".."); dots != std::string_view::npos) {
    Range r{parse_u64(s.substr(0, dots)), parse_u64(s.substr(dots + 2))};
    if (r.last < r.first) throw InputError("empty range '" + std::string(s) + "'");
    return r;
  }
  const auto v = parse_u64(s);
  return {v, v};
}

std::vector<std::uint64_t> expand(const Range& r, bool geometric, std::uint64_t step) {
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = r.first; n <= r.last;) {
    ns.push_back(n);
    const std::uint64_t next = geometric ? 2 * n : n + step;
    if (next <= n) break;
    n = next;
  }
  return ns;
}

// Runs `emit_one` for a single JSON input, or writes a batch CSV.
int run_sets(const Inputs& inputs, const Common& common, std::ostream& out, std::ostream& err,
             const std::vector<std::string>& columns,
             const std::function<Json(const PositiveSet&, bool&)>& as_json,
             const std::function<std::vector<std::string>(const std::string&, const PositiveSet&,
                                                          bool&)>& as_row) {
  const std::vector<Source> sources = collect(inputs);
  if (sources.size() == 1 && common.format == "json") {
    const PositiveSet a = sources.front().load();
    bool ok = true;
    out << as_json(a, ok).dump(2) << '\n';
    if (!ok) {
      err << "error: invariant violation for " << sources.front().label << '\n';
      return kInvariantViolation;
    }
    return kOk;
  }

  out << join_csv(columns) << '\n';
  int status = kOk;
  for (const auto& src : sources) {
    try {
      const PositiveSet a = src.load();
      bool ok = true;
      auto row = as_row(src.label, a, ok);
      if (!ok) {
        row.back() = "invariant violation";
        status = kInvariantViolation;
      }
      out << join_csv(row) << '\n';
    } catch (...) {
      const auto e = std::current_exception();
      if (code_for(e) == kInvariantViolation) status = kInvariantViolation;
      std::vector<std::string> row(columns.size());
      row.front() = src.label;
      row.back() = message_of(e);
      out << join_csv(row) << '\n';
    }
  }
  return status;
}

bool consistent(const VerificationReport& r) {
  return r.passes_theorem && r.passes_est1 && r.passes_est2 && r.passes_est3 &&
         r.chain_implies_theorem && r.passes_corollary;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sum-set, ratio-set and sum-division checks on finite sets of positive "
               "rationals"};
  app.name("sumdiv");
  app.require_subcommand(1);

  // stats
  Common stats_common;
  Inputs stats_inputs;
  auto* stats = app.add_subcommand("stats", "Cardinalities of A+A, AA, A/A and derived statistics");
  add_common(stats, stats_common, "json");
  add_inputs(stats, stats_inputs);

  // verify
  Common verify_common;
  Inputs verify_inputs;
  auto* verify = app.add_subcommand("verify", "Check |A+A|^2 |A/A| >= |A|^4/4 and each estimate behind it");
  add_common(verify, verify_common, "json");
  add_inputs(verify, verify_inputs);

  // spectrum
  Common spectrum_common;
  Inputs spectrum_inputs;
  auto* spectrum = app.add_subcommand("spectrum", "Ratio multiplicity spectrum of A");
  add_common(spectrum, spectrum_common, "csv");
  add_inputs(spectrum, spectrum_inputs);

  // certificate
  Common cert_common;
  Inputs cert_inputs;
  std::optional<std::size_t> cert_from;
  auto* cert = app.add_subcommand("certificate", "Ray certificate for the sum-set lower bound");
  add_common(cert, cert_common, "json");
  add_inputs(cert, cert_inputs);
  cert->add_option("--from", cert_from, "First selected spectrum index (default: threshold k)");

  // family
  std::string family_text;
  std::optional<std::uint64_t> family_seed;
  auto* family = app.add_subcommand("family", "Print a generated set in set-file format");
  family->add_option("spec", family_text, "Family spec, e.g. farey:n=5")->required();
  family->add_option("--seed", family_seed, "Override the seed of a random family");

  // table
  Common table_common;
  std::string table_n;
  bool table_geometric = false;
  std::uint64_t table_step = 1;
  std::uint64_t table_bits = kDefaultTableBits;
  auto* table = app.add_subcommand("table", "Distinct products in the n x n multiplication table");
  add_common(table, table_common, "csv");
  table->add_option("--n", table_n, "Order n, or a range a..b")->required();
  table->add_flag("--geometric-steps", table_geometric, "Double n across the range");
  table->add_option("--step", table_step, "Linear step across the range")->check(CLI::PositiveNumber);
  table->add_option("--bit-budget", table_bits, "Maximum bitmap size in bits")->capture_default_str();

  // farey
  Common farey_common;
  std::string farey_n;
  bool farey_geometric = false;
  bool farey_stats = false;
  auto* farey = app.add_subcommand("farey", "Size of the Farey fractions F_n and desk-scale statistics");
  add_common(farey, farey_common, "json");
  farey->add_option("--n", farey_n, "Order n, or a range a..b")->required();
  farey->add_flag("--geometric-steps", farey_geometric, "Double n across the range");
  farey->add_flag("--stats", farey_stats, "Also count F+F, F-F, FF, F/F (single n only)");

  // search
  Common search_common;
  SearchConfig search_config;
  std::string search_objective = "J";
  std::string search_mode = "exhaustive";
  auto* search = app.add_subcommand("search", "Empirical minimum of J(A) or R(A) over small sets");
  add_common(search, search_common, "json");
  search->add_option("--objective", search_objective, "J or R")->capture_default_str();
  search->add_option("--mode", search_mode, "exhaustive or local")->capture_default_str();
  search->add_option("--size", search_config.cardinality, "Set cardinality")->capture_default_str();
  search->add_option("--universe", search_config.universe, "Exhaustive universe {1..N}")
      ->capture_default_str();
  search->add_option("--budget", search_config.evaluation_budget, "Exhaustive evaluation budget")
      ->capture_default_str();
  search->add_option("--seed", search_config.seed, "Local search seed")->capture_default_str();
  search->add_option("--iterations", search_config.iterations, "Local search iterations")
      ->capture_default_str();
  search->add_option("--bound", search_config.element_bound,
                     "Local search numerator/denominator bound")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*stats) {
      const auto& c = stats_common;
      return run_sets(
          stats_inputs, c, out, err, stats_csv_columns(),
          [&](const PositiveSet& a, bool&) { return to_json(compute_stats(a, c.pair_cap, c.precision)); },
          [&](const std::string& label, const PositiveSet& a, bool&) {
            return stats_csv_row(label, compute_stats(a, c.pair_cap, c.precision));
          });
    }

    if (*verify) {
      const auto& c = verify_common;
      return run_sets(
          verify_inputs, c, out, err, verify_csv_columns(),
          [&](const PositiveSet& a, bool& ok) {
            const auto r = compute_report(a, c.pair_cap, c.precision);
            ok = consistent(r);
            return to_json(r);
          },
          [&](const std::string& label, const PositiveSet& a, bool& ok) {
            const auto r = compute_report(a, c.pair_cap, c.precision);
            ok = consistent(r);
            return verify_csv_row(label, r);
          });
    }

    if (*spectrum) {
      const auto sources = collect(spectrum_inputs);
      if (sources.size() != 1) throw InputError("spectrum takes exactly one input set");
      const auto s = ratio_spectrum(sources.front().load(), spectrum_common.pair_cap);
      if (spectrum_common.format == "json")
        out << to_json(s).dump(2) << '\n';
      else
        out << spectrum_csv(s);
      return kOk;
    }

    if (*cert) {
      const auto sources = collect(cert_inputs);
      if (sources.size() != 1) throw InputError("certificate takes exactly one input set");
      const PositiveSet a = sources.front().load();
      const std::size_t from =
          cert_from ? *cert_from : threshold_index(ratio_spectrum(a, cert_common.pair_cap)).k;
      const RayCertificate rc = ray_certificate(a, from, cert_common.pair_cap);
      out << to_json(rc).dump(2) << '\n';
      if (!rc.distinctness_verified || !rc.sectors_verified || !rc.bound_holds) {
        err << "error: ray certificate failed its own checks\n";
        return kInvariantViolation;
      }
      return kOk;
    }

    if (*family) {
      FamilySpec spec = parse_family_spec(family_text);
      if (family_seed) spec.seed = *family_seed;
      out << "# " << format_family_spec(spec) << '\n' << format_set(make_family(spec));
      return kOk;
    }

    if (*table) {
      const auto ns = expand(parse_range(table_n), table_geometric, table_step);
      const int p = table_common.precision;
      if (table_common.format == "json") {
        Json rows = Json::array();
        for (auto n : ns) {
          const auto m = mult_table_count(n, table_bits);
          rows.push_back({{"n", n}, {"M", m},
                          {"density", to_decimal(mpq_class(mpz_class(static_cast<unsigned long>(m)),
                                                           mpz_class(static_cast<unsigned long>(n * n))), p)}});
        }
        out << rows.dump(2) << '\n';
        return kOk;
      }
      out << "n,M,density,log_density,beta_estimate\n";
      for (auto n : ns) {
        const auto m = mult_table_count(n, table_bits);
        const mpq_class density(mpz_class(static_cast<unsigned long>(m)),
                                mpz_class(static_cast<unsigned long>(n * n)));
        const double ln_density = std::log(density.get_d());
        // n^2 / M = (ln n)^beta_estimate
        const std::string beta_est =
            n >= 3 ? to_decimal(-ln_density / std::log(std::log(static_cast<double>(n))), p) : "";
        out << n << ',' << m << ',' << to_decimal(density, p) << ','
            << to_decimal(ln_density, p) << ',' << beta_est << '\n';
      }
      return kOk;
    }

    if (*farey) {
      const auto ns = expand(parse_range(farey_n), farey_geometric, 1);
      const int p = farey_common.precision;
      auto row_json = [&](std::uint64_t n) {
        const auto size = farey_size(n);
        const double asym = farey_asymptotic(n);
        Json j;
        j["n"] = n;
        j["farey_size"] = size;
        j["asymptotic"] = to_decimal(asym, p);
        j["relative_error"] = to_decimal((static_cast<double>(size) - asym) / asym, p);
        return j;
      };
      if (farey_stats) {
        if (ns.size() != 1) throw InputError("--stats needs a single n");
        Json j = row_json(ns.front());
        j["statistics"] = to_json(farey_statistics(ns.front(), farey_common.pair_cap), p);
        out << j.dump(2) << '\n';
        return kOk;
      }
      if (ns.size() == 1 && farey_common.format == "json") {
        out << row_json(ns.front()).dump(2) << '\n';
        return kOk;
      }
      out << "n,farey_size,asymptotic,relative_error\n";
      for (auto n : ns) {
        const Json j = row_json(n);
        out << n << ',' << j["farey_size"].get<std::uint64_t>() << ','
            << j["asymptotic"].get<std::string>() << ','
            << j["relative_error"].get<std::string>() << '\n';
      }
      return kOk;
    }

    if (*search) {
      search_config.objective = parse_objective(search_objective);
      search_config.mode = parse_search_mode(search_mode);
      search_config.pair_cap = search_common.pair_cap;
      const SearchResult result = run_search(search_config);
      out << to_json(search_config, result, search_common.precision).dump(2) << '\n';
      return kOk;
    }
  } catch (...) {
    const auto e = std::current_exception();
    err << "error: " << message_of(e) << '\n';
    return code_for(e);
  }
  return kInputError;
}

}  // namespace sumdiv::cli
