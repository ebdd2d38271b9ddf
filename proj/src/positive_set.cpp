#include "sumdiv/positive_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "sumdiv/errors.hpp"

namespace sumdiv {

namespace {

void check_cap(std::uint64_t pairs, std::uint64_t cap, const char* what) {
  if (pairs > cap)
    throw CapExceeded(std::string(what) + " needs " + std::to_string(pairs) +
                      " pairs, cap is " + std::to_string(cap));
}

template <class Op>
PositiveSet pairwise(const PositiveSet& a, const PositiveSet& b, std::uint64_t cap,
                     const char* what, Op op) {
  check_cap(static_cast<std::uint64_t>(a.size()) * b.size(), cap, what);
  std::vector<Rational> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(op(x, y));
  return PositiveSet::from_values(std::move(out));
}

// For commutative ops on A=B only the upper triangle is needed.
template <class Op>
PositiveSet symmetric_pairwise(const PositiveSet& a, const PositiveSet& b, std::uint64_t cap,
                               const char* what, Op op) {
  if (&a != &b && a != b) return pairwise(a, b, cap, what, op);
  check_cap(static_cast<std::uint64_t>(a.size()) * a.size(), cap, what);
  std::vector<Rational> out;
  out.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j) out.push_back(op(a[i], a[j]));
  return PositiveSet::from_values(std::move(out));
}

}  // namespace

std::uint64_t default_pair_cap() {
  if (const char* env = std::getenv("SUMDIV_PAIR_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultPairCap;
}

PositiveSet PositiveSet::from_values(std::vector<Rational> values) {
  if (values.empty()) throw InputError("a set needs at least one element");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return PositiveSet(std::move(values));
}

PositiveSet PositiveSet::from_integers(std::span<const std::uint64_t> values) {
  std::vector<Rational> v;
  v.reserve(values.size());
  for (auto x : values) v.push_back(Rational::from_integer(x));
  return from_values(std::move(v));
}

PositiveSet sumset(const PositiveSet& a, const PositiveSet& b, std::uint64_t pair_cap) {
  return symmetric_pairwise(a, b, pair_cap, "sumset", std::plus<>{});
}

PositiveSet productset(const PositiveSet& a, const PositiveSet& b, std::uint64_t pair_cap) {
  return symmetric_pairwise(a, b, pair_cap, "productset", std::multiplies<>{});
}

PositiveSet ratioset(const PositiveSet& a, const PositiveSet& b, std::uint64_t pair_cap) {
  return pairwise(a, b, pair_cap, "ratioset", std::divides<>{});
}

PositiveSet square_set(const PositiveSet& a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  // x -> x² is increasing on positives, so order and distinctness carry over.
  for (const auto& x : a) out.push_back(x * x);
  return PositiveSet::from_values(std::move(out));
}

std::uint64_t grid_sumset_size(const PositiveSet& a, std::uint64_t pair_cap) {
  const std::uint64_t n = a.size();
  check_cap(n * n * n * n, pair_cap, "grid sumset");
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(n * n);
  for (const auto& x : a)
    for (const auto& y : a) points.emplace_back(x, y);

  std::vector<std::pair<Rational, Rational>> sums;
  sums.reserve(points.size() * (points.size() + 1) / 2);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i; j < points.size(); ++j)
      sums.emplace_back(points[i].first + points[j].first, points[i].second + points[j].second);
  std::sort(sums.begin(), sums.end());
  return static_cast<std::uint64_t>(std::unique(sums.begin(), sums.end()) - sums.begin());
}

RadAngSizes rad_ang_sizes(const PositiveSet& a, std::uint64_t pair_cap) {
  const PositiveSet squares = square_set(a);
  std::vector<Rational> radii;
  check_cap(static_cast<std::uint64_t>(a.size()) * a.size(), pair_cap, "radius set");
  radii.reserve(a.size() * (a.size() + 1) / 2);
  for (std::size_t i = 0; i < squares.size(); ++i)
    for (std::size_t j = i; j < squares.size(); ++j) radii.push_back(squares[i] + squares[j]);
  return {PositiveSet::from_values(std::move(radii)).size(), ratioset(a, a, pair_cap).size()};
}

PositiveSet read_set(std::istream& in) {
  std::vector<Rational> values;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      values.push_back(parse_rational(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (values.empty()) throw InputError("set file contains no elements");
  return PositiveSet::from_values(std::move(values));
}

PositiveSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open set file '" + path.string() + "'");
  try {
    return read_set(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_set(const PositiveSet& a) {
  std::ostringstream out;
  for (const auto& x : a) out << x.str() << '\n';
  return out.str();
}

}  // namespace sumdiv
