#pragma once

// Naive reference implementations used only by tests. They share nothing with
// the library: machine-word fractions, std::map/std::set, textbook loops.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sumdiv/positive_set.hpp"

namespace oracle {

struct Frac {
  std::int64_t p;
  std::int64_t q;

  Frac(std::int64_t num, std::int64_t den) {
    const auto g = std::gcd(num, den);
    p = num / g;
    q = den / g;
  }
  friend bool operator<(const Frac& a, const Frac& b) {
    return static_cast<__int128>(a.p) * b.q < static_cast<__int128>(b.p) * a.q;
  }
  friend bool operator==(const Frac& a, const Frac& b) { return a.p == b.p && a.q == b.q; }
  friend Frac operator+(const Frac& a, const Frac& b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.p * b.p, a.q * b.q}; }
  friend Frac operator/(const Frac& a, const Frac& b) { return {a.p * b.q, a.q * b.p}; }
  std::string str() const { return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q); }
};

inline std::vector<Frac> from_set(const sumdiv::PositiveSet& a) {
  std::vector<Frac> v;
  for (const auto& x : a) v.emplace_back(x.numerator().get_si(), x.denominator().get_si());
  return v;
}

inline std::vector<Frac> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<Frac> v;
  for (auto x : xs) v.emplace_back(x, 1);
  return v;
}

template <class Op>
std::set<Frac> pairwise(const std::vector<Frac>& a, Op op) {
  std::set<Frac> out;
  for (const auto& x : a)
    for (const auto& y : a) out.insert(op(x, y));
  return out;
}

inline std::set<Frac> sums(const std::vector<Frac>& a) {
  return pairwise(a, [](const Frac& x, const Frac& y) { return x + y; });
}
inline std::set<Frac> products(const std::vector<Frac>& a) {
  return pairwise(a, [](const Frac& x, const Frac& y) { return x * y; });
}
inline std::set<Frac> ratios(const std::vector<Frac>& a) {
  return pairwise(a, [](const Frac& x, const Frac& y) { return x / y; });
}

inline std::map<Frac, std::uint64_t> ratio_counts(const std::vector<Frac>& a) {
  std::map<Frac, std::uint64_t> m;
  for (const auto& x : a)
    for (const auto& y : a) ++m[x / y];
  return m;
}

// Sorted ascending multiplicities.
inline std::vector<std::uint64_t> multiplicities(const std::vector<Frac>& a) {
  std::vector<std::uint64_t> m;
  for (const auto& [z, c] : ratio_counts(a)) m.push_back(c);
  std::sort(m.begin(), m.end());
  return m;
}

struct Threshold {
  std::size_t k;
  std::uint64_t m_k, head, tail;
};

// Scans k = 1, 2, ... and returns the first k with sum_{i<=k} m_i >= n^2/2.
inline Threshold threshold(const std::vector<std::uint64_t>& m, std::uint64_t n) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::uint64_t head = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) head += m[i];
    if (2 * (head + m[k - 1]) >= n * n) {
      std::uint64_t tail = 0;
      for (std::size_t i = k - 1; i < m.size(); ++i) tail += m[i];
      return {k, m[k - 1], head, tail};
    }
  }
  return {0, 0, 0, 0};
}

inline std::uint64_t grid_size(const std::vector<Frac>& a) {
  std::vector<std::pair<Frac, Frac>> pts;
  for (const auto& x : a)
    for (const auto& y : a) pts.emplace_back(x, y);
  std::set<std::pair<Frac, Frac>> s;
  for (const auto& u : pts)
    for (const auto& v : pts) s.emplace(u.first + v.first, u.second + v.second);
  return s.size();
}

inline std::uint64_t mult_table(std::uint64_t n) {
  std::set<std::uint64_t> s;
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = 1; j <= n; ++j) s.insert(i * j);
  return s.size();
}

}  // namespace oracle
