#pragma once

// Shared generators and brute-force oracles for the test suites. The oracles
// deliberately avoid the library's own helpers (centered residues, packed
// keys, carry records) so they check the library rather than restate it.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "mlc/constructions.hpp"
#include "mlc/gf2.hpp"

namespace mlc_test {

using Point = std::vector<int>;

inline mlc::BitWord random_word(std::mt19937_64& rng, std::size_t n) {
  mlc::BitWord w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, rng() & 1U);
  return w;
}

/// Span of k random columns; the rank may fall below k.
inline mlc::BinaryCode random_linear_code(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<mlc::BitWord> cols;
  for (std::size_t j = 0; j < k; ++j) cols.push_back(random_word(rng, n));
  if (cols.empty()) return mlc::zero_code(n);
  return mlc::enumerate_from_generator(n, cols);
}

inline mlc::MainCode random_linear_main_code(std::mt19937_64& rng, std::size_t n, std::size_t levels,
                                             std::size_t k) {
  return mlc::MainCode(random_linear_code(rng, n * levels, k), n, levels);
}

/// sum_i 2^i c_i read straight from the bits, without reduction.
inline Point lift_word(const mlc::BitWord& w, std::size_t n, std::size_t levels) {
  Point p(n, 0);
  for (std::size_t i = 0; i < levels; ++i) {
    for (std::size_t j = 0; j < n; ++j) p[j] += static_cast<int>(w.get(i * n + j)) << i;
  }
  return p;
}

inline std::set<Point> rep_set(const mlc::PeriodicConstellation& p) {
  std::set<Point> s;
  for (const auto& r : p.reps()) s.insert(r);
  return s;
}

inline int mod(int v, int q) { return ((v % q) + q) % q; }

/// Squared distance between a and the nearest translate b + q z, trying
/// every shift in {-1, 0, 1} per coordinate.
inline std::uint64_t torus_d2(const Point& a, const Point& b, int q) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int s = -1; s <= 1; ++s) {
      const std::int64_t d = static_cast<std::int64_t>(a[j]) - b[j] - static_cast<std::int64_t>(s) * q;
      best = std::min(best, d * d);
    }
    total += static_cast<std::uint64_t>(best);
  }
  return total;
}

/// min(q^2, min over distinct reps of torus_d2).
inline std::uint64_t brute_dmin2(const mlc::PeriodicConstellation& p) {
  const auto reps = p.reps();
  const int q = static_cast<int>(p.period());
  std::uint64_t best = static_cast<std::uint64_t>(q) * q;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) best = std::min(best, torus_d2(reps[a], reps[b], q));
  }
  return best;
}

/// Group closure of the rep set under subtraction mod q.
inline bool brute_is_group(const mlc::PeriodicConstellation& p) {
  const auto reps = rep_set(p);
  const int q = static_cast<int>(p.period());
  for (const auto& a : reps) {
    for (const auto& b : reps) {
      Point d(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) d[j] = mod(a[j] - b[j], q);
      if (!reps.count(d)) return false;
    }
  }
  return true;
}

}  // namespace mlc_test
