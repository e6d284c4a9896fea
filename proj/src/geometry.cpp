#include "mlc/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mlc/parallel.hpp"

namespace mlc {

namespace {

std::uint64_t pow4(std::size_t e) { return std::uint64_t{1} << (2 * e); }

std::vector<std::uint64_t> centered_squares(std::uint32_t q) {
  std::vector<std::uint64_t> sq(q);
  for (std::uint32_t d = 0; d < q; ++d) {
    const std::int64_t c = centered(d, q);
    sq[d] = static_cast<std::uint64_t>(c * c);
  }
  return sq;
}

std::uint64_t radius_squared(double radius) {
  if (!(radius >= 1)) throw std::invalid_argument("spectrum radius must be at least 1");
  return static_cast<std::uint64_t>(std::floor(radius * radius + 1e-9));
}

/// Counts of |delta + q z|^2 <= r2 over z in Z^n, dense by squared distance.
class TranslateTable {
 public:
  TranslateTable(std::size_t n, std::uint32_t q, std::uint64_t r2) : n_(n), q_(q), r2_(r2) {
    per_value_.resize(q);
    const std::int64_t r = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(r2)))) + 1;
    for (std::uint32_t v = 0; v < q; ++v) {
      for (std::int64_t x = -r - q; x <= r + q; ++x) {
        if (((x % q) + q) % q != v) continue;
        const auto s = static_cast<std::uint64_t>(x * x);
        if (s <= r2) per_value_[v].push_back(s);
      }
    }
    std::uint64_t cells = 1;
    for (std::size_t j = 0; j < n && cells <= (1U << 16); ++j) cells *= q;
    if (cells <= (1U << 16)) dense_.resize(cells);
  }

  const std::vector<std::uint64_t>& get(std::span<const std::uint16_t> delta) {
    if (!dense_.empty()) {
      std::size_t key = 0;
      for (std::size_t j = n_; j-- > 0;) key = key * q_ + delta[j];
      auto& slot = dense_[key];
      if (slot.empty()) slot = compute(delta);
      return slot;
    }
    std::vector<std::uint16_t> k(delta.begin(), delta.end());
    auto it = sparse_.find(k);
    if (it == sparse_.end()) it = sparse_.emplace(std::move(k), compute(delta)).first;
    return it->second;
  }

 private:
  std::vector<std::uint64_t> compute(std::span<const std::uint16_t> delta) const {
    std::vector<std::uint64_t> acc(r2_ + 1, 0), next(r2_ + 1);
    acc[0] = 1;
    for (std::size_t j = 0; j < n_; ++j) {
      std::fill(next.begin(), next.end(), 0);
      for (std::uint64_t d = 0; d <= r2_; ++d) {
        if (acc[d] == 0) continue;
        for (std::uint64_t s : per_value_[delta[j]]) {
          if (d + s <= r2_) next[d + s] += acc[d];
        }
      }
      acc.swap(next);
    }
    return acc;
  }

  std::size_t n_;
  std::uint32_t q_;
  std::uint64_t r2_;
  std::vector<std::vector<std::uint64_t>> per_value_;
  std::vector<std::vector<std::uint64_t>> dense_;
  std::map<std::vector<std::uint16_t>, std::vector<std::uint64_t>> sparse_;
};

void check_spectrum_dimension(const PeriodicConstellation& p) {
  if (p.n() > 8) {
    throw BudgetExceeded("distance spectrum: translate enumeration limited to n <= 8", p.n(), 8);
  }
}

std::vector<std::uint64_t> dense_spectrum(const PeriodicConstellation& p, std::span<const std::uint16_t> a,
                                          TranslateTable& table, std::uint64_t r2) {
  std::vector<std::uint64_t> counts(r2 + 1, 0);
  std::vector<std::uint16_t> delta(p.n());
  const std::uint32_t q = p.period();
  for (std::size_t b = 0; b < p.size(); ++b) {
    auto rb = p.rep(b);
    for (std::size_t j = 0; j < p.n(); ++j) delta[j] = static_cast<std::uint16_t>((rb[j] + q - a[j]) % q);
    const auto& f = table.get(delta);
    for (std::uint64_t d = 0; d <= r2; ++d) counts[d] += f[d];
  }
  counts[0] = 0;
  return counts;
}

std::vector<std::uint16_t> residue_of(const PeriodicConstellation& p, std::span<const int> v) {
  if (v.size() != p.n()) throw std::invalid_argument("point dimension does not match the constellation");
  const std::int64_t q = p.period();
  std::vector<std::uint16_t> r(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) r[j] = static_cast<std::uint16_t>(((v[j] % q) + q) % q);
  return r;
}

}  // namespace

std::int64_t centered(std::int64_t v, std::uint32_t q) {
  const std::int64_t qq = q;
  std::int64_t r = ((v % qq) + qq) % qq;
  if (2 * r > qq) r -= qq;
  return r;
}

std::uint64_t dmin_oracle(const PeriodicConstellation& p, std::uint64_t budget) {
  const std::uint32_t q = p.period();
  const std::uint64_t cap = std::uint64_t{q} * q;
  const std::uint64_t m = p.size();
  if (m < 2) return cap;
  const std::uint64_t pairs = m * (m - 1) / 2;
  if (pairs > budget) throw BudgetExceeded("dmin_oracle: rep pair scan", pairs, budget);
  const auto sq = centered_squares(q);
  const std::size_t n = p.n();
  std::atomic<std::uint64_t> best{cap};
  parallel_for_chunks(m, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t local = best.load(std::memory_order_relaxed);
    for (std::uint64_t a = begin; a < end; ++a) {
      auto ra = p.rep(a);
      for (std::uint64_t b = a + 1; b < m; ++b) {
        auto rb = p.rep(b);
        std::uint64_t d = 0;
        for (std::size_t j = 0; j < n && d < local; ++j) d += sq[(ra[j] + q - rb[j]) % q];
        local = std::min(local, d);
      }
    }
    std::uint64_t cur = best.load(std::memory_order_relaxed);
    while (local < cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return best.load();
}

std::uint64_t dmin_formula_c(std::span<const std::optional<std::size_t>> distances) {
  std::uint64_t best = pow4(distances.size());
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (distances[i]) best = std::min<std::uint64_t>(best, pow4(i) * *distances[i]);
  }
  return best;
}

std::uint64_t dmin_formula_c(std::span<const BinaryCode> codes) {
  std::vector<std::optional<std::size_t>> d;
  for (const auto& c : codes) {
    if (!c.is_linear()) throw std::invalid_argument("dmin_formula_c: level codes must be linear");
    d.push_back(min_nonzero_weight(c));
  }
  return dmin_formula_c(d);
}

std::uint64_t MCounts::distance_to_zero() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<std::uint64_t>(i + 1) * (i + 1) * m[i];
  return d;
}

MCounts mcounts(const BitWord& c, std::size_t n, std::size_t levels) {
  if (levels < 1 || levels > kMaxLevels || c.size() != n * levels) {
    throw std::invalid_argument("mcounts: word length must be n * L");
  }
  const std::uint32_t q = std::uint32_t{1} << levels;
  MCounts out;
  out.m.assign(q / 2, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < levels; ++i) v |= static_cast<std::uint32_t>(c.get(i * n + j)) << i;
    if (v == 0) continue;
    ++out.m[std::min(v, q - v) - 1];
  }
  return out;
}

std::uint64_t dmin_to_zero(const PeriodicConstellation& p) {
  const std::uint32_t q = p.period();
  std::uint64_t best = std::uint64_t{q} * q;
  const auto sq = centered_squares(q);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto r = p.rep(i);
    if (std::all_of(r.begin(), r.end(), [](std::uint16_t v) { return v == 0; })) continue;
    std::uint64_t d = 0;
    for (auto v : r) d += sq[v];
    best = std::min(best, d);
  }
  return best;
}

std::uint64_t dmin_to_zero(const MainCode& code) {
  const std::size_t n = code.n();
  const std::size_t levels = code.levels();
  std::uint64_t best = pow4(levels);
  const std::int64_t top = std::int64_t{1} << (levels - 1);
  for (const auto& w : code.code().words()) {
    if (w.is_zero()) continue;
    std::uint64_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t v = w.get((levels - 1) * n + j) ? top : 0;
      for (std::size_t i = 0; i + 1 < levels; ++i) {
        if (w.get(i * n + j)) v -= std::int64_t{1} << i;
      }
      d += static_cast<std::uint64_t>(v * v);
    }
    best = std::min(best, d);
  }
  return best;
}

std::uint64_t dmin_to_zero_structured(std::span<const Prefix> prefixes, std::size_t n,
                                      std::size_t levels) {
  if (prefixes.empty()) throw std::invalid_argument("dmin_to_zero_structured: no prefixes");
  if (levels < 1 || levels > kMaxLevels || n == 0) {
    throw std::invalid_argument("dmin_to_zero_structured: bad dimensions");
  }
  for (const auto& pre : prefixes) {
    if (pre.levels.size() + 1 != levels) {
      throw std::invalid_argument("dmin_to_zero_structured: prefix needs L - 1 levels");
    }
    for (const auto& w : pre.levels) {
      if (w.size() != n) throw std::invalid_argument("dmin_to_zero_structured: prefix word length");
    }
  }
  const std::uint64_t half = std::uint64_t{1} << (levels - 1);
  std::atomic<std::uint64_t> best{pow4(levels)};
  parallel_for_chunks(prefixes.size(), [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> penalty(n);
    std::uint64_t local = best.load(std::memory_order_relaxed);
    for (std::uint64_t k = begin; k < end; ++k) {
      const auto& pre = prefixes[k];
      std::uint64_t total = 0;
      bool parity = false;
      bool zero_prefix = true;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t t = 0;
        for (std::size_t i = 0; i + 1 < levels; ++i) {
          if (pre.levels[i].get(j)) t |= std::uint64_t{1} << i;
        }
        zero_prefix = zero_prefix && t == 0;
        const std::uint64_t c0 = t * t;
        const std::uint64_t c1 = (half - t) * (half - t);
        // Ties keep the top bit at 0.
        const bool bit = c1 < c0;
        total += bit ? c1 : c0;
        parity ^= bit;
        penalty[j] = bit ? c0 - c1 : c1 - c0;
      }
      if (zero_prefix && !pre.odd) {
        if (n < 2) continue;  // only the zero codeword
        std::partial_sort(penalty.begin(), penalty.begin() + 2, penalty.end());
        total = penalty[0] + penalty[1];
      } else if (parity != pre.odd) {
        total += *std::min_element(penalty.begin(), penalty.end());
      }
      local = std::min(local, total);
    }
    std::uint64_t cur = best.load(std::memory_order_relaxed);
    while (local < cur && !best.compare_exchange_weak(cur, local)) {
    }
  });
  return best.load();
}

std::uint64_t dmin_lower_bound_2level(std::size_t dh1, std::size_t dh2) {
  if (dh2 <= dh1) {
    throw std::invalid_argument("dmin_lower_bound_2level: requires d_H(C2) > d_H(C1)");
  }
  const std::int64_t v = 4 * static_cast<std::int64_t>(dh2) - 3 * static_cast<std::int64_t>(dh1);
  return static_cast<std::uint64_t>(std::min<std::int64_t>(v, 16));
}

std::uint64_t dmin_upper_bound_antiprojection(std::span<const std::optional<std::size_t>> min_weights) {
  std::uint64_t best = pow4(min_weights.size());
  for (std::size_t i = 0; i < min_weights.size(); ++i) {
    if (min_weights[i]) best = std::min<std::uint64_t>(best, pow4(i) * *min_weights[i]);
  }
  return best;
}

std::uint64_t dmin_upper_bound_antiprojection(std::span<const BinaryCode> zeros) {
  std::vector<std::optional<std::size_t>> weights;
  for (const auto& z : zeros) weights.push_back(min_nonzero_weight(z));
  return dmin_upper_bound_antiprojection(std::span<const std::optional<std::size_t>>(weights));
}

std::uint64_t dmin_upper_bound_antiprojection(const MainCode& code) {
  std::vector<BinaryCode> zeros;
  for (std::size_t i = 0; i < code.levels(); ++i) zeros.push_back(antiprojection_at_zero(code, i));
  return dmin_upper_bound_antiprojection(zeros);
}

DistanceSpectrum distance_spectrum(const PeriodicConstellation& p, std::span<const int> rep,
                                   double radius) {
  check_spectrum_dimension(p);
  const auto a = residue_of(p, rep);
  if (!p.contains_residue(a)) throw std::invalid_argument("distance_spectrum: point is not in the constellation");
  const std::uint64_t r2 = radius_squared(radius);
  TranslateTable table(p.n(), p.period(), r2);
  const auto counts = dense_spectrum(p, a, table, r2);
  DistanceSpectrum s;
  s.rep.assign(rep.begin(), rep.end());
  s.radius = radius;
  for (std::uint64_t d = 1; d <= r2; ++d) {
    if (counts[d] != 0) s.entries.emplace(d, counts[d]);
  }
  return s;
}

EdsResult eds_check(const PeriodicConstellation& p, double radius) {
  check_spectrum_dimension(p);
  const std::uint64_t r2 = radius_squared(radius);
  const std::uint64_t m = p.size();
  if (m * (r2 + 1) > (std::uint64_t{1} << 27)) {
    throw BudgetExceeded("eds_check: spectrum table", m * (r2 + 1), std::uint64_t{1} << 27);
  }
  TranslateTable table(p.n(), p.period(), r2);
  std::vector<std::vector<std::uint64_t>> spectra;
  spectra.reserve(m);
  for (std::size_t i = 0; i < m; ++i) spectra.push_back(dense_spectrum(p, p.rep(i), table, r2));
  EdsResult out;
  for (std::uint64_t d = 1; d <= r2; ++d) {
    std::size_t hi = 0, lo = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (spectra[i][d] > spectra[hi][d]) hi = i;
      if (spectra[i][d] <= spectra[lo][d]) lo = i;
    }
    if (spectra[hi][d] == spectra[lo][d]) continue;
    out.eds = false;
    out.d2 = d;
    auto rh = p.rep(hi), rl = p.rep(lo);
    out.witness.emplace(std::vector<int>(rh.begin(), rh.end()), std::vector<int>(rl.begin(), rl.end()));
    out.counts = {spectra[hi][d], spectra[lo][d]};
    break;
  }
  return out;
}

EdsResult eds_check(const PeriodicConstellation& p) { return eds_check(p, 2.0 * p.period()); }

EquiMinResult equi_min_distance_check(const PeriodicConstellation& p) {
  EquiMinResult out;
  out.dmin2 = dmin_oracle(p);
  const std::uint32_t q = p.period();
  const auto sq = centered_squares(q);
  const std::size_t m = p.size();
  for (std::size_t a = 0; a < m; ++a) {
    auto ra = p.rep(a);
    std::uint64_t nearest = std::uint64_t{q} * q;
    for (std::size_t b = 0; b < m && nearest > out.dmin2; ++b) {
      if (b == a) continue;
      auto rb = p.rep(b);
      std::uint64_t d = 0;
      for (std::size_t j = 0; j < p.n(); ++j) d += sq[(ra[j] + q - rb[j]) % q];
      nearest = std::min(nearest, d);
    }
    if (nearest != out.dmin2) {
      out.equi_min = false;
      out.witness = std::vector<int>(ra.begin(), ra.end());
      out.witness_d2 = nearest;
      break;
    }
  }
  return out;
}

bool isometry_orbit_check(const PeriodicConstellation& p, std::span<const int> x0,
                          std::span<const int> c1) {
  if (x0.size() != p.n() || c1.size() != p.n()) {
    throw std::invalid_argument("isometry_orbit_check: dimension mismatch");
  }
  for (int s : c1) {
    if (s != 0 && s != 1) throw std::invalid_argument("isometry_orbit_check: sign pattern must be binary");
  }
  const std::int64_t q = p.period();
  std::vector<std::uint16_t> image(p.n());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto y = p.rep(i);
    for (std::size_t j = 0; j < p.n(); ++j) {
      std::int64_t v = static_cast<std::int64_t>(y[j]) - x0[j];
      if (c1[j]) v = -v;
      image[j] = static_cast<std::uint16_t>(((v % q) + q) % q);
    }
    if (!p.contains_residue(image)) return false;
  }
  return true;
}

GuCertificate gu_certificate(const PeriodicConstellation& p) {
  GuCertificate out;
  std::vector<int> x0(p.n()), c1(p.n());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto r = p.rep(i);
    for (std::size_t j = 0; j < p.n(); ++j) {
      x0[j] = r[j];
      c1[j] = r[j] & 1;
    }
    if (!isometry_orbit_check(p, x0, c1)) {
      out.certified = false;
      out.failing_rep = x0;
      break;
    }
  }
  return out;
}

}  // namespace mlc
