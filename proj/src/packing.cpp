#include "mlc/packing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mlc/geometry.hpp"

namespace mlc {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kTieTolerance = 1e-12;

Winner decide(double lhs, double rhs) {
  if (std::abs(lhs - rhs) <= kTieTolerance * std::max(1.0, std::abs(rhs))) return Winner::tie;
  return lhs > rhs ? Winner::cstar : Winner::c;
}

}  // namespace

double log_unit_ball_volume(std::size_t n) {
  if (n == 0) throw std::invalid_argument("log_unit_ball_volume: n must be positive");
  const double half = 0.5 * static_cast<double>(n);
  return half * std::log(std::numbers::pi) - std::lgamma(half + 1.0);
}

PackingReport packing_report(std::size_t n, std::size_t levels, double log2_count,
                             std::uint64_t dmin2) {
  if (dmin2 == 0) throw std::invalid_argument("packing_report: squared distance must be positive");
  if (levels < 1 || levels > kMaxLevels) throw std::invalid_argument("packing_report: bad level count");
  const double dn = static_cast<double>(n);
  PackingReport r;
  r.n = n;
  r.levels = levels;
  r.dmin2 = dmin2;
  r.log2_count = log2_count;
  const double log_count = log2_count * kLn2;
  const double log_cell = dn * static_cast<double>(levels) * kLn2;
  r.log_vol_per_point = log_cell - log_count;
  r.r_pack = std::sqrt(static_cast<double>(dmin2)) / 2.0;
  r.log_delta = log_count + log_unit_ball_volume(n) + dn * std::log(r.r_pack) - log_cell;
  r.delta = std::exp(r.log_delta);
  r.rho = std::exp(r.log_delta / dn);
  r.r_effective = std::exp((r.log_vol_per_point - log_unit_ball_volume(n)) / dn);
  return r;
}

PackingReport packing_report(const PeriodicConstellation& p, std::optional<std::uint64_t> dmin2) {
  const std::uint64_t d2 = dmin2 ? *dmin2 : dmin_oracle(p);
  return packing_report(p.n(), p.levels(), std::log2(static_cast<double>(p.size())), d2);
}

std::string to_string(Winner w) {
  switch (w) {
    case Winner::cstar: return "cstar";
    case Winner::c: return "c";
    case Winner::tie: return "tie";
  }
  return "tie";
}

DensityComparison compare_cstar_vs_c(std::size_t n, double log2_size_cstar, double log2_size_c,
                                     std::uint64_t d2_cstar, std::uint64_t d2_c) {
  if (n == 0 || d2_cstar == 0 || d2_c == 0) {
    throw std::invalid_argument("compare_cstar_vs_c: dimension and distances must be positive");
  }
  DensityComparison out;
  out.n = n;
  out.d2_cstar = d2_cstar;
  out.d2_c = d2_c;
  out.log2_size_cstar = log2_size_cstar;
  out.log2_size_c = log2_size_c;
  const double dn = static_cast<double>(n);
  const double log_ratio_d = 0.5 * (std::log(static_cast<double>(d2_cstar)) -
                                    std::log(static_cast<double>(d2_c)));
  out.log_lhs = dn * log_ratio_d;
  out.log_rhs = (log2_size_c - log2_size_cstar) * kLn2;
  out.delta_winner = decide(out.log_lhs, out.log_rhs);
  out.rho_winner = decide(log_ratio_d, out.log_rhs / dn);
  out.delta_ratio = std::exp(out.log_lhs - out.log_rhs);
  return out;
}

DensityComparison compare_cstar_vs_c(const MainCode& code, std::uint64_t d2_cstar,
                                     std::uint64_t d2_c) {
  double log2_c = 0;
  for (const auto& pc : projection_codes(code)) log2_c += std::log2(static_cast<double>(pc.size()));
  return compare_cstar_vs_c(code.n(), std::log2(static_cast<double>(code.size())), log2_c, d2_cstar,
                            d2_c);
}

}  // namespace mlc
