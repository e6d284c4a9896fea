#pragma once

// Packing density and efficiency of periodic constellations, in the log domain.

#include <cstdint>
#include <optional>
#include <string>

#include "mlc/constructions.hpp"

namespace mlc {

/// log V_n, the natural log of the volume of the unit ball in R^n.
double log_unit_ball_volume(std::size_t n);

struct PackingReport {
  std::size_t n = 0;
  std::size_t levels = 0;
  std::uint64_t dmin2 = 0;
  /// log2 of the number of reps per period cell.
  double log2_count = 0;
  /// ln(q^n / |reps|).
  double log_vol_per_point = 0;
  double log_delta = 0;
  double delta = 0;
  double rho = 0;
  double r_pack = 0;
  double r_effective = 0;
};

/// Density of |reps| = 2^log2_count balls of radius sqrt(dmin2)/2 per q^n cell.
PackingReport packing_report(std::size_t n, std::size_t levels, double log2_count,
                             std::uint64_t dmin2);
/// Uses dmin_oracle unless `dmin2` is supplied.
PackingReport packing_report(const PeriodicConstellation& p,
                             std::optional<std::uint64_t> dmin2 = std::nullopt);

enum class Winner { cstar, c, tie };
std::string to_string(Winner w);

struct DensityComparison {
  std::size_t n = 0;
  std::uint64_t d2_cstar = 0;
  std::uint64_t d2_c = 0;
  double log2_size_cstar = 0;
  double log2_size_c = 0;
  /// (d1 / d2)^n against prod |C_i| / |C|, both as natural logs.
  double log_lhs = 0;
  double log_rhs = 0;
  Winner delta_winner = Winner::tie;
  /// d1 / d2 against (prod |C_i| / |C|)^(1/n); always agrees with delta_winner.
  Winner rho_winner = Winner::tie;
  /// Delta(C*) / Delta(C).
  double delta_ratio = 1;
};

DensityComparison compare_cstar_vs_c(std::size_t n, double log2_size_cstar,
                                     double log2_size_c, std::uint64_t d2_cstar,
                                     std::uint64_t d2_c);
/// Sizes from the main code and its projections.
DensityComparison compare_cstar_vs_c(const MainCode& code, std::uint64_t d2_cstar,
                                     std::uint64_t d2_c);

}  // namespace mlc
