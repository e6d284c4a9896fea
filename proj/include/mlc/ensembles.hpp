#pragma once

// Random multilevel ensembles and the Gilbert-Varshamov packing-efficiency curve.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "mlc/constructions.hpp"

namespace mlc {

enum class EnsembleMode { nonlinear_coin, linear_generator };
std::string to_string(EnsembleMode m);
EnsembleMode ensemble_mode_from_string(const std::string& s);

struct EnsembleConfig {
  std::size_t n = 2;
  std::size_t levels = 2;
  double rate = 0.5;
  EnsembleMode mode = EnsembleMode::nonlinear_coin;
  std::uint64_t seed = 1;

  /// ceil(n L R): log2 of the word count, or the generator column count.
  std::size_t log2_words() const;
  void validate() const;
};

/// Engine for trial `trial` of a run seeded with `seed`; streams never overlap
/// in practice and do not depend on how trials are scheduled.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Nonlinear mode: 2^ceil(nLR) distinct fair-coin words (duplicates redrawn).
/// Linear mode: span of ceil(nLR) fair-coin generator columns.
MainCode sample_main_code(const EnsembleConfig& cfg);
MainCode sample_main_code(const EnsembleConfig& cfg, std::mt19937_64& rng);

struct ScaledDensity {
  /// 2^(LR) / q.
  double a_star = 0;
  /// M / (a* q)^n.
  double density = 0;
  /// log2(M) / (n L).
  double realized_rate = 0;
  /// Scaled period a* q = q^R.
  double period = 0;
  /// Scaled grid step a* = q^-(1-R).
  double resolution = 0;
};
ScaledDensity scaled_point_density(const EnsembleConfig& cfg);

struct ChiSquare {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 1;
};

struct ConditionReport {
  std::uint64_t trials = 0;
  double threshold = 1e-3;
  /// Marginal of a fixed codeword against uniform on Z_q^n.
  std::optional<ChiSquare> marginal;
  /// Two codewords of one C* draw against the product of their marginals.
  std::optional<ChiSquare> cstar_pair;
  /// Two Construction C points sharing the level-1 word.
  std::optional<ChiSquare> shared_lsb_pair;
  bool cstar_pair_flagged() const { return cstar_pair && cstar_pair->p_value < threshold; }
  bool shared_lsb_pair_flagged() const {
    return shared_lsb_pair && shared_lsb_pair->p_value < threshold;
  }
};

/// Empirical checks of uniformity and pairwise independence over `trials`
/// independent draws. Requires q^n <= 256.
ConditionReport condition_checks(const EnsembleConfig& cfg, std::uint64_t trials);

/// Upper-tail probability of a chi-square variable.
double chi_square_sf(double statistic, std::size_t dof);

double binary_entropy(double p);

struct GvbCurvePoint {
  double alpha1 = 0;
  double rho = 0;
  std::size_t levels_used = 0;
};

/// sqrt(alpha1 pi e) / (sqrt 2 prod_i 2^H(alpha1 / 4^(i-1))), dropping the
/// factors whose argument is below 1e-15.
GvbCurvePoint gvb_packing_efficiency(double alpha1);
/// Same with the product cut after `max_levels` factors.
GvbCurvePoint gvb_packing_efficiency(double alpha1, std::size_t max_levels);

struct GvbOptimum {
  double alpha_star = 0;
  double rho_star = 0;
};
/// Grid scan of (lo, hi] at `step`, then golden-section refinement to `tol`.
GvbOptimum gvb_maximize(double step = 1e-3, double tol = 1e-8, double lo = 1e-4, double hi = 0.5);

struct GvbSizeCheck {
  bool holds = false;
  std::uint64_t size = 0;
  std::size_t dmin = 0;
  /// |B(d - 1, n)| in decimal.
  std::string ball_size;
  /// 2^n / |B(d - 1, n)|.
  double bound = 0;
};
/// |C| >= 2^n / |B(d - 1, n)| with exact integer arithmetic.
GvbSizeCheck gvb_size_check(const BinaryCode& code);

struct DminSummary {
  double mean = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
};
struct EnsembleDminReport {
  std::uint64_t trials = 0;
  DminSummary cstar;
  DminSummary c;
};
/// d^2 of random C* against Construction C from independent level codes of rate R.
EnsembleDminReport empirical_dmin_ensemble(const EnsembleConfig& cfg, std::uint64_t trials);

}  // namespace mlc
