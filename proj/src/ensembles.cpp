#include "mlc/ensembles.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "mlc/geometry.hpp"

namespace mlc {

namespace {

BitWord random_word(std::size_t length, std::mt19937_64& rng) {
  BitWord w(length);
  for (std::size_t b = 0; b < w.block_count(); ++b) {
    const std::size_t bits = std::min<std::size_t>(64, length - 64 * b);
    const std::uint64_t v = rng();
    w.block(b) = bits == 64 ? v : v & ((std::uint64_t{1} << bits) - 1);
  }
  return w;
}

/// `count` distinct fair-coin words of the given length.
std::vector<BitWord> distinct_words(std::size_t length, std::uint64_t count, std::mt19937_64& rng) {
  if (length < 64 && count > (std::uint64_t{1} << length)) {
    throw std::invalid_argument("cannot draw more distinct words than the space holds");
  }
  if (count > kDefaultEnumerationCap) {
    throw BudgetExceeded("random code: too many words", count, kDefaultEnumerationCap);
  }
  std::unordered_set<BitWord, BitWordHash> seen;
  std::vector<BitWord> words;
  words.reserve(count);
  while (words.size() < count) {
    BitWord w = random_word(length, rng);
    if (seen.insert(w).second) words.push_back(std::move(w));
  }
  return words;
}

BinaryCode random_code(std::size_t length, std::size_t log2_words, EnsembleMode mode,
                       std::mt19937_64& rng) {
  if (mode == EnsembleMode::linear_generator) {
    std::vector<BitWord> columns;
    for (std::size_t k = 0; k < log2_words; ++k) columns.push_back(random_word(length, rng));
    return enumerate_from_generator(length, columns);
  }
  return BinaryCode(length, distinct_words(length, std::uint64_t{1} << log2_words, rng));
}

/// Pearson statistic against expected counts; cells with zero expectation are skipped.
ChiSquare pearson(const std::vector<double>& observed, const std::vector<double>& expected,
                  std::size_t dof) {
  ChiSquare out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0) continue;
    const double d = observed[i] - expected[i];
    out.statistic += d * d / expected[i];
  }
  out.dof = dof;
  out.p_value = chi_square_sf(out.statistic, dof);
  return out;
}

ChiSquare uniformity_test(const std::vector<std::uint64_t>& counts, std::uint64_t total) {
  std::vector<double> obs(counts.begin(), counts.end());
  std::vector<double> exp(counts.size(), static_cast<double>(total) / counts.size());
  return pearson(obs, exp, counts.size() - 1);
}

/// Independence test on a cells x cells contingency table.
ChiSquare independence_test(const std::vector<std::uint64_t>& joint, std::size_t cells,
                            std::uint64_t total) {
  std::vector<double> row(cells, 0), col(cells, 0);
  for (std::size_t a = 0; a < cells; ++a) {
    for (std::size_t b = 0; b < cells; ++b) {
      row[a] += joint[a * cells + b];
      col[b] += joint[a * cells + b];
    }
  }
  std::size_t rows_used = 0, cols_used = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    rows_used += row[i] > 0;
    cols_used += col[i] > 0;
  }
  std::vector<double> obs(joint.begin(), joint.end()), exp(cells * cells);
  for (std::size_t a = 0; a < cells; ++a) {
    for (std::size_t b = 0; b < cells; ++b) exp[a * cells + b] = row[a] * col[b] / total;
  }
  const std::size_t dof = (rows_used > 0 ? rows_used - 1 : 0) * (cols_used > 0 ? cols_used - 1 : 0);
  return pearson(obs, exp, std::max<std::size_t>(dof, 1));
}

}  // namespace

std::string to_string(EnsembleMode m) {
  return m == EnsembleMode::linear_generator ? "linear" : "nonlinear";
}

EnsembleMode ensemble_mode_from_string(const std::string& s) {
  if (s == "linear") return EnsembleMode::linear_generator;
  if (s == "nonlinear") return EnsembleMode::nonlinear_coin;
  throw std::invalid_argument("unknown ensemble mode '" + s + "' (expected linear or nonlinear)");
}

std::size_t EnsembleConfig::log2_words() const {
  // The epsilon keeps exact products such as 4 * 0.5 from rounding up.
  return static_cast<std::size_t>(std::ceil(static_cast<double>(n * levels) * rate - 1e-9));
}

void EnsembleConfig::validate() const {
  if (n == 0) throw std::invalid_argument("ensemble: n must be positive");
  if (levels < 1 || levels > kMaxLevels) throw std::invalid_argument("ensemble: bad level count");
  if (!(rate > 0 && rate <= 1)) throw std::invalid_argument("ensemble: rate must lie in (0, 1]");
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

MainCode sample_main_code(const EnsembleConfig& cfg, std::mt19937_64& rng) {
  cfg.validate();
  return MainCode(random_code(cfg.n * cfg.levels, cfg.log2_words(), cfg.mode, rng), cfg.n, cfg.levels);
}

MainCode sample_main_code(const EnsembleConfig& cfg) {
  auto rng = trial_engine(cfg.seed, 0);
  return sample_main_code(cfg, rng);
}

ScaledDensity scaled_point_density(const EnsembleConfig& cfg) {
  cfg.validate();
  const double L = static_cast<double>(cfg.levels);
  const double n = static_cast<double>(cfg.n);
  const double q = std::exp2(L);
  ScaledDensity out;
  out.a_star = std::exp2(L * cfg.rate) / q;
  const double log2_m = static_cast<double>(cfg.log2_words());
  // M / (a* q)^n = 2^(log2 M - n L R), exact when n L R is an integer.
  out.density = std::exp2(log2_m - n * L * cfg.rate);
  if (std::abs(log2_m - n * L * cfg.rate) < 1e-9) out.density = 1.0;
  out.realized_rate = log2_m / (n * L);
  out.period = out.a_star * q;
  out.resolution = out.a_star;
  return out;
}

double chi_square_sf(double statistic, std::size_t dof) {
  if (dof == 0) throw std::invalid_argument("chi_square_sf: zero degrees of freedom");
  boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::cdf(boost::math::complement(dist, std::max(0.0, statistic)));
}

ConditionReport condition_checks(const EnsembleConfig& cfg, std::uint64_t trials) {
  cfg.validate();
  ConditionReport out;
  out.trials = trials;
  if (trials == 0) return out;
  const std::size_t n = cfg.n, L = cfg.levels;
  const std::uint32_t q = std::uint32_t{1} << L;
  std::size_t cells = 1;
  for (std::size_t j = 0; j < n; ++j) {
    cells *= q;
    if (cells > 256) throw std::invalid_argument("condition_checks: q^n must not exceed 256");
  }
  auto cell_of = [&](const BitWord& w) {
    std::size_t cell = 0;
    for (std::size_t j = n; j-- > 0;) {
      std::uint32_t v = 0;
      for (std::size_t i = 0; i < L; ++i) v |= static_cast<std::uint32_t>(w.get(i * n + j)) << i;
      cell = cell * q + v;
    }
    return cell;
  };

  std::vector<std::uint64_t> marginal(cells, 0), cstar_joint(cells * cells, 0),
      shared_joint(cells * cells, 0);
  std::mt19937_64 rng = trial_engine(cfg.seed, 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    // Two codewords of one fair-coin main code draw.
    const BitWord x = random_word(n * L, rng);
    const BitWord y = random_word(n * L, rng);
    const std::size_t cx = cell_of(x);
    ++marginal[cx];
    ++cstar_joint[cx * cells + cell_of(y)];
    // Construction C: both points reuse the level-1 word of x.
    BitWord z = random_word(n * L, rng);
    BitWord u = random_word(n * L, rng);
    const BitWord lsb = x.slice(0, n);
    z.assign_slice(0, lsb);
    u.assign_slice(0, lsb);
    ++shared_joint[cell_of(z) * cells + cell_of(u)];
  }
  out.marginal = uniformity_test(marginal, trials);
  out.cstar_pair = independence_test(cstar_joint, cells, trials);
  out.shared_lsb_pair = independence_test(shared_joint, cells, trials);
  return out;
}

double binary_entropy(double p) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("binary_entropy: p must lie in [0, 1]");
  if (p == 0 || p == 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

GvbCurvePoint gvb_packing_efficiency(double alpha1, std::size_t max_levels) {
  if (!(alpha1 > 0 && alpha1 <= 0.5)) {
    throw std::invalid_argument("gvb_packing_efficiency: alpha1 must lie in (0, 1/2]");
  }
  GvbCurvePoint out;
  out.alpha1 = alpha1;
  double entropy_sum = 0;
  double a = alpha1;
  while (a >= 1e-15 && out.levels_used < max_levels) {
    entropy_sum += binary_entropy(a);
    ++out.levels_used;
    a /= 4;
  }
  const double log_rho = 0.5 * std::log(alpha1 * std::numbers::pi * std::numbers::e) -
                         0.5 * std::numbers::ln2 - entropy_sum * std::numbers::ln2;
  out.rho = std::exp(log_rho);
  return out;
}

GvbCurvePoint gvb_packing_efficiency(double alpha1) {
  return gvb_packing_efficiency(alpha1, std::numeric_limits<std::size_t>::max());
}

GvbOptimum gvb_maximize(double step, double tol, double lo, double hi) {
  if (!(step > 0 && step <= 1e-3 * (1 + 1e-9))) {
    throw std::invalid_argument("gvb_maximize: grid step must lie in (0, 1e-3]");
  }
  if (!(lo >= 0 && lo < hi && hi <= 0.5)) throw std::invalid_argument("gvb_maximize: bad domain");
  auto rho = [](double a) { return gvb_packing_efficiency(a).rho; };
  double best_a = hi, best_rho = rho(hi);
  const auto steps = static_cast<std::uint64_t>(std::floor((hi - lo) / step));
  for (std::uint64_t k = 1; k <= steps; ++k) {
    const double a = lo + static_cast<double>(k) * step;
    if (a > hi) break;
    const double r = rho(a);
    if (r > best_rho) {
      best_rho = r;
      best_a = a;
    }
  }
  double a = std::max(lo + 1e-12, best_a - step);
  double b = std::min(hi, best_a + step);
  const double invphi = (std::sqrt(5.0) - 1) / 2;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = rho(x1), f2 = rho(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = rho(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = rho(x1);
    }
  }
  const double mid = 0.5 * (a + b);
  GvbOptimum out{mid, rho(mid)};
  if (best_rho > out.rho_star) out = {best_a, best_rho};
  return out;
}

GvbSizeCheck gvb_size_check(const BinaryCode& code) {
  using boost::multiprecision::cpp_int;
  GvbSizeCheck out;
  out.size = code.size();
  out.dmin = min_hamming_distance(code);
  const std::size_t n = code.length();
  cpp_int ball = 0, binom = 1;
  for (std::size_t w = 0; w + 1 <= out.dmin; ++w) {
    ball += binom;
    binom = binom * (n - w) / (w + 1);
  }
  const cpp_int space = cpp_int(1) << n;
  out.holds = cpp_int(out.size) * ball >= space;
  out.ball_size = ball.str();
  out.bound = static_cast<double>(space) / static_cast<double>(ball);
  return out;
}

EnsembleDminReport empirical_dmin_ensemble(const EnsembleConfig& cfg, std::uint64_t trials) {
  cfg.validate();
  EnsembleDminReport out;
  out.trials = trials;
  if (trials == 0) return out;
  const std::size_t per_level =
      static_cast<std::size_t>(std::ceil(static_cast<double>(cfg.n) * cfg.rate - 1e-9));
  double sum_star = 0, sum_c = 0;
  out.cstar.min = out.c.min = ~std::uint64_t{0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto rng = trial_engine(cfg.seed, t);
    const MainCode main = sample_main_code(cfg, rng);
    const std::uint64_t d_star = dmin_oracle(construction_cstar(main));
    std::vector<BinaryCode> levels;
    for (std::size_t i = 0; i < cfg.levels; ++i) levels.push_back(random_code(cfg.n, per_level, cfg.mode, rng));
    const std::uint64_t d_c = dmin_oracle(construction_c(levels));
    sum_star += static_cast<double>(d_star);
    sum_c += static_cast<double>(d_c);
    out.cstar.min = std::min(out.cstar.min, d_star);
    out.cstar.max = std::max(out.cstar.max, d_star);
    out.c.min = std::min(out.c.min, d_c);
    out.c.max = std::max(out.c.max, d_c);
  }
  out.cstar.mean = sum_star / static_cast<double>(trials);
  out.c.mean = sum_c / static_cast<double>(trials);
  return out;
}

}  // namespace mlc
