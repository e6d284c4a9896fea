#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mlc/catalog.hpp"
#include "mlc/geometry.hpp"
#include "mlc/packing.hpp"
#include "support.hpp"

using namespace mlc;

namespace {
constexpr double kPi = std::numbers::pi;
double factorial(int k) { return k <= 1 ? 1.0 : k * factorial(k - 1); }
}  // namespace

TEST_CASE("unit ball volumes") {
  CHECK(log_unit_ball_volume(1) == doctest::Approx(std::log(2.0)));
  CHECK(log_unit_ball_volume(2) == doctest::Approx(std::log(kPi)));
  CHECK(log_unit_ball_volume(3) == doctest::Approx(std::log(4.0 * kPi / 3.0)));
  CHECK(std::exp(log_unit_ball_volume(24)) == doctest::Approx(std::pow(kPi, 12) / factorial(12)).epsilon(1e-12));
  CHECK_THROWS(log_unit_ball_volume(0));
}

TEST_CASE("packing reports of small constellations") {
  const auto r4 = packing_report(construction_cstar(*catalog_example("ex4").main));
  CHECK(r4.dmin2 == 1);
  CHECK(r4.delta == doctest::Approx(kPi / 16));
  CHECK(std::abs(r4.rho - 0.4431) < 5e-4);
  const auto r5 = packing_report(construction_cstar(*catalog_example("ex5").main));
  CHECK(r5.dmin2 == 4);
  CHECK(r5.delta == doctest::Approx(kPi / 4));
  CHECK(std::abs(r5.rho - 0.8862) < 5e-4);
  CHECK(r5.rho == doctest::Approx(std::exp(r5.log_delta / 2)));
  CHECK(r5.log_vol_per_point == doctest::Approx(std::log(16.0 / 4.0)));
  const auto r10 = packing_report(construction_cstar(*catalog_example("ex10").main));
  CHECK(r10.delta == doctest::Approx(0.5));
}

TEST_CASE("Leech-scale report from counts") {
  const auto r = packing_report(24, 3, 36, 32);
  const double expect = std::pow(kPi, 12) / factorial(12);
  CHECK(std::abs(r.delta - expect) < 1e-9);
  CHECK(std::abs(r.rho - 0.7707) < 5e-4);
  CHECK(r.r_pack == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("density stays in (0, 1] and is scale invariant") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4, levels = 1 + rng() % 3;
    const auto m = mlc_test::random_linear_main_code(rng, n, levels, rng() % (n * levels + 1));
    const auto p = construction_cstar(m);
    const auto r = packing_report(p);
    CHECK(r.delta > 0);
    CHECK(r.delta <= 1 + 1e-12);
    if (levels <= 2) {
      const auto s = packing_report(scaled(p, 4));
      CHECK(s.rho == doctest::Approx(r.rho).epsilon(1e-12));
      CHECK(s.dmin2 == 16 * r.dmin2);
    }
  }
}

TEST_CASE("C* against its associated C") {
  const auto ex13 = catalog_example("ex13");
  CHECK(ex13.main->size() == 4);
  const auto d1 = dmin_oracle(construction_cstar(*ex13.main));
  const auto d2 = dmin_oracle(associated_construction_c(*ex13.main));
  CHECK(d1 == 4);
  CHECK(d2 == 4);
  const auto c = compare_cstar_vs_c(*ex13.main, d1, d2);
  CHECK(c.delta_winner == Winner::c);
  CHECK(c.rho_winner == Winner::c);
  CHECK(c.delta_ratio == doctest::Approx(0.5));

  const auto sw = catalog_example("ex13-swapped");
  const auto s1 = dmin_oracle(construction_cstar(*sw.main));
  const auto s2 = dmin_oracle(associated_construction_c(*sw.main));
  CHECK(s1 == 4);
  CHECK(s2 == 2);
  const auto cs = compare_cstar_vs_c(*sw.main, s1, s2);
  CHECK(cs.delta_winner == Winner::cstar);
  CHECK(cs.delta_ratio == doctest::Approx(2.0));

  const std::vector<BinaryCode> f = {repetition_code(4), even_weight_code(4)};
  const auto prod = product_main_code(f);
  const auto d = dmin_oracle(construction_cstar(prod));
  const auto tie = compare_cstar_vs_c(prod, d, d);
  CHECK(tie.delta_winner == Winner::tie);
  CHECK(tie.delta_ratio == doctest::Approx(1.0));
}

TEST_CASE("the comparison agrees with the two packing reports") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 4, levels = 1 + rng() % 3;
    const auto m = mlc_test::random_linear_main_code(rng, n, levels, rng() % (n * levels + 1));
    const auto pc = packing_report(construction_cstar(m));
    const auto pa = packing_report(associated_construction_c(m));
    const auto cmp = compare_cstar_vs_c(m, pc.dmin2, pa.dmin2);
    CHECK(cmp.delta_ratio == doctest::Approx(pc.delta / pa.delta));
    CHECK(cmp.rho_winner == cmp.delta_winner);
    if (cmp.delta_winner == Winner::cstar) CHECK(pc.delta > pa.delta);
    if (cmp.delta_winner == Winner::c) CHECK(pc.delta < pa.delta);
    if (cmp.delta_winner == Winner::tie) CHECK(pc.delta == doctest::Approx(pa.delta));
  }
}
