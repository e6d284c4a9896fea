// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.
// Every tolerance and sample count below is fixed here, not read from flags.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>

#include "mlc/catalog.hpp"
#include "mlc/ensembles.hpp"
#include "mlc/geometry.hpp"
#include "mlc/latticeness.hpp"
#include "mlc/leech.hpp"
#include "mlc/table1.hpp"
#include "support.hpp"

using namespace mlc;

namespace {

constexpr double kCellTol = 5e-4;
constexpr double kLeechDeltaTol = 1e-6;
constexpr double kLeechRhoTol = 5e-4;
constexpr double kSmallRuntimeS = 1.0;
constexpr double kLeechRuntimeS = 60.0;
constexpr int kOracleCodes = 10000;
constexpr int kCarryPairs = 100000;
constexpr int kFormulaFamilies = 1000;
constexpr int kEdsCodes = 1000;
constexpr int kEdsFamilies = 100;
constexpr int kMetaRuns = 100;
constexpr std::uint64_t kConditionTrials = 100000;
constexpr int kMetaRequired = 99;

// Cells whose published value disagrees with the recomputation; criterion 9
// requires exactly these to be flagged, so criterion 1 skips them.
const std::set<std::string> kDocumentedMismatches = {"ex9:delta_cstar", "ex9:delta_c", "ex9:rho_cstar",
                                                     "ex9:rho_c",       "ex5:rho_c",   "ex6:d2_c",
                                                     "ex6:rho_c"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome table_rows() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = table1({"ex4", "ex5", "ex10"});
  const double secs = seconds_since(t0);
  bool ok = secs < kSmallRuntimeS;
  std::string detail;
  int checked = 0;
  for (const auto& row : rows) {
    for (const auto& c : row.cells) {
      if (kDocumentedMismatches.contains(row.id + ":" + c.column)) {
        detail += " skipped " + row.id + ":" + c.column;
        continue;
      }
      ++checked;
      const bool exact = c.column.rfind("d2", 0) == 0;
      const bool good = exact ? c.recomputed == c.published : std::abs(c.recomputed - c.published) <= kCellTol;
      if (!good) {
        ok = false;
        detail += fmt(" %s:%s=%.6g(vs %.6g)", row.id.c_str(), c.column.c_str(), c.recomputed, c.published);
      }
    }
  }
  return {ok, fmt("3 rows, %d cells matched, %.3fs;", checked, secs) + detail};
}

Outcome leech() {
  const auto t0 = std::chrono::steady_clock::now();
  const LeechMainCode code;
  const auto r = leech_report(code);
  const double secs = seconds_since(t0);
  bool chain_ok = r.thm4.chain.size() == 5;
  for (const auto& link : r.thm4.chain) chain_ok = chain_ok && link.holds;
  const double expect = std::pow(std::numbers::pi, 12) / 479001600.0;
  const bool ok = r.thm4.verdict == Verdict::lattice && chain_ok && r.golay_parity_violations == 0 &&
                  r.golay_pairs_scanned == 16777216 && r.dmin2 == 32 &&
                  std::abs(r.packing.delta - expect) <= kLeechDeltaTol &&
                  std::abs(r.packing.rho - 0.7707) <= kLeechRhoTol && secs <= kLeechRuntimeS;
  return {ok, fmt("verdict=%s links=%zu violations=%llu/%llu d2=%llu delta=%.7f rho=%.5f %.1fs",
                  to_string(r.thm4.verdict).c_str(), r.thm4.chain.size(),
                  static_cast<unsigned long long>(r.golay_parity_violations),
                  static_cast<unsigned long long>(r.golay_pairs_scanned),
                  static_cast<unsigned long long>(r.dmin2), r.packing.delta, r.packing.rho, secs)};
}

Outcome gvb() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto opt = gvb_maximize();
  const double secs = seconds_since(t0);
  const bool ok = opt.alpha_star >= 0.190 && opt.alpha_star <= 0.200 && opt.rho_star >= 0.4163 &&
                  opt.rho_star <= 0.4173 && opt.rho_star < 0.5 && secs < kSmallRuntimeS;
  return {ok, fmt("alpha*=%.5f rho*=%.5f %.3fs", opt.alpha_star, opt.rho_star, secs)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(1001);
  int disagree = 0, bad_witness = 0, nonlattice = 0;
  for (int t = 0; t < kOracleCodes; ++t) {
    const std::size_t n = 1 + rng() % 3, levels = 1 + rng() % 3;
    const auto m = mlc_test::random_linear_main_code(rng, n, levels, rng() % (n * levels + 1));
    const auto p = construction_cstar(m);
    const auto th = thm5_check(m);
    const auto br = brute_closure_oracle(p);
    if (th.verdict != br.verdict) ++disagree;
    if (th.verdict == Verdict::not_lattice) {
      ++nonlattice;
      if (!revalidate_witness(th, m)) ++bad_witness;
      if (!revalidate_witness(br, p)) ++bad_witness;
    }
  }
  return {disagree == 0 && bad_witness == 0,
          fmt("%d codes, %d nonlattice, %d disagreements, %d bad witnesses", kOracleCodes, nonlattice, disagree,
              bad_witness)};
}

Outcome carries() {
  std::mt19937_64 rng(1002);
  int failures = 0;
  for (int t = 0; t < kCarryPairs; ++t) {
    const std::size_t levels = 1 + rng() % 6;
    const std::size_t n = 1 + rng() % (48 / levels);
    const auto a = mlc_test::random_word(rng, n * levels), b = mlc_test::random_word(rng, n * levels);
    const auto rec = carry_terms(a, b, n, levels);
    const auto got = reconstruct_sum(a, b, rec, n, levels);
    const auto x = mlc_test::lift_word(a, n, levels), y = mlc_test::lift_word(b, n, levels);
    for (std::size_t j = 0; j < n; ++j) {
      if (got[j] != static_cast<std::int64_t>(x[j]) + y[j]) {
        ++failures;
        break;
      }
    }
  }
  return {failures == 0, fmt("%d pairs, %d failures", kCarryPairs, failures)};
}

Outcome formula() {
  std::mt19937_64 rng(1003);
  int disagree = 0;
  for (int t = 0; t < kFormulaFamilies; ++t) {
    const std::size_t n = 1 + rng() % 4, levels = 1 + rng() % 3;
    std::vector<BinaryCode> codes;
    for (std::size_t i = 0; i < levels; ++i) codes.push_back(mlc_test::random_linear_code(rng, n, rng() % (n + 1)));
    if (dmin_formula_c(codes) != dmin_oracle(construction_c(codes))) ++disagree;
  }
  const LeechMainCode code;
  const std::optional<std::size_t> distances[3] = {24, min_hamming_distance(code.golay()), 1};
  const auto assoc = dmin_formula_c(std::span<const std::optional<std::size_t>>(distances));
  const auto rows = table1({"ex6"});
  bool reported = false;
  for (const auto& c : rows[0].cells) {
    if (c.column == "d2_c") reported = c.mismatch && c.recomputed == static_cast<double>(assoc);
  }
  return {disagree == 0 && reported,
          fmt("%d families, %d disagreements; Leech associated C d2=%llu vs published 24 %s", kFormulaFamilies,
              disagree, static_cast<unsigned long long>(assoc), reported ? "(flagged)" : "(NOT flagged)")};
}

Outcome dn_parity() {
  bool ok = true;
  std::string detail;
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto d = dn_plus(n);
    const bool t1 = thm1_check(d.codes).verdict == Verdict::lattice;
    const bool br = brute_closure_oracle(construction_c(d.codes)).verdict == Verdict::lattice;
    const bool even = n % 2 == 0;
    ok = ok && t1 == even && br == even;
    detail += fmt(" %zu:%c%c", n, t1 ? 'L' : 'N', br ? 'L' : 'N');
  }
  return {ok, "thm1/brute" + detail};
}

Outcome eds() {
  std::mt19937_64 rng(1004);
  int two_level_fail = 0, family_fail = 0;
  for (int t = 0; t < kEdsCodes; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto m = mlc_test::random_linear_main_code(rng, n, 2, rng() % (2 * n + 1));
    if (!eds_check(construction_cstar(m)).eds) ++two_level_fail;
  }
  for (int t = 0; t < kEdsFamilies; ++t) {
    const std::size_t n = 1 + rng() % 3, levels = 2 + rng() % 2;
    const std::size_t i = rng() % (levels - 1);
    std::vector<BinaryCode> codes(levels, zero_code(n));
    codes[i] = mlc_test::random_linear_code(rng, n, 1 + rng() % n);
    codes[levels - 1] = mlc_test::random_linear_code(rng, n, 1 + rng() % n);
    if (!eds_check(construction_c(codes)).eds) ++family_fail;
  }
  const auto r = eds_check(construction_c(catalog_example("ex2").codes));
  const bool witness_ok = !r.eds && r.witness && r.witness->first == std::vector<int>{1, 1} &&
                          r.witness->second == std::vector<int>{3, 3} && r.d2 == std::optional<std::uint64_t>(2) &&
                          r.counts.first == 2 && r.counts.second == 1;
  return {two_level_fail == 0 && family_fail == 0 && witness_ok,
          fmt("two-level C* %d/%d EDS, two-code C %d/%d EDS, three-level C witness %s", kEdsCodes - two_level_fail,
              kEdsCodes, kEdsFamilies - family_fail, kEdsFamilies, witness_ok ? "(1,1) vs (3,3): 2 vs 1 at d2=2" : "wrong")};
}

Outcome ledger() {
  const auto rows = table1();
  std::set<std::string> flagged;
  for (const auto& row : rows) {
    for (const auto& c : row.cells) {
      if (c.mismatch) flagged.insert(row.id + ":" + c.column);
    }
  }
  std::string list;
  for (const auto& f : flagged) list += " " + f;
  return {flagged == kDocumentedMismatches, fmt("%zu flagged:", flagged.size()) + list};
}

Outcome conditions() {
  int good = 0, lsb_flagged = 0, cstar_clear = 0;
  for (int run = 0; run < kMetaRuns; ++run) {
    const EnsembleConfig cfg{2, 2, 0.5, EnsembleMode::nonlinear_coin, static_cast<std::uint64_t>(run + 1)};
    const auto r = condition_checks(cfg, kConditionTrials);
    lsb_flagged += r.shared_lsb_pair_flagged();
    cstar_clear += !r.cstar_pair_flagged();
    good += r.shared_lsb_pair_flagged() && !r.cstar_pair_flagged();
  }
  return {good >= kMetaRequired, fmt("%d/%d runs good (shared-LSB flagged %d, C* clear %d)", good, kMetaRuns,
                                     lsb_flagged, cstar_clear)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"table rows ex4/ex5/ex10", table_rows},
      {"Leech pipeline", leech},
      {"GVB optimum", gvb},
      {"thm5 vs closure oracle", oracle_equivalence},
      {"carry expansion", carries},
      {"Construction C distance formula", formula},
      {"D_n+ parity law", dn_parity},
      {"EDS", eds},
      {"table mismatch ledger", ledger},
      {"ensemble independence", conditions},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
