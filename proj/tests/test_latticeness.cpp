#include <doctest.h>

#include <random>

#include "mlc/catalog.hpp"
#include "mlc/error.hpp"
#include "mlc/latticeness.hpp"
#include "mlc/parallel.hpp"
#include "support.hpp"

using namespace mlc;
using mlc_test::Point;

namespace {

BitWord w(const char* s) { return BitWord::from_string(s); }

// The recursion read literally as r_i^(j) = r_i^(j-1) * r_{i-1}^(j-1). It is
// kept here to pin down why the library uses the ripple-carry form instead.
std::vector<BitWord> literal_carries(const BitWord& c, const BitWord& ct, std::size_t n, std::size_t levels) {
  std::vector<BitWord> s;
  std::vector<BitWord> prev_r;
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    const auto a = c.slice(i * n, n), b = ct.slice(i * n, n);
    BitWord si = a & b;
    std::vector<BitWord> r;
    if (i > 0) {
      const auto pa = c.slice((i - 1) * n, n), pb = ct.slice((i - 1) * n, n);
      r.push_back((a ^ b) & (pa & pb));
      for (std::size_t j = 1; j < i; ++j) r.push_back(r[j - 1] & prev_r[j - 1]);
    }
    for (const auto& t : r) si ^= t;
    s.push_back(si);
    prev_r = r;
  }
  return s;
}

std::vector<std::int64_t> integer_sum(const BitWord& c, const BitWord& ct, std::size_t n, std::size_t levels) {
  const auto a = mlc_test::lift_word(c, n, levels), b = mlc_test::lift_word(ct, n, levels);
  std::vector<std::int64_t> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = a[j] + b[j];
  return out;
}

}  // namespace

TEST_CASE("brute closure oracle") {
  const auto ex1 = construction_c(catalog_example("ex1").codes);
  const auto r = brute_closure_oracle(ex1);
  CHECK(r.verdict == Verdict::not_lattice);
  REQUIRE(r.witness);
  CHECK(r.witness->kind == WitnessKind::rep_pair);
  CHECK(revalidate_witness(r, ex1));
  // Reps {00, 11} mod 4: 0 - 11 = 33 is missing, so the first row fails at b = 11.
  CHECK(r.witness->reps == std::vector<Point>{{0, 0}, {1, 1}});

  CHECK(brute_closure_oracle(construction_cstar(*catalog_example("ex5").main)).verdict == Verdict::lattice);
  const PeriodicConstellation zero(3, 2, {0, 0, 0}, Source::custom);
  CHECK(brute_closure_oracle(zero).verdict == Verdict::lattice);
  CHECK_THROWS_AS(brute_closure_oracle(ex1, 3), BudgetExceeded);
}

TEST_CASE("thm1_check on level families") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto d = dn_plus(n);
    const auto r = thm1_check(d.codes);
    CHECK((r.verdict == Verdict::lattice) == d.expected_lattice);
    if (r.verdict == Verdict::lattice) {
      REQUIRE(r.c_equals_d);
      CHECK(*r.c_equals_d);
    } else {
      REQUIRE(r.witness);
      // odd n: the all-ones word has odd weight, so nesting already fails
      CHECK(r.witness->kind == WitnessKind::not_nested);
    }
  }
  const std::vector<BinaryCode> single = {repetition_code(5)};
  CHECK(thm1_check(single).verdict == Verdict::lattice);
  const std::vector<BinaryCode> loose = {full_space(2), repetition_code(2)};
  const auto nn = thm1_check(loose);
  CHECK(nn.verdict == Verdict::not_lattice);
  CHECK(nn.witness->kind == WitnessKind::not_nested);
  const std::vector<BinaryCode> nonlinear = {BinaryCode(2, {w("00"), w("10"), w("01")})};
  CHECK_THROWS(thm1_check(nonlinear));
}

TEST_CASE("carry records") {
  SUBCASE("zero words carry nothing") {
    const auto rec = carry_terms(BitWord(6), BitWord(6), 2, 3);
    for (const auto& s : rec.s) CHECK(s.is_zero());
    CHECK(rec.s_star == std::vector<int>{0, 0});
  }
  SUBCASE("one level: only the top carry") {
    const auto rec = carry_terms(w("101"), w("111"), 3, 1);
    CHECK(rec.s.empty());
    CHECK(rec.s_star == std::vector<int>{1, 0, 1});
  }
  SUBCASE("reconstruction matches integer addition") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 3000; ++t) {
      const std::size_t n = 1 + rng() % 8, levels = 1 + rng() % 4;
      const auto a = mlc_test::random_word(rng, n * levels), b = mlc_test::random_word(rng, n * levels);
      const auto rec = carry_terms(a, b, n, levels);
      CHECK(reconstruct_sum(a, b, rec, n, levels) == integer_sum(a, b, n, levels));
      // Terms of one level never overlap, so the xor is also the integer sum.
      for (const auto& level : rec.terms) {
        BitWord seen(n);
        for (const auto& term : level) {
          CHECK((seen & term).is_zero());
          seen ^= term;
        }
      }
      CHECK(carry_tuple(rec, n) == carry_tuple(a, b, n, levels));
    }
  }
  SUBCASE("the literal recursion loses the propagated carry") {
    // 7 + 1 at n = 1, L = 3: the carry ripples through all three levels.
    const auto a = w("111"), b = w("100");
    const auto rec = carry_terms(a, b, 1, 3);
    CHECK(rec.s[0] == w("1"));
    CHECK(rec.s[1] == w("1"));
    CHECK(rec.s_star == std::vector<int>{1});
    const auto lit = literal_carries(a, b, 1, 3);
    CHECK(lit[0] == rec.s[0]);
    CHECK(lit[1] == rec.s[1]);
    // The literal form only starts to differ at L >= 4.
    const auto a4 = w("1111"), b4 = w("1000");
    const auto lit4 = literal_carries(a4, b4, 1, 4);
    const auto rec4 = carry_terms(a4, b4, 1, 4);
    CHECK(lit4[2] == w("0"));
    CHECK(rec4.s[2] == w("1"));
  }
}

TEST_CASE("carry set of a three-level lattice code") {
  const auto ex9 = catalog_example("ex9");
  const auto s = carry_set(*ex9.main);
  CHECK(s == std::vector<BitWord>{w("000000"), w("000010"), w("001001"), w("001011")});
  const MainCode zero(zero_code(4), 2, 2);
  CHECK(carry_set(zero) == std::vector<BitWord>{w("0000")});
  const std::vector<BinaryCode> d4 = {repetition_code(4), even_weight_code(4)};
  const auto prod = product_main_code(d4);
  for (const auto& t : carry_set(prod)) CHECK(prod.code().contains(t));
}

TEST_CASE("thm5_check") {
  CHECK(thm5_check(*catalog_example("ex9").main).verdict == Verdict::lattice);
  const auto ex4 = catalog_example("ex4");
  CHECK(thm5_check(*ex4.main).verdict == Verdict::not_lattice);
  const MainCode nonlinear(BinaryCode(4, {w("0000"), w("1000"), w("0100")}), 2, 2);
  CHECK_THROWS(thm5_check(nonlinear));
  const MainCode nonlattice(BinaryCode(4, {w("0000"), w("1010")}), 2, 2);
  const auto r = thm5_check(nonlattice);
  CHECK(r.verdict == Verdict::not_lattice);
  REQUIRE(r.witness);
  CHECK(r.witness->kind == WitnessKind::carry_tuple);
  CHECK(revalidate_witness(r, nonlattice));
}

TEST_CASE("thm5_check agrees with the oracle on random codes") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = 1 + rng() % 3, levels = 1 + rng() % 3;
    const auto m = mlc_test::random_linear_main_code(rng, n, levels, rng() % (n * levels + 1));
    const auto p = construction_cstar(m);
    const auto th = thm5_check(m);
    const bool group = mlc_test::brute_is_group(p);
    CHECK((th.verdict == Verdict::lattice) == group);
    CHECK(brute_closure_oracle(p).verdict == th.verdict);
    if (th.verdict == Verdict::not_lattice) CHECK(revalidate_witness(th, m));
    const auto t4 = thm4_check(m);
    if (t4.verdict == Verdict::lattice) CHECK(group);
    CHECK(t4.verdict != Verdict::not_lattice);
    if (group) {
      // Negation closure.
      const auto reps = mlc_test::rep_set(p);
      const int q = static_cast<int>(p.period());
      for (const auto& a : reps) {
        Point neg(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) neg[j] = mlc_test::mod(-a[j], q);
        CHECK(reps.count(neg) == 1);
      }
    }
  }
}

TEST_CASE("thm5_check on products matches thm1_check on the factors") {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 150; ++t) {
    const std::size_t n = 1 + rng() % 4, levels = 1 + rng() % 3;
    std::vector<BinaryCode> factors;
    for (std::size_t i = 0; i < levels; ++i) {
      factors.push_back(mlc_test::random_linear_code(rng, n, rng() % (n + 1)));
    }
    const auto r1 = thm1_check(factors);
    if (r1.witness && r1.witness->kind == WitnessKind::not_nested) continue;
    ++checked;
    CHECK(thm5_check(product_main_code(factors)).verdict == r1.verdict);
  }
  CHECK(checked > 50);
}

TEST_CASE("thm4_check chain") {
  const auto r9 = thm4_check(*catalog_example("ex9").main);
  CHECK(r9.verdict == Verdict::inconclusive);
  REQUIRE(r9.witness);
  CHECK(r9.witness->kind == WitnessKind::chain_link);
  CHECK_FALSE(r9.chain.front().holds);
  CHECK(r9.chain.front().lhs == "C1");
  CHECK(r9.chain.front().rhs == "S2(0)");

  const std::vector<BinaryCode> loose = {full_space(2), repetition_code(2)};
  CHECK(thm4_check(product_main_code(loose)).verdict == Verdict::inconclusive);

  const std::vector<BinaryCode> d4 = {repetition_code(4), even_weight_code(4)};
  const auto r = thm4_check(product_main_code(d4));
  CHECK(r.verdict == Verdict::lattice);
  CHECK(r.chain.size() == 3);
}

TEST_CASE("scan results do not depend on the thread count") {
  const auto d = dn_plus(9);
  const auto p = construction_c(d.codes);
  set_thread_count(1);
  const auto one = brute_closure_oracle(p);
  const auto t1 = thm5_check(product_main_code(d.codes));
  set_thread_count(4);
  const auto four = brute_closure_oracle(p);
  const auto t4 = thm5_check(product_main_code(d.codes));
  set_thread_count(0);
  CHECK(one.pairs_scanned == four.pairs_scanned);
  CHECK(one.witness->reps == four.witness->reps);
  CHECK(t1.pairs_scanned == t4.pairs_scanned);
  CHECK(t1.witness->words == t4.witness->words);
}
