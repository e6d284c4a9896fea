#include <doctest.h>

#include <random>
#include <set>

#include "mlc/catalog.hpp"
#include "mlc/constructions.hpp"
#include "mlc/error.hpp"
#include "support.hpp"

using namespace mlc;
using mlc_test::Point;

namespace {

BitWord w(const char* s) { return BitWord::from_string(s); }
BinaryCode code(std::size_t n, std::initializer_list<const char*> words) {
  std::vector<BitWord> v;
  for (auto s : words) v.push_back(w(s));
  return BinaryCode(n, std::move(v));
}
std::set<Point> pts(std::initializer_list<Point> p) { return {p}; }

}  // namespace

TEST_CASE("construction A") {
  const auto p = construction_a(code(2, {"00", "11"}));
  CHECK(p.period() == 2);
  CHECK(mlc_test::rep_set(p) == pts({{0, 0}, {1, 1}}));
  CHECK(construction_a(full_space(3)).size() == 8);
  const auto z = construction_a(zero_code(3));
  CHECK(z.size() == 1);
  CHECK(z.source() == Source::a);
}

TEST_CASE("construction C") {
  const std::vector<BinaryCode> two = {code(2, {"00", "11"}), code(2, {"00"})};
  const auto p = construction_c(two);
  CHECK(p.period() == 4);
  CHECK(mlc_test::rep_set(p) == pts({{0, 0}, {1, 1}}));

  const std::vector<BinaryCode> three = {code(2, {"00", "11"}), code(2, {"00", "11"}), code(2, {"00"})};
  CHECK(mlc_test::rep_set(construction_c(three)) == pts({{0, 0}, {1, 1}, {2, 2}, {3, 3}}));

  const std::vector<BinaryCode> one = {code(3, {"000", "110", "011", "101"})};
  CHECK(construction_c(one) == construction_a(one[0]));
  CHECK_THROWS_AS(construction_c(one, 2), BudgetExceeded);
}

TEST_CASE("construction C* on transcribed main codes") {
  const auto ex4 = catalog_example("ex4");
  CHECK(mlc_test::rep_set(construction_cstar(*ex4.main)) == pts({{0, 0}, {1, 2}, {3, 0}, {2, 2}}));
  const auto ex5 = catalog_example("ex5");
  CHECK(mlc_test::rep_set(construction_cstar(*ex5.main)) == pts({{0, 0}, {2, 0}, {1, 2}, {3, 2}}));
}

TEST_CASE("C* of a product code equals C of its factors") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 4, levels = 1 + rng() % 3;
    std::vector<BinaryCode> factors;
    for (std::size_t i = 0; i < levels; ++i) factors.push_back(mlc_test::random_linear_code(rng, n, rng() % (n + 1)));
    const auto product = product_main_code(factors);
    CHECK(construction_cstar(product) == construction_c(factors));
    const auto projections = projection_codes(product);
    for (std::size_t i = 0; i < levels; ++i) CHECK(projections[i].words() == factors[i].words());
  }
}

TEST_CASE("rep counts and the C* in C inclusion") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 4, levels = 1 + rng() % 3;
    const auto m = mlc_test::random_linear_main_code(rng, n, levels, rng() % (n * levels + 1));
    const auto cstar = construction_cstar(m);
    const auto assoc = associated_construction_c(m);
    CHECK(cstar.size() == m.size());
    std::size_t product = 1;
    for (const auto& c : projection_codes(m)) product *= c.size();
    CHECK(assoc.size() == product);
    const auto big = mlc_test::rep_set(assoc);
    for (const auto& r : mlc_test::rep_set(cstar)) CHECK(big.count(r) == 1);
    // Reps are the raw binary expansions of the codewords.
    std::set<Point> lifted;
    for (const auto& word : m.code().words()) lifted.insert(mlc_test::lift_word(word, n, levels));
    CHECK(lifted == mlc_test::rep_set(cstar));
  }
}

TEST_CASE("construction D") {
  SUBCASE("one level collapses to construction A") {
    const std::vector<BinaryCode> c = {code(3, {"000", "110", "011", "101"})};
    CHECK(mlc_test::rep_set(construction_d(c)) == mlc_test::rep_set(construction_a(c[0])));
  }
  SUBCASE("explicit basis uses only the first k_i vectors per level") {
    const std::vector<BinaryCode> same = {code(2, {"00", "11"}), code(2, {"00", "11"})};
    const std::vector<BitWord> basis = {w("11"), w("01")};
    CHECK(mlc_test::rep_set(construction_d(same, basis)) == pts({{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
    const std::vector<BinaryCode> grown = {code(2, {"00", "11"}), full_space(2)};
    CHECK(construction_d(grown, basis).size() == 8);
  }
  SUBCASE("rep set is independent of the basis completion") {
    const std::vector<BinaryCode> d4 = {repetition_code(4), even_weight_code(4)};
    const std::vector<BitWord> b1 = {w("1111"), w("1100"), w("0110"), w("0011")};
    const std::vector<BitWord> b2 = {w("1111"), w("1010"), w("0110"), w("0001")};
    CHECK(construction_d(d4, b1) == construction_d(d4, b2));
    CHECK(construction_d(d4, b1) == construction_d(d4));
  }
  SUBCASE("agrees with C when the Schur chain closes") {
    for (std::size_t n = 2; n <= 8; n += 2) {
      const std::vector<BinaryCode> d = {repetition_code(n), even_weight_code(n)};
      CHECK(construction_d(d) == construction_c(d));
    }
  }
  SUBCASE("non-nested input is rejected") {
    const std::vector<BinaryCode> bad = {code(2, {"00", "10"}), code(2, {"00", "11"})};
    CHECK_THROWS(construction_d(bad));
  }
}

TEST_CASE("projections and antiprojections") {
  const auto ex4 = catalog_example("ex4");
  const auto p4 = projection_codes(*ex4.main);
  CHECK(p4[0].words() == code(2, {"00", "10"}).words());
  CHECK(p4[1].words() == full_space(2).words());

  const auto ex5 = catalog_example("ex5");
  const std::vector<BitWord> c1_zero = {w("00")};
  const std::vector<BitWord> c1_ten = {w("10")};
  CHECK(antiprojection(*ex5.main, 1, c1_zero).words() == code(2, {"00", "10"}).words());
  CHECK(antiprojection(*ex5.main, 1, c1_ten).words() == code(2, {"01", "11"}).words());

  const auto ex9 = catalog_example("ex9");
  CHECK(projection_codes(*ex9.main)[0].words() == code(2, {"00", "10"}).words());
  CHECK(antiprojection_at_zero(*ex9.main, 0).words() == code(2, {"00"}).words());
  CHECK(antiprojection_at_zero(*ex9.main, 1).words() == code(2, {"00"}).words());
  const std::vector<BitWord> none = {w("11")};
  CHECK(antiprojection(*ex5.main, 1, none).empty());
}

TEST_CASE("associated construction C") {
  const auto ex4 = catalog_example("ex4");
  CHECK(associated_construction_c(*ex4.main).size() == 8);
  const auto ex10 = catalog_example("ex10");
  const auto z = associated_construction_c(*ex10.main);
  CHECK(z.size() == 8);
  CHECK(z.period() == 8);
  const std::vector<BinaryCode> f = {repetition_code(3), even_weight_code(3)};
  const auto prod = product_main_code(f);
  CHECK(associated_construction_c(prod) == construction_cstar(prod));
}

TEST_CASE("membership reduces mod q") {
  const auto p = construction_cstar(*catalog_example("ex4").main);
  const std::vector<std::int64_t> a = {5, 6}, b = {1, 1}, zero = {0, 0}, neg = {-3, -2};
  CHECK(membership(p, a));
  CHECK_FALSE(membership(p, b));
  CHECK(membership(p, zero));
  CHECK(membership(p, neg));
  const std::vector<std::int64_t> wrong = {1};
  CHECK_THROWS(membership(p, wrong));
}

TEST_CASE("constellation invariants") {
  CHECK_THROWS(PeriodicConstellation(2, 2, {0, 4}, Source::custom));
  CHECK_THROWS(PeriodicConstellation(2, 16, {0, 0}, Source::custom));
  const PeriodicConstellation p(2, 2, {3, 1, 0, 0, 3, 1}, Source::custom);
  CHECK(p.size() == 2);
  CHECK(p.reps() == std::vector<Point>{{0, 0}, {3, 1}});
  CHECK(p.index_of(std::vector<std::uint16_t>{3, 1}) == std::optional<std::size_t>(1));
  CHECK_THROWS(MainCode(code(3, {"000"}), 2, 2));
}

TEST_CASE("scaling by a power of two") {
  const auto p = construction_cstar(*catalog_example("ex4").main);
  const auto s = scaled(p, 2);
  CHECK(s.period() == 8);
  CHECK(s.size() == p.size());
  CHECK(mlc_test::rep_set(s) == pts({{0, 0}, {2, 4}, {6, 0}, {4, 4}}));
  CHECK_THROWS(scaled(p, 3));
}
