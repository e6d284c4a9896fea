#include <doctest.h>

#include <set>
#include <sstream>

#include "mlc/catalog.hpp"
#include "mlc/error.hpp"
#include "mlc/io.hpp"
#include "mlc/table1.hpp"

using namespace mlc;

TEST_CASE("code files in generator form") {
  const auto c = parse_code("# repetition\n3 1\n1 1 1   # the only row\n");
  CHECK(c.size() == 2);
  CHECK(c.is_linear());
  CHECK(c.contains(BitWord::from_string("111")));
  const auto packed = parse_code("4 2\n1100\n0011\n");
  CHECK(packed.size() == 4);
}

TEST_CASE("code files in explicit form") {
  const auto c = parse_code("2 *\n\n0 0\n1 0\n0 1\n");
  CHECK(c.size() == 3);
  CHECK(c.linearity() == Linearity::nonlinear);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_code(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("# c\n\n3 x\n") == 3);
  CHECK(line_of("2 *\n00\n0 2\n") == 3);
  CHECK(line_of("2 1\n11\n10\n") == 3);
  CHECK(line_of("2 3\n11\n") == 2);
  CHECK(line_of("") == 1);
}

TEST_CASE("code files round-trip") {
  for (const auto& code : {golay24(), repetition_code(5), catalog_example("ex9").main->code()}) {
    const auto back = parse_code(format_code(code));
    CHECK(back.words() == code.words());
  }
}

TEST_CASE("six significant digits") {
  CHECK(round6(0.19634954084936207) == 0.19635);
  CHECK(format6(0.19634954084936207) == "0.19635");
  CHECK(format6(0.0019295743094039) == "0.00192957");
  CHECK(format6(1.0) == "1");
  CHECK(round6(0.0) == 0.0);
  CHECK(round6(123456789.0) == 123457000.0);
}

TEST_CASE("constellation JSON round-trip") {
  const auto p = construction_cstar(*catalog_example("ex9").main);
  const auto j = to_json(p);
  CHECK(j["q"] == 8);
  CHECK(j["source"] == "Cstar");
  const auto back = constellation_from_json(json::parse(j.dump()));
  CHECK(back == p);
  CHECK(back.source() == Source::cstar);
  auto bad = j;
  bad["q"] = 4;
  CHECK_THROWS_AS(constellation_from_json(bad), Error);
  bad = j;
  bad["reps"][0] = json::array({1});
  CHECK_THROWS_AS(constellation_from_json(bad), Error);
}

TEST_CASE("report JSON layout") {
  const auto p = construction_c(catalog_example("ex1").codes);
  const auto r = brute_closure_oracle(p);
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"verdict", "method", "witness", "pairs_scanned"});
  CHECK(j["verdict"] == "not_lattice");
  CHECK(to_json(r, 1.5).contains("elapsed_ms"));
  CHECK(to_json(r).dump() == to_json(brute_closure_oracle(p)).dump());

  const auto s = to_json(distance_spectrum(p, std::vector<int>{1, 1}, 2));
  CHECK(s["R"] == 2.0);
  CHECK(s["entries"][0]["d2"] == 2);
}

TEST_CASE("GVB CSV") {
  std::ostringstream out;
  write_gvb_csv(out, 0.1);
  const auto text = out.str();
  CHECK(text.rfind("alpha1,rho,levels\n0.1,", 0) == 0);
  CHECK(text.find("# optimum alpha1=0.194") != std::string::npos);
  CHECK_THROWS(write_gvb_csv(out, 0));
}

TEST_CASE("density table marks exactly the known disagreements") {
  const auto rows = table1();
  REQUIRE(rows.size() == 5);
  std::set<std::string> flagged;
  for (const auto& row : rows) {
    for (const auto& c : row.cells) {
      if (c.mismatch) flagged.insert(row.id + ":" + c.column);
    }
  }
  CHECK(flagged == std::set<std::string>{"ex9:delta_cstar", "ex9:delta_c", "ex9:rho_cstar", "ex9:rho_c",
                                         "ex5:rho_c", "ex6:d2_c", "ex6:rho_c"});
  CHECK_FALSE(rows[0].cstar_is_lattice);
  CHECK(rows[1].cstar_is_lattice);
  CHECK(rows[2].cstar_is_lattice);
  CHECK(rows[3].cstar_is_lattice);
  CHECK_FALSE(rows[4].cstar_is_lattice);
  const auto text = render_table1(rows);
  CHECK(text.find("published 24") != std::string::npos);
  CHECK(to_json(rows)["rows"][2]["cells"]["d2_cstar"]["recomputed"] == 32.0);
}
