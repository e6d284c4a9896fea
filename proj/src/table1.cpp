#include "mlc/table1.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mlc/catalog.hpp"
#include "mlc/leech.hpp"

namespace mlc {

namespace {

struct Published {
  double d2_cstar, d2_c;
  double delta_cstar, delta_c, rho_cstar, rho_c;
  const char* delta_cstar_text;
  const char* delta_c_text;
};

constexpr double kPi = std::numbers::pi;

Published published(const std::string& id) {
  if (id == "ex4") return {1, 1, kPi / 16, kPi / 8, 0.4431, 0.6266, "pi/16", "pi/8"};
  if (id == "ex5") return {4, 1, kPi / 4, kPi / 8, 0.8862, 0.4431, "pi/4", "pi/8"};
  if (id == "ex6") return {32, 24, 0.001929, 0.00012, 0.7707, 0.6236, "0.001929", "0.00012"};
  if (id == "ex9") return {5, 1, 0.8781, 0.7853, 0.9209, 0.8861, "0.8781", "0.7853"};
  if (id == "ex10") return {1, 1, 0.5, 1, 0.5, 1, "0.5", "1"};
  throw std::invalid_argument("table1: no published row for '" + id + "'");
}

Table1Cell exact_cell(std::string column, std::uint64_t recomputed, double published) {
  Table1Cell c{std::move(column), static_cast<double>(recomputed), published, format6(published), false};
  c.mismatch = c.recomputed != published;
  return c;
}

Table1Cell real_cell(std::string column, double recomputed, double published, std::string text) {
  Table1Cell c{std::move(column), recomputed, published, std::move(text), false};
  c.mismatch = std::abs(recomputed - published) > kTable1Tolerance;
  return c;
}

Table1Row make_row(const std::string& id, std::size_t dim, bool lattice, const PackingReport& cstar,
                   const PackingReport& c) {
  const auto pub = published(id);
  Table1Row row;
  row.id = id;
  row.dimension = dim;
  row.cstar_is_lattice = lattice;
  row.cells = {
      exact_cell("d2_cstar", cstar.dmin2, pub.d2_cstar),
      exact_cell("d2_c", c.dmin2, pub.d2_c),
      real_cell("delta_cstar", cstar.delta, pub.delta_cstar, pub.delta_cstar_text),
      real_cell("delta_c", c.delta, pub.delta_c, pub.delta_c_text),
      real_cell("rho_cstar", cstar.rho, pub.rho_cstar, format6(pub.rho_cstar)),
      real_cell("rho_c", c.rho, pub.rho_c, format6(pub.rho_c)),
  };
  return row;
}

Table1Row small_row(const std::string& id) {
  const auto entry = catalog_example(id);
  const auto cstar = construction_cstar(*entry.main);
  const auto assoc = associated_construction_c(*entry.main);
  const bool lattice = brute_closure_oracle(cstar).verdict == Verdict::lattice;
  return make_row(id, entry.n, lattice, packing_report(cstar), packing_report(assoc));
}

Table1Row leech_row() {
  const LeechMainCode code;
  const bool lattice = leech_thm4_check(code).verdict == Verdict::lattice;
  const auto prefixes = code.prefixes();
  const auto d2 = dmin_to_zero_structured(prefixes, LeechMainCode::kN, LeechMainCode::kLevels);
  const std::optional<std::size_t> distances[3] = {LeechMainCode::kN, min_hamming_distance(code.golay()),
                                                   1};
  const auto d2_c = dmin_formula_c(std::span<const std::optional<std::size_t>>(distances));
  return make_row("ex6", LeechMainCode::kN, lattice,
                  packing_report(LeechMainCode::kN, LeechMainCode::kLevels, LeechMainCode::kLog2Size, d2),
                  packing_report(LeechMainCode::kN, LeechMainCode::kLevels, LeechMainCode::kLog2Size + 1,
                                 d2_c));
}

}  // namespace

std::vector<Table1Row> table1(const std::vector<std::string>& ids) {
  std::vector<Table1Row> rows;
  for (const auto& id : ids) rows.push_back(id == "ex6" ? leech_row() : small_row(id));
  return rows;
}

std::vector<Table1Row> table1() { return table1({"ex4", "ex5", "ex6", "ex9", "ex10"}); }

std::string render_table1(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) {
    out << s;
    for (std::size_t i = s.size(); i < w; ++i) out << ' ';
  };
  const std::size_t w = 30;
  pad("example", 8);
  pad("dim", 5);
  for (const char* h : {"d2(C*)", "d2(C)", "Delta(C*)", "Delta(C)", "rho(C*)", "rho(C)"}) pad(h, w);
  out << '\n';
  for (const auto& row : rows) {
    pad(row.id + (row.cstar_is_lattice ? "" : "^"), 8);
    pad(std::to_string(row.dimension), 5);
    for (const auto& c : row.cells) {
      std::string cell = format6(c.recomputed);
      if (c.mismatch) cell += " * published " + c.published_text;
      pad(cell, w);
    }
    out << '\n';
  }
  out << "^ nonlattice; * recomputed value differs from the published table\n";
  return out.str();
}

json to_json(const std::vector<Table1Row>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json r;
    r["id"] = row.id;
    r["dimension"] = row.dimension;
    r["cstar_is_lattice"] = row.cstar_is_lattice;
    json cells = json::object();
    for (const auto& c : row.cells) {
      cells[c.column] = {{"recomputed", round6(c.recomputed)},
                         {"published", round6(c.published)},
                         {"published_text", c.published_text},
                         {"mismatch", c.mismatch}};
    }
    r["cells"] = std::move(cells);
    arr.push_back(std::move(r));
  }
  return json{{"tolerance", kTable1Tolerance}, {"rows", std::move(arr)}};
}

}  // namespace mlc
