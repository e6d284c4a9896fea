#pragma once

// Density table for C* and its associated Construction C, recomputed from the
// catalog codes and set against the published values.

#include <string>
#include <vector>

#include "mlc/io.hpp"

namespace mlc {

/// Absolute tolerance for real-valued cells; squared distances must match exactly.
inline constexpr double kTable1Tolerance = 5e-4;

struct Table1Cell {
  std::string column;
  double recomputed = 0;
  double published = 0;
  std::string published_text;
  bool mismatch = false;
};

struct Table1Row {
  std::string id;
  std::size_t dimension = 0;
  /// Recomputed by the closure oracle (structurally for the Leech row).
  bool cstar_is_lattice = false;
  /// d2_cstar, d2_c, delta_cstar, delta_c, rho_cstar, rho_c.
  std::vector<Table1Cell> cells;
};

/// Rows ex4, ex5, ex6 (Leech), ex9, ex10.
std::vector<Table1Row> table1();
std::vector<Table1Row> table1(const std::vector<std::string>& ids);

std::string render_table1(const std::vector<Table1Row>& rows);
json to_json(const std::vector<Table1Row>& rows);

}  // namespace mlc
