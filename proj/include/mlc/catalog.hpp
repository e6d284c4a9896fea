#pragma once

// Built-in codes: Golay-24, the D_n+ pair and the worked example codes.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlc/constructions.hpp"
#include "mlc/gf2.hpp"

namespace mlc {

/// Rows of the 12 x 12 block B of H = (B | I); bit j of row r is B[r][j].
const std::array<std::uint16_t, 12>& golay_b_rows();

/// Span of the columns of (I | B)^T: word = (a, B a) for a in F2^12.
BinaryCode golay24();

/// Syndrome test H c = 0 for a 24-bit word (coordinate i in bit i).
bool golay_contains(std::uint32_t word);

struct DnPlus {
  std::vector<BinaryCode> codes;
  bool expected_lattice = false;
};
/// Repetition code under the even-weight code, length n >= 2.
DnPlus dn_plus(std::size_t n);

struct CatalogEntry {
  std::string id;
  std::string title;
  std::size_t n = 0;
  std::size_t levels = 0;
  /// Level codes for Construction C entries, projections otherwise.
  std::vector<BinaryCode> codes;
  std::optional<MainCode> main;
  /// Natural construction: a for single codes, c for level-code families, cstar otherwise.
  Source kind = Source::cstar;
};

/// ex1, ex2, ex4, ex5, ex7, ex9, ex10, ex13, ex13-swapped, golay; "dnplus",
/// "rep", "even" and "full" need n.
CatalogEntry catalog_example(const std::string& id, std::size_t n = 0);
std::vector<std::string> catalog_ids();

}  // namespace mlc
