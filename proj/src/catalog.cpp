#include "mlc/catalog.hpp"

#include <bit>
#include <stdexcept>

namespace mlc {

namespace {

// Rows as printed; character j is column j.
constexpr std::array<const char*, 12> kBRows = {
    "110111000101", "101110001011", "011100010111", "111000101101",
    "110001011011", "100010110111", "000101101111", "001011011101",
    "010110111001", "101101110001", "011011100011", "111111111110",
};

std::array<std::uint16_t, 12> parse_b_rows() {
  std::array<std::uint16_t, 12> rows{};
  for (std::size_t r = 0; r < 12; ++r) {
    for (std::size_t j = 0; j < 12; ++j) {
      if (kBRows[r][j] == '1') rows[r] = static_cast<std::uint16_t>(rows[r] | (1U << j));
    }
  }
  return rows;
}

std::vector<BitWord> parse_words(std::initializer_list<const char*> words) {
  std::vector<BitWord> out;
  for (const char* w : words) out.push_back(BitWord::from_string(w));
  return out;
}

CatalogEntry main_code_entry(std::string id, std::string title, std::size_t n, std::size_t levels,
                             std::initializer_list<const char*> words) {
  CatalogEntry e;
  e.id = std::move(id);
  e.title = std::move(title);
  e.n = n;
  e.levels = levels;
  e.main.emplace(BinaryCode(n * levels, parse_words(words)), n, levels);
  e.codes = projection_codes(*e.main);
  return e;
}

CatalogEntry level_code_entry(std::string id, std::string title, std::vector<BinaryCode> codes) {
  CatalogEntry e;
  e.id = std::move(id);
  e.title = std::move(title);
  e.n = codes.front().length();
  e.levels = codes.size();
  e.codes = std::move(codes);
  e.main.emplace(product_main_code(e.codes));
  e.kind = e.levels == 1 ? Source::a : Source::c;
  return e;
}

}  // namespace

const std::array<std::uint16_t, 12>& golay_b_rows() {
  static const std::array<std::uint16_t, 12> rows = parse_b_rows();
  return rows;
}

bool golay_contains(std::uint32_t word) {
  const auto& rows = golay_b_rows();
  const std::uint32_t top = word & 0xFFFU;
  const std::uint32_t bottom = (word >> 12) & 0xFFFU;
  for (std::size_t r = 0; r < 12; ++r) {
    const unsigned bit = (std::popcount(rows[r] & top) + ((bottom >> r) & 1U)) & 1U;
    if (bit) return false;
  }
  return true;
}

BinaryCode golay24() {
  static const BinaryCode code = [] {
    const auto& rows = golay_b_rows();
    std::vector<BitWord> columns;
    for (std::size_t j = 0; j < 12; ++j) {
      BitWord col(24);
      col.set(j, true);
      for (std::size_t r = 0; r < 12; ++r) col.set(12 + r, (rows[r] >> j) & 1U);
      columns.push_back(std::move(col));
    }
    return enumerate_from_generator(24, columns);
  }();
  return code;
}

DnPlus dn_plus(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dn_plus: n must be at least 2");
  return DnPlus{{repetition_code(n), even_weight_code(n)}, n % 2 == 0};
}

CatalogEntry catalog_example(const std::string& id, std::size_t n) {
  if (id == "ex1") {
    return level_code_entry(id, "two-level Construction C from {00,11} and {00}",
                            {BinaryCode(2, parse_words({"00", "11"})), BinaryCode(2, parse_words({"00"}))});
  }
  if (id == "ex2") {
    return level_code_entry(id, "three-level Construction C that is not EDS",
                            {BinaryCode(2, parse_words({"00", "11"})), BinaryCode(2, parse_words({"00", "11"})),
                             BinaryCode(2, parse_words({"00"}))});
  }
  if (id == "ex4") {
    return main_code_entry(id, "nonlattice two-level C*", 2, 2, {"0000", "1001", "1010", "0011"});
  }
  if (id == "ex5" || id == "ex7") {
    return main_code_entry(id, "lattice two-level C*", 2, 2, {"0000", "0010", "1001", "1011"});
  }
  if (id == "ex9") {
    return main_code_entry(id, "lattice three-level C* outside the antiprojection chain", 2, 3,
                           {"000000", "101101", "001011", "100110", "000010", "001001", "100100",
                            "101111"});
  }
  if (id == "ex10") {
    return main_code_entry(id, "C* that is not equi-minimum distance", 1, 3,
                           {"000", "101", "011", "110"});
  }
  if (id == "ex13") {
    return main_code_entry(id, "C* where the associated C is denser", 4, 2,
                           {"00000000", "11111100", "00001111", "11110011"});
  }
  if (id == "ex13-swapped") {
    return main_code_entry(id, "levels of ex13 swapped; C* is denser", 4, 2,
                           {"00000000", "11001111", "11110000", "00111111"});
  }
  if (id == "dnplus") {
    auto d = dn_plus(n);
    return level_code_entry("dnplus", "D_" + std::to_string(n) + "+ pair", std::move(d.codes));
  }
  if (id == "golay") return level_code_entry(id, "[24,12,8] Golay code", {golay24()});
  if (id == "rep" || id == "even" || id == "full") {
    if (n == 0) throw std::invalid_argument("catalog id '" + id + "' needs n >= 1");
    BinaryCode code = id == "rep" ? repetition_code(n) : id == "even" ? even_weight_code(n) : full_space(n);
    return level_code_entry(id, id + " code of length " + std::to_string(n), {std::move(code)});
  }
  throw std::invalid_argument("unknown catalog id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {"ex1", "ex2",  "ex4", "ex5", "ex7",  "ex9",  "ex10", "ex13",
          "ex13-swapped", "dnplus", "golay", "rep", "even", "full"};
}

}  // namespace mlc
