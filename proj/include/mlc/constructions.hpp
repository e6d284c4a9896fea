#pragma once

// Multilevel lifts of binary codes into periodic point sets of Z^n.
//
// Levels are 0-based in this API: level 0 carries weight 1, level i carries
// weight 2^i. A main code word of length nL stores level i in coordinates
// [i n, (i + 1) n).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlc/gf2.hpp"

namespace mlc {

inline constexpr std::size_t kMaxLevels = 15;

class MainCode {
 public:
  MainCode(BinaryCode code, std::size_t n, std::size_t levels);

  const BinaryCode& code() const noexcept { return code_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return code_.size(); }
  bool is_linear() const noexcept { return code_.is_linear(); }

  BitWord level(const BitWord& word, std::size_t i) const { return word.slice(i * n_, n_); }
  BitWord join(std::span<const BitWord> levels) const;

 private:
  BinaryCode code_;
  std::size_t n_;
  std::size_t levels_;
};

/// Main code C_1 x ... x C_L.
MainCode product_main_code(std::span<const BinaryCode> codes,
                           std::uint64_t cap = kDefaultEnumerationCap);

enum class Source { a, c, cstar, d, custom };
std::string to_string(Source s);
Source source_from_string(const std::string& s);

/// reps + q Z^n with q = 2^L. Reps are stored sorted lexicographically.
class PeriodicConstellation {
 public:
  PeriodicConstellation(std::size_t n, std::size_t levels, std::vector<std::uint16_t> coords,
                        Source source);

  std::size_t n() const noexcept { return n_; }
  std::size_t levels() const noexcept { return levels_; }
  std::uint32_t period() const noexcept { return std::uint32_t{1} << levels_; }
  std::size_t size() const noexcept { return count_; }
  Source source() const noexcept { return source_; }

  std::span<const std::uint16_t> rep(std::size_t i) const {
    return {coords_.data() + i * n_, n_};
  }
  const std::vector<std::uint16_t>& flat() const noexcept { return coords_; }
  std::vector<std::vector<int>> reps() const;

  std::optional<std::size_t> index_of(std::span<const std::uint16_t> residue) const;
  bool contains_residue(std::span<const std::uint16_t> residue) const {
    return index_of(residue).has_value();
  }
  /// v in reps + q Z^n.
  bool contains(std::span<const std::int64_t> v) const;

  friend bool operator==(const PeriodicConstellation& a, const PeriodicConstellation& b) {
    return a.n_ == b.n_ && a.levels_ == b.levels_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t n_;
  std::size_t levels_;
  std::size_t count_ = 0;
  Source source_;
  std::vector<std::uint16_t> coords_;
  // Packed keys (coordinate 0 most significant) when n L <= 64, parallel to reps.
  std::shared_ptr<const std::vector<std::uint64_t>> keys_;
};

/// Sum_i 2^i c_i mod 2^L for a main code word.
std::vector<std::uint16_t> lift(const MainCode& code, const BitWord& word);

PeriodicConstellation construction_a(const BinaryCode& code);
PeriodicConstellation construction_c(std::span<const BinaryCode> codes,
                                     std::uint64_t cap = kDefaultEnumerationCap);
PeriodicConstellation construction_cstar(const MainCode& code,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Greedy basis of F2^n whose first k_i vectors span codes[i] (nested chain).
std::vector<BitWord> nested_basis(std::span<const BinaryCode> codes);
PeriodicConstellation construction_d(std::span<const BinaryCode> codes,
                                     std::uint64_t cap = kDefaultEnumerationCap);
/// Same, with an explicit basis: basis[0..k_i) must span codes[i].
PeriodicConstellation construction_d(std::span<const BinaryCode> codes,
                                     std::span<const BitWord> basis,
                                     std::uint64_t cap = kDefaultEnumerationCap);

std::vector<BinaryCode> projection_codes(const MainCode& code);
/// Words w with (fixed[0..i), w, fixed[i..)) in the main code. `fixed` holds
/// the L - 1 words of the other levels in level order.
BinaryCode antiprojection(const MainCode& code, std::size_t level,
                          std::span<const BitWord> fixed);
/// Antiprojection with every other level fixed to zero.
BinaryCode antiprojection_at_zero(const MainCode& code, std::size_t level);

PeriodicConstellation associated_construction_c(const MainCode& code,
                                                std::uint64_t cap = kDefaultEnumerationCap);

bool membership(const PeriodicConstellation& p, std::span<const std::int64_t> v);

/// Multiplies every point by `factor`; the period becomes factor * q, which
/// must stay a power of two.
PeriodicConstellation scaled(const PeriodicConstellation& p, std::uint32_t factor);

}  // namespace mlc
