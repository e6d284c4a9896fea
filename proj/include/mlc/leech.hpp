#pragma once

// The three-level main code of the Leech lattice, handled structurally:
//   C = {(0, a, x) : a in Golay, wt(x) even} u {(1, a, y) : a in Golay, wt(y) odd}
// with 0 and 1 the constant words of length 24. |C| = 2^36 and it is never
// enumerated.

#include <cstdint>
#include <vector>

#include "mlc/geometry.hpp"
#include "mlc/gf2.hpp"
#include "mlc/latticeness.hpp"
#include "mlc/packing.hpp"

namespace mlc {

class LeechMainCode {
 public:
  static constexpr std::size_t kN = 24;
  static constexpr std::size_t kLevels = 3;
  static constexpr double kLog2Size = 36;

  LeechMainCode();

  const BinaryCode& golay() const noexcept { return golay_; }

  /// Membership of a 72-bit word: level 1 constant, level 2 in Golay, level 3
  /// parity equal to the level-1 bit.
  bool contains(const BitWord& word) const;
  bool contains(std::uint32_t c1, std::uint32_t c2, std::uint32_t c3) const;

  /// 36 words spanning the code.
  std::vector<BitWord> generator() const;
  /// Generators independent, all members, and pairwise sums members; with a
  /// membership test that is a conjunction of linear conditions this
  /// certifies linearity.
  bool certify_linearity() const;

  /// (0, a, even) and (1, a, odd) for every Golay word a; 8192 prefixes.
  std::vector<Prefix> prefixes() const;

 private:
  BinaryCode golay_;
};

struct LeechReport {
  LatticenessReport thm4;
  std::uint64_t golay_pairs_scanned = 0;
  std::uint64_t golay_parity_violations = 0;
  std::uint64_t s2_zero_size = 0;
  std::uint64_t s3_zero_size = 0;
  bool s3_zero_is_even_weight = false;
  bool linear = false;
  std::uint64_t dmin2 = 0;
  std::uint64_t upper_bound = 0;
  PackingReport packing;
  /// Associated Construction C from the projections repetition, Golay, F2^24.
  std::uint64_t assoc_dmin2 = 0;
  std::uint64_t assoc_dmin2_published = 24;
  PackingReport assoc_packing;
};

/// Chain trace, closure checks and the ordered 4096^2 Golay Schur-parity scan.
LatticenessReport leech_thm4_check(const LeechMainCode& code);

/// Ordered pairs (a, b) of Golay words with wt(a * b) odd.
std::uint64_t golay_schur_parity_violations(const BinaryCode& golay, std::uint64_t* pairs_scanned);

LeechReport leech_report(const LeechMainCode& code);

}  // namespace mlc
