#pragma once

// Squared Euclidean distances, distance spectra and symmetry checks for
// periodic constellations reps + q Z^n. All squared distances are integers.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mlc/constructions.hpp"
#include "mlc/gf2.hpp"

namespace mlc {

/// Residue of v mod q in (-q/2, q/2].
std::int64_t centered(std::int64_t v, std::uint32_t q);

/// min(q^2, min over distinct reps a, b of sum_j centered(a_j - b_j)^2).
std::uint64_t dmin_oracle(const PeriodicConstellation& p,
                          std::uint64_t budget = std::uint64_t{1} << 34);

/// min{d_H(C_1), 4 d_H(C_2), ..., 4^(L-1) d_H(C_L), 4^L}; levels whose code has no
/// nonzero word contribute nothing. Codes must be linear.
std::uint64_t dmin_formula_c(std::span<const BinaryCode> codes);
/// Same formula from per-level distances; nullopt marks a level with no nonzero word.
std::uint64_t dmin_formula_c(std::span<const std::optional<std::size_t>> distances);

struct MCounts {
  /// m[i - 1] counts coordinates whose level tuple reads i or 2^L - i.
  std::vector<std::size_t> m;
  std::uint64_t distance_to_zero() const;
};
MCounts mcounts(const BitWord& c, std::size_t n, std::size_t levels);

/// min(q^2, min over nonzero reps of sum_j centered(rep_j)^2).
std::uint64_t dmin_to_zero(const PeriodicConstellation& p);
/// min(4^L, min over nonzero codewords of |2^(L-1) c_L - sum_{i<L} 2^(i-1) c_i|^2).
std::uint64_t dmin_to_zero(const MainCode& code);

/// Lower levels c_1..c_{L-1} of a family of codewords whose top level ranges
/// over every word of the given weight parity.
struct Prefix {
  std::vector<BitWord> levels;
  bool odd = false;
};

/// Exact distance to zero over all codewords generated by `prefixes`,
/// capped by 4^L. The zero codeword is excluded.
std::uint64_t dmin_to_zero_structured(std::span<const Prefix> prefixes, std::size_t n,
                                      std::size_t levels);

/// min{4 dH2 - 3 dH1, 16}; requires dH2 > dH1.
std::uint64_t dmin_lower_bound_2level(std::size_t dh1, std::size_t dh2);

/// min over i of 4^(i-1) times the least nonzero weight of S_i(0), capped by 4^L.
std::uint64_t dmin_upper_bound_antiprojection(const MainCode& code);
std::uint64_t dmin_upper_bound_antiprojection(std::span<const BinaryCode> antiprojections_at_zero);
/// Same bound from the least nonzero weight of each S_i(0); nullopt when S_i(0) = {0}.
std::uint64_t dmin_upper_bound_antiprojection(std::span<const std::optional<std::size_t>> min_weights);

struct DistanceSpectrum {
  std::vector<int> rep;
  double radius = 0;
  /// Squared distance -> number of constellation points at that distance.
  std::map<std::uint64_t, std::uint64_t> entries;
  std::uint64_t count(std::uint64_t d2) const {
    auto it = entries.find(d2);
    return it == entries.end() ? 0 : it->second;
  }
};

/// Exact neighbour counts around `rep` for every squared distance <= R^2.
DistanceSpectrum distance_spectrum(const PeriodicConstellation& p, std::span<const int> rep,
                                   double radius);

struct EdsResult {
  bool eds = true;
  /// Smallest squared distance at which two reps disagree.
  std::optional<std::uint64_t> d2;
  /// First rep with the largest count and last rep with the smallest count at d2.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  std::pair<std::uint64_t, std::uint64_t> counts{0, 0};
};
EdsResult eds_check(const PeriodicConstellation& p, double radius);
/// Radius 2q.
EdsResult eds_check(const PeriodicConstellation& p);

struct EquiMinResult {
  bool equi_min = true;
  std::uint64_t dmin2 = 0;
  std::optional<std::vector<int>> witness;
  /// Nearest-neighbour squared distance of the witness.
  std::uint64_t witness_d2 = 0;
};
EquiMinResult equi_min_distance_check(const PeriodicConstellation& p);

/// Does y -> T_c1 (y - x0) map the rep set onto itself mod q? T_c1 negates the
/// coordinates where c1 is 1.
bool isometry_orbit_check(const PeriodicConstellation& p, std::span<const int> x0,
                          std::span<const int> c1);

struct GuCertificate {
  bool certified = true;
  std::optional<std::vector<int>> failing_rep;
};
/// Tries the sign pattern x0 mod 2 at every rep x0.
GuCertificate gu_certificate(const PeriodicConstellation& p);

}  // namespace mlc
