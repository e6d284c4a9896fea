#pragma once

// Deciders for whether a multilevel constellation is closed under addition.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlc/constructions.hpp"
#include "mlc/gf2.hpp"

namespace mlc {

enum class Verdict { lattice, not_lattice, inconclusive };
enum class Method { brute, thm1, thm4, thm5 };
std::string to_string(Verdict v);
std::string to_string(Method m);

enum class WitnessKind {
  rep_pair,         // a, b with (a - b) mod q outside the rep set
  schur_pair,       // x, y in C_i with x * y outside C_{i+1}
  not_nested,       // x in C_i but not in C_{i+1}
  carry_tuple,      // c, c~ whose carry tuple (0, s_1, ..., s_{L-1}) is not a codeword
  chain_link,       // an inclusion of the antiprojection chain fails
  closure_product,  // a carry term of c, c~ at some level escapes S_{i}(0)
};
std::string to_string(WitnessKind k);

struct Witness {
  WitnessKind kind = WitnessKind::rep_pair;
  /// 1-based level where the failure is observed.
  std::optional<std::size_t> level;
  std::vector<std::vector<int>> reps;
  std::vector<BitWord> words;
  std::optional<BitWord> carry;
  std::string detail;
};

struct ChainLink {
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct LatticenessReport {
  Verdict verdict = Verdict::inconclusive;
  Method method = Method::brute;
  std::optional<Witness> witness;
  /// Logical number of pairs examined up to and including the witness.
  std::uint64_t pairs_scanned = 0;
  std::vector<ChainLink> chain;
  /// thm1 only: whether the Construction C and Construction D rep sets agree,
  /// when both were small enough to enumerate.
  std::optional<bool> c_equals_d;
};

inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t{1} << 32;

/// Group test on the rep set: (a - b) mod q must be a rep for all a, b.
LatticenessReport brute_closure_oracle(const PeriodicConstellation& p,
                                       std::uint64_t budget = kDefaultPairBudget);

/// Nesting plus Schur-chain closure of linear level codes.
LatticenessReport thm1_check(std::span<const BinaryCode> codes,
                             std::uint64_t cap = kDefaultEnumerationCap);

struct CarryRecord {
  /// s_1, ..., s_{L-1}.
  std::vector<BitWord> s;
  /// Carry out of the top level, as an integer vector.
  std::vector<int> s_star;
  /// terms[i] = {c_{i+1} * c~_{i+1}, r^(1), ..., r^(i)} for 0-based level i;
  /// s_{i+1} is their xor and, the terms being disjoint, also their sum.
  std::vector<std::vector<BitWord>> terms;
};

/// Ripple-carry decomposition of lift(c) + lift(c~):
/// r_i^(1) = (c_i xor c~_i) * (c_{i-1} * c~_{i-1}) and
/// r_i^(j) = (c_i xor c~_i) * r_{i-1}^(j-1).
CarryRecord carry_terms(const BitWord& c, const BitWord& ct, std::size_t n, std::size_t levels);

/// c_1 xor c~_1 + sum_i 2^(i-1) (s_{i-1} xor c_i xor c~_i) + 2^L s*, as integers.
std::vector<std::int64_t> reconstruct_sum(const BitWord& c, const BitWord& ct,
                                          const CarryRecord& record, std::size_t n,
                                          std::size_t levels);

/// (0, s_1, ..., s_{L-1}) as a word of length nL.
BitWord carry_tuple(const CarryRecord& record, std::size_t n);
/// Same tuple without building the full record.
BitWord carry_tuple(const BitWord& c, const BitWord& ct, std::size_t n, std::size_t levels);

/// All carry tuples over unordered pairs c, c~ (c = c~ included), sorted.
std::vector<BitWord> carry_set(const MainCode& code, std::uint64_t budget = kDefaultPairBudget);

/// Lattice iff every carry tuple is a codeword. Requires a linear main code.
LatticenessReport thm5_check(const MainCode& code, std::uint64_t budget = kDefaultPairBudget);

/// Sufficient condition via the antiprojection chain; inconclusive when it
/// does not apply. Requires a linear main code.
LatticenessReport thm4_check(const MainCode& code, std::uint64_t budget = kDefaultPairBudget);

/// Inclusion trace C_1 <= S_2(0) <= C_2 <= ... <= S_L(0) <= C_L <= F2^n.
std::vector<ChainLink> antiprojection_chain(std::span<const BinaryCode> projections,
                                            std::span<const BinaryCode> antiprojections_at_zero);

/// Re-checks a not_lattice witness from brute or thm5 against its source.
bool revalidate_witness(const LatticenessReport& report, const PeriodicConstellation& p);
bool revalidate_witness(const LatticenessReport& report, const MainCode& code);

}  // namespace mlc
