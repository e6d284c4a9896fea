#pragma once

// Binary vectors and binary codes over F2.
//
// Coordinate i of a BitWord is bit (i % 64) of block (i / 64). Words up to
// 128 bits live inline; longer words spill the remaining blocks to the heap.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlc/error.hpp"

namespace mlc {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;
inline constexpr std::size_t kPairScanLinearityLimit = std::size_t{1} << 12;

class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::size_t length);

  /// Parses "0110" or "0 1 1 0"; whitespace between bits is ignored.
  static BitWord from_string(std::string_view bits);
  static BitWord from_bits(std::span<const int> bits);
  /// Low `length` bits of `value`, bit i -> coordinate i.
  static BitWord from_uint(std::uint64_t value, std::size_t length);
  static BitWord ones(std::size_t length);
  static BitWord concat(std::span<const BitWord> parts);

  std::size_t size() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return (n_ + 63) / 64; }

  bool get(std::size_t i) const noexcept {
    return (block(i / 64) >> (i % 64)) & 1U;
  }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      block(i / 64) |= mask;
    } else {
      block(i / 64) &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { block(i / 64) ^= std::uint64_t{1} << (i % 64); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  bool parity() const noexcept { return weight() & 1U; }

  /// Only meaningful for words of at most 64 coordinates.
  std::uint64_t to_uint() const noexcept { return block(0); }

  BitWord slice(std::size_t offset, std::size_t length) const;
  void assign_slice(std::size_t offset, const BitWord& part);

  BitWord& operator^=(const BitWord& other);
  BitWord& operator&=(const BitWord& other);
  friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
  friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }

  std::vector<int> to_ints() const;
  std::string to_string() const;

  friend bool operator==(const BitWord& a, const BitWord& b) noexcept;
  /// Lexicographic in coordinate order (coordinate 0 most significant).
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) noexcept;

  std::size_t hash() const noexcept;

  std::uint64_t block(std::size_t b) const noexcept {
    return b < kInline ? inline_[b] : spill_[b - kInline];
  }
  std::uint64_t& block(std::size_t b) noexcept {
    return b < kInline ? inline_[b] : spill_[b - kInline];
  }

 private:
  static constexpr std::size_t kInline = 2;

  std::size_t n_ = 0;
  std::array<std::uint64_t, kInline> inline_{};
  std::vector<std::uint64_t> spill_;
};

struct BitWordHash {
  std::size_t operator()(const BitWord& w) const noexcept { return w.hash(); }
};

std::size_t hamming_weight(const BitWord& x) noexcept;
std::size_t hamming_distance(const BitWord& x, const BitWord& y);
BitWord schur_product(const BitWord& x, const BitWord& y);
/// x + y == (x xor y) + 2 (x * y) read coordinatewise over the integers.
bool carry_identity_check(const BitWord& x, const BitWord& y);

enum class Linearity { linear, nonlinear, unverified };

/// A set of distinct length-n binary words, kept sorted.
class BinaryCode {
 public:
  BinaryCode() = default;

  /// Explicit word list. Duplicates are collapsed. Linearity is decided by a
  /// full pair scan for up to 2^12 words and by the span-rank argument above
  /// that; pass `verify = false` to leave it unverified.
  BinaryCode(std::size_t length, std::vector<BitWord> words, bool verify = true);

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::vector<BitWord>& words() const noexcept { return words_; }
  const BitWord& operator[](std::size_t i) const { return words_[i]; }

  bool contains(const BitWord& w) const;
  Linearity linearity() const noexcept { return linearity_; }
  bool is_linear() const noexcept { return linearity_ == Linearity::linear; }

  /// Basis vectors (columns of G) when built from a generator.
  const std::optional<std::vector<BitWord>>& generator() const noexcept { return generator_; }

  /// Row-reduced basis of the span of the words.
  std::vector<BitWord> span_basis() const;

 private:
  friend BinaryCode enumerate_from_generator(std::size_t, std::span<const BitWord>,
                                             std::uint64_t);

  std::size_t n_ = 0;
  std::vector<BitWord> words_;
  Linearity linearity_ = Linearity::unverified;
  std::optional<std::vector<BitWord>> generator_;
};

/// Row-reduces `vectors` and returns an independent spanning subset in
/// reduced echelon form.
std::vector<BitWord> reduce_basis(std::span<const BitWord> vectors);
std::size_t rank(std::span<const BitWord> vectors);

/// All G a for a in F2^k, where the columns of G are given as length-n words.
BinaryCode enumerate_from_generator(std::size_t length, std::span<const BitWord> columns,
                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Minimum distance between distinct codewords. Linear codes use the minimum
/// nonzero weight; everything else is a full pair scan.
std::size_t min_hamming_distance(const BinaryCode& code);
std::size_t min_hamming_distance_pair_scan(const BinaryCode& code);
/// Minimum weight of a nonzero word, or nullopt if the code has none.
std::optional<std::size_t> min_nonzero_weight(const BinaryCode& code);

bool is_nested(const BinaryCode& inner, const BinaryCode& outer);

struct SchurChainResult {
  bool closed = true;
  /// 0-based level i with x, y in codes[i] and x * y not in codes[i + 1].
  std::size_t level = 0;
  BitWord x;
  BitWord y;
};

/// Checks x * y in codes[i+1] for every i and every pair x, y in codes[i].
SchurChainResult schur_closed_chain(std::span<const BinaryCode> codes);

BinaryCode repetition_code(std::size_t n);
BinaryCode even_weight_code(std::size_t n);
BinaryCode full_space(std::size_t n);
BinaryCode zero_code(std::size_t n);

}  // namespace mlc
