#include "mlc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace mlc {

namespace {

std::uint64_t tail_mask(std::size_t n) {
  const std::size_t r = n % 64;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

void require_same_length(const BitWord& x, const BitWord& y, const char* op) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(std::string(op) + ": length mismatch (" +
                                std::to_string(x.size()) + " vs " + std::to_string(y.size()) +
                                ")");
  }
}

// Reads up to 64 bits starting at coordinate `pos`.
std::uint64_t read_bits(const BitWord& w, std::size_t pos) {
  const std::size_t b = pos / 64;
  const std::size_t s = pos % 64;
  std::uint64_t v = w.block(b) >> s;
  if (s != 0 && b + 1 < w.block_count()) v |= w.block(b + 1) << (64 - s);
  return v;
}

}  // namespace

BitWord::BitWord(std::size_t length) : n_(length) {
  const std::size_t blocks = block_count();
  if (blocks > kInline) spill_.assign(blocks - kInline, 0);
}

BitWord BitWord::from_string(std::string_view bits) {
  std::vector<int> values;
  values.reserve(bits.size());
  for (char ch : bits) {
    if (ch == '0' || ch == '1') {
      values.push_back(ch - '0');
    } else if (ch != ' ' && ch != '\t' && ch != ',') {
      throw std::invalid_argument(std::string("BitWord: invalid bit character '") + ch + "'");
    }
  }
  return from_bits(values);
}

BitWord BitWord::from_bits(std::span<const int> bits) {
  BitWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) {
      throw std::invalid_argument("BitWord: entries must be 0 or 1");
    }
    if (bits[i]) w.set(i, true);
  }
  return w;
}

BitWord BitWord::from_uint(std::uint64_t value, std::size_t length) {
  if (length > 64) throw std::invalid_argument("BitWord::from_uint: length > 64");
  BitWord w(length);
  if (length > 0) w.block(0) = value & tail_mask(length);
  return w;
}

BitWord BitWord::ones(std::size_t length) {
  BitWord w(length);
  for (std::size_t b = 0; b < w.block_count(); ++b) w.block(b) = ~std::uint64_t{0};
  if (length > 0) w.block(w.block_count() - 1) &= tail_mask(length);
  return w;
}

BitWord BitWord::concat(std::span<const BitWord> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  BitWord w(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    w.assign_slice(offset, p);
    offset += p.size();
  }
  return w;
}

std::size_t BitWord::weight() const noexcept {
  std::size_t w = 0;
  for (std::size_t b = 0; b < block_count(); ++b) w += std::popcount(block(b));
  return w;
}

bool BitWord::is_zero() const noexcept {
  for (std::size_t b = 0; b < block_count(); ++b) {
    if (block(b) != 0) return false;
  }
  return true;
}

BitWord BitWord::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > n_) throw std::out_of_range("BitWord::slice out of range");
  BitWord out(length);
  for (std::size_t b = 0; b < out.block_count(); ++b) {
    out.block(b) = read_bits(*this, offset + 64 * b);
  }
  if (length > 0) out.block(out.block_count() - 1) &= tail_mask(length);
  return out;
}

void BitWord::assign_slice(std::size_t offset, const BitWord& part) {
  if (offset + part.size() > n_) throw std::out_of_range("BitWord::assign_slice out of range");
  for (std::size_t k = 0; k < part.block_count(); ++k) {
    const std::size_t len = std::min<std::size_t>(64, part.size() - 64 * k);
    const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    const std::uint64_t bits = part.block(k) & mask;
    const std::size_t pos = offset + 64 * k;
    const std::size_t b = pos / 64;
    const std::size_t s = pos % 64;
    block(b) = (block(b) & ~(mask << s)) | (bits << s);
    if (s != 0 && s + len > 64) {
      const std::uint64_t hi_mask = mask >> (64 - s);
      block(b + 1) = (block(b + 1) & ~hi_mask) | (bits >> (64 - s));
    }
  }
}

BitWord& BitWord::operator^=(const BitWord& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t b = 0; b < block_count(); ++b) block(b) ^= other.block(b);
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
  require_same_length(*this, other, "schur_product");
  for (std::size_t b = 0; b < block_count(); ++b) block(b) &= other.block(b);
  return *this;
}

std::vector<int> BitWord::to_ints() const {
  std::vector<int> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

std::string BitWord::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

bool operator==(const BitWord& a, const BitWord& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    if (a.block(i) != b.block(i)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) noexcept {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    const std::uint64_t diff = a.block(i) ^ b.block(i);
    if (diff != 0) {
      const int first = std::countr_zero(diff);
      return ((a.block(i) >> first) & 1U) ? std::strong_ordering::greater
                                            : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::size_t BitWord::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (std::size_t b = 0; b < block_count(); ++b) {
    h ^= block(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::size_t hamming_weight(const BitWord& x) noexcept { return x.weight(); }

std::size_t hamming_distance(const BitWord& x, const BitWord& y) {
  require_same_length(x, y, "hamming_distance");
  std::size_t d = 0;
  for (std::size_t b = 0; b < x.block_count(); ++b) d += std::popcount(x.block(b) ^ y.block(b));
  return d;
}

BitWord schur_product(const BitWord& x, const BitWord& y) { return x & y; }

bool carry_identity_check(const BitWord& x, const BitWord& y) {
  require_same_length(x, y, "carry_identity_check");
  const BitWord sum_mod2 = x ^ y;
  const BitWord carry = x & y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int lhs = int{x.get(i)} + int{y.get(i)};
    const int rhs = int{sum_mod2.get(i)} + 2 * int{carry.get(i)};
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<BitWord> reduce_basis(std::span<const BitWord> vectors) {
  // Gaussian elimination keyed by pivot coordinate.
  std::vector<BitWord> basis;
  std::vector<std::size_t> pivots;
  for (BitWord v : vectors) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (v.get(pivots[k])) v ^= basis[k];
    }
    if (v.is_zero()) continue;
    std::size_t pivot = 0;
    while (!v.get(pivot)) ++pivot;
    for (auto& b : basis) {
      if (b.get(pivot)) b ^= v;
    }
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
  }
  return basis;
}

std::size_t rank(std::span<const BitWord> vectors) { return reduce_basis(vectors).size(); }

BinaryCode::BinaryCode(std::size_t length, std::vector<BitWord> words, bool verify)
    : n_(length), words_(std::move(words)) {
  for (const auto& w : words_) {
    if (w.size() != n_) {
      throw std::invalid_argument("BinaryCode: word of length " + std::to_string(w.size()) +
                                  " in a length-" + std::to_string(n_) + " code");
    }
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());

  if (!verify) return;
  if (words_.empty() || !words_.front().is_zero()) {
    linearity_ = Linearity::nonlinear;
    return;
  }
  if (words_.size() <= kPairScanLinearityLimit) {
    std::unordered_set<BitWord, BitWordHash> members(words_.begin(), words_.end());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::size_t j = i + 1; j < words_.size(); ++j) {
        if (!members.contains(words_[i] ^ words_[j])) {
          linearity_ = Linearity::nonlinear;
          return;
        }
      }
    }
    linearity_ = Linearity::linear;
    return;
  }
  // The span has 2^rank words and contains every codeword.
  const std::size_t r = rank(words_);
  linearity_ = (r < 64 && words_.size() == (std::size_t{1} << r)) ? Linearity::linear
                                                                 : Linearity::nonlinear;
}

bool BinaryCode::contains(const BitWord& w) const {
  if (w.size() != n_) return false;
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::vector<BitWord> BinaryCode::span_basis() const { return reduce_basis(words_); }

BinaryCode enumerate_from_generator(std::size_t length, std::span<const BitWord> columns,
                                    std::uint64_t cap) {
  for (const auto& c : columns) {
    if (c.size() != length) {
      throw std::invalid_argument("enumerate_from_generator: generator column length " +
                                  std::to_string(c.size()) + " != " + std::to_string(length));
    }
  }
  const std::vector<BitWord> basis = reduce_basis(columns);
  const std::size_t r = basis.size();
  if (r >= 63 || (std::uint64_t{1} << r) > cap) {
    throw BudgetExceeded("enumerate_from_generator: code has 2^" + std::to_string(r) + " words",
                         r >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << r, cap);
  }
  const std::size_t count = std::size_t{1} << r;
  std::vector<BitWord> words;
  words.reserve(count);
  BitWord current(length);
  words.push_back(current);
  for (std::size_t i = 1; i < count; ++i) {
    current ^= basis[std::countr_zero(i)];  // Gray-code walk
    words.push_back(current);
  }
  BinaryCode code(length, std::move(words), /*verify=*/false);
  code.linearity_ = Linearity::linear;
  code.generator_ = std::vector<BitWord>(columns.begin(), columns.end());
  return code;
}

std::optional<std::size_t> min_nonzero_weight(const BinaryCode& code) {
  std::optional<std::size_t> best;
  for (const auto& w : code.words()) {
    const std::size_t wt = w.weight();
    if (wt > 0 && (!best || wt < *best)) best = wt;
  }
  return best;
}

std::size_t min_hamming_distance_pair_scan(const BinaryCode& code) {
  if (code.size() < 2) throw std::invalid_argument("min_hamming_distance: code has < 2 words");
  std::size_t best = code.length() + 1;
  const auto& w = code.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, hamming_distance(w[i], w[j]));
  }
  return best;
}

std::size_t min_hamming_distance(const BinaryCode& code) {
  if (code.size() < 2) throw std::invalid_argument("min_hamming_distance: code has < 2 words");
  if (code.is_linear()) return *min_nonzero_weight(code);
  return min_hamming_distance_pair_scan(code);
}

bool is_nested(const BinaryCode& inner, const BinaryCode& outer) {
  if (inner.length() != outer.length()) return false;
  return std::all_of(inner.words().begin(), inner.words().end(),
                     [&](const BitWord& w) { return outer.contains(w); });
}

SchurChainResult schur_closed_chain(std::span<const BinaryCode> codes) {
  SchurChainResult result;
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
    const auto& words = codes[i].words();
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = a; b < words.size(); ++b) {
        if (!codes[i + 1].contains(words[a] & words[b])) {
          result.closed = false;
          result.level = i;
          result.x = words[a];
          result.y = words[b];
          return result;
        }
      }
    }
  }
  return result;
}

BinaryCode repetition_code(std::size_t n) {
  const BitWord one = BitWord::ones(n);
  return enumerate_from_generator(n, std::span(&one, 1));
}

BinaryCode even_weight_code(std::size_t n) {
  std::vector<BitWord> columns;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    BitWord g(n);
    g.set(i, true);
    g.set(i + 1, true);
    columns.push_back(std::move(g));
  }
  return enumerate_from_generator(n, columns);
}

BinaryCode full_space(std::size_t n) {
  std::vector<BitWord> columns;
  for (std::size_t i = 0; i < n; ++i) {
    BitWord g(n);
    g.set(i, true);
    columns.push_back(std::move(g));
  }
  return enumerate_from_generator(n, columns);
}

BinaryCode zero_code(std::size_t n) { return enumerate_from_generator(n, {}); }

}  // namespace mlc
