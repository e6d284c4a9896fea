#include "mlc/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace mlc {

namespace {

std::uint64_t pack_key(std::span<const std::uint16_t> row, std::size_t levels) {
  std::uint64_t key = 0;
  for (std::uint16_t v : row) key = (key << levels) | v;
  return key;
}

void check_levels(std::size_t levels) {
  if (levels < 1 || levels > kMaxLevels) {
    throw std::invalid_argument("number of levels must be in [1, " + std::to_string(kMaxLevels) +
                                "], got " + std::to_string(levels));
  }
}

void check_same_length(std::span<const BinaryCode> codes) {
  if (codes.empty()) throw std::invalid_argument("need at least one level code");
  for (const auto& c : codes) {
    if (c.length() != codes.front().length()) {
      throw std::invalid_argument("level codes must share the same length");
    }
  }
}

}  // namespace

MainCode::MainCode(BinaryCode code, std::size_t n, std::size_t levels)
    : code_(std::move(code)), n_(n), levels_(levels) {
  check_levels(levels);
  if (n == 0) throw std::invalid_argument("MainCode: n must be positive");
  if (code_.length() != n * levels) {
    throw std::invalid_argument("MainCode: word length " + std::to_string(code_.length()) +
                                " != n * L = " + std::to_string(n * levels));
  }
}

BitWord MainCode::join(std::span<const BitWord> levels) const {
  if (levels.size() != levels_) throw std::invalid_argument("MainCode::join: wrong level count");
  for (const auto& l : levels) {
    if (l.size() != n_) throw std::invalid_argument("MainCode::join: wrong level length");
  }
  return BitWord::concat(levels);
}

MainCode product_main_code(std::span<const BinaryCode> codes, std::uint64_t cap) {
  check_same_length(codes);
  const std::size_t n = codes.front().length();
  std::uint64_t total = 1;
  for (const auto& c : codes) {
    if (c.empty()) throw std::invalid_argument("product_main_code: empty level code");
    total *= c.size();
    if (total > cap) throw BudgetExceeded("product_main_code: too many words", total, cap);
  }
  std::vector<BitWord> words;
  words.reserve(total);
  std::vector<std::size_t> idx(codes.size(), 0);
  std::vector<BitWord> parts(codes.size());
  for (std::uint64_t t = 0; t < total; ++t) {
    for (std::size_t i = 0; i < codes.size(); ++i) parts[i] = codes[i][idx[i]];
    words.push_back(BitWord::concat(parts));
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (++idx[i] < codes[i].size()) break;
      idx[i] = 0;
    }
  }
  const bool all_linear = std::all_of(codes.begin(), codes.end(),
                                      [](const BinaryCode& c) { return c.is_linear(); });
  // A product of linear codes is linear; skip the pair scan in that case.
  BinaryCode product(n * codes.size(), std::move(words), /*verify=*/!all_linear);
  if (all_linear) {
    std::vector<BitWord> columns;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (const auto& b : codes[i].span_basis()) {
        std::vector<BitWord> p(codes.size(), BitWord(n));
        p[i] = b;
        columns.push_back(BitWord::concat(p));
      }
    }
    product = enumerate_from_generator(n * codes.size(), columns, cap);
  }
  return MainCode(std::move(product), n, codes.size());
}

std::string to_string(Source s) {
  switch (s) {
    case Source::a: return "A";
    case Source::c: return "C";
    case Source::cstar: return "Cstar";
    case Source::d: return "D";
    case Source::custom: return "custom";
  }
  return "custom";
}

Source source_from_string(const std::string& s) {
  if (s == "A") return Source::a;
  if (s == "C") return Source::c;
  if (s == "Cstar") return Source::cstar;
  if (s == "D") return Source::d;
  if (s == "custom") return Source::custom;
  throw std::invalid_argument("unknown constellation source '" + s + "'");
}

PeriodicConstellation::PeriodicConstellation(std::size_t n, std::size_t levels,
                                             std::vector<std::uint16_t> coords, Source source)
    : n_(n), levels_(levels), source_(source) {
  check_levels(levels);
  if (n == 0) throw std::invalid_argument("PeriodicConstellation: n must be positive");
  if (coords.size() % n != 0) {
    throw std::invalid_argument("PeriodicConstellation: coordinate count not a multiple of n");
  }
  const std::uint32_t q = period();
  for (auto v : coords) {
    if (v >= q) {
      throw std::invalid_argument("PeriodicConstellation: coordinate " + std::to_string(v) +
                                  " outside [0, " + std::to_string(q) + ")");
    }
  }
  const std::size_t rows = coords.size() / n;
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto row = [&](std::size_t r) { return std::span<const std::uint16_t>(coords.data() + r * n, n); };
  auto less = [&](std::size_t a, std::size_t b) {
    auto ra = row(a), rb = row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), less);
  coords_.reserve(coords.size());
  for (std::size_t k = 0; k < rows; ++k) {
    if (k > 0 && !less(order[k - 1], order[k])) continue;
    auto r = row(order[k]);
    coords_.insert(coords_.end(), r.begin(), r.end());
  }
  count_ = coords_.size() / n_;
  if (n_ * levels_ <= 64) {
    auto keys = std::make_shared<std::vector<std::uint64_t>>();
    keys->reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) keys->push_back(pack_key(rep(i), levels_));
    keys_ = std::move(keys);
  }
}

std::vector<std::vector<int>> PeriodicConstellation::reps() const {
  std::vector<std::vector<int>> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    auto r = rep(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::optional<std::size_t> PeriodicConstellation::index_of(
    std::span<const std::uint16_t> residue) const {
  if (residue.size() != n_) return std::nullopt;
  if (keys_) {
    const std::uint64_t key = pack_key(residue, levels_);
    auto it = std::lower_bound(keys_->begin(), keys_->end(), key);
    if (it != keys_->end() && *it == key) return static_cast<std::size_t>(it - keys_->begin());
    return std::nullopt;
  }
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto r = rep(mid);
    if (std::lexicographical_compare(r.begin(), r.end(), residue.begin(), residue.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < count_ && std::equal(residue.begin(), residue.end(), rep(lo).begin())) return lo;
  return std::nullopt;
}

bool PeriodicConstellation::contains(std::span<const std::int64_t> v) const {
  if (v.size() != n_) {
    throw std::invalid_argument("membership: dimension " + std::to_string(v.size()) +
                                " != " + std::to_string(n_));
  }
  const std::int64_t q = period();
  std::vector<std::uint16_t> residue(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    residue[j] = static_cast<std::uint16_t>(((v[j] % q) + q) % q);
  }
  return contains_residue(residue);
}

std::vector<std::uint16_t> lift(const MainCode& code, const BitWord& word) {
  const std::size_t n = code.n();
  std::vector<std::uint16_t> x(n, 0);
  for (std::size_t i = 0; i < code.levels(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (word.get(i * n + j)) x[j] = static_cast<std::uint16_t>(x[j] + (1U << i));
    }
  }
  return x;
}

PeriodicConstellation construction_a(const BinaryCode& code) {
  std::vector<std::uint16_t> coords;
  coords.reserve(code.size() * code.length());
  for (const auto& w : code.words()) {
    for (std::size_t j = 0; j < code.length(); ++j) coords.push_back(w.get(j) ? 1 : 0);
  }
  return PeriodicConstellation(code.length(), 1, std::move(coords), Source::a);
}

PeriodicConstellation construction_c(std::span<const BinaryCode> codes, std::uint64_t cap) {
  check_same_length(codes);
  check_levels(codes.size());
  const std::size_t n = codes.front().length();
  std::uint64_t total = 1;
  for (const auto& c : codes) {
    total *= c.size();
    if (total > cap) {
      throw BudgetExceeded("construction_c: product of code sizes exceeds the enumeration cap",
                           total, cap);
    }
  }
  std::vector<std::uint16_t> coords;
  coords.reserve(total * n);
  std::vector<std::size_t> idx(codes.size(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint16_t v = 0;
      for (std::size_t i = 0; i < codes.size(); ++i) {
        if (codes[i][idx[i]].get(j)) v = static_cast<std::uint16_t>(v + (1U << i));
      }
      coords.push_back(v);
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (++idx[i] < codes[i].size()) break;
      idx[i] = 0;
    }
  }
  return PeriodicConstellation(n, codes.size(), std::move(coords),
                               codes.size() == 1 ? Source::a : Source::c);
}

PeriodicConstellation construction_cstar(const MainCode& code, std::uint64_t cap) {
  if (code.size() > cap) {
    throw BudgetExceeded(
        "construction_cstar: main code too large to enumerate; use the structured "
        "distance and latticeness routines instead",
        code.size(), cap);
  }
  std::vector<std::uint16_t> coords;
  coords.reserve(code.size() * code.n());
  for (const auto& w : code.code().words()) {
    auto x = lift(code, w);
    coords.insert(coords.end(), x.begin(), x.end());
  }
  PeriodicConstellation p(code.n(), code.levels(), std::move(coords), Source::cstar);
  if (p.size() != code.size()) throw std::logic_error("construction_cstar: lift not injective");
  return p;
}

std::vector<BitWord> nested_basis(std::span<const BinaryCode> codes) {
  check_same_length(codes);
  const std::size_t n = codes.front().length();
  std::vector<BitWord> basis;
  std::vector<BitWord> reduced;  // echelon copy used for independence tests
  auto try_add = [&](const BitWord& candidate) {
    std::vector<BitWord> trial = reduced;
    trial.push_back(candidate);
    auto r = reduce_basis(trial);
    if (r.size() > reduced.size()) {
      basis.push_back(candidate);
      reduced = std::move(r);
    }
  };
  for (const auto& code : codes) {
    for (const auto& w : code.words()) {
      if (!w.is_zero()) try_add(w);
    }
  }
  for (std::size_t j = 0; j < n && basis.size() < n; ++j) {
    BitWord e(n);
    e.set(j, true);
    try_add(e);
  }
  return basis;
}

PeriodicConstellation construction_d(std::span<const BinaryCode> codes, std::uint64_t cap) {
  check_same_length(codes);
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
    if (!is_nested(codes[i], codes[i + 1])) {
      throw std::invalid_argument("construction_d: codes are not nested at level " +
                                  std::to_string(i + 1));
    }
  }
  return construction_d(codes, nested_basis(codes), cap);
}

PeriodicConstellation construction_d(std::span<const BinaryCode> codes,
                                     std::span<const BitWord> basis, std::uint64_t cap) {
  check_same_length(codes);
  check_levels(codes.size());
  const std::size_t n = codes.front().length();
  const std::size_t levels = codes.size();
  const std::uint32_t q = std::uint32_t{1} << levels;
  for (const auto& c : codes) {
    if (!c.is_linear()) throw std::invalid_argument("construction_d: codes must be linear");
  }
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
    if (!is_nested(codes[i], codes[i + 1])) {
      throw std::invalid_argument("construction_d: codes are not nested");
    }
  }
  std::set<std::vector<std::uint16_t>> points{std::vector<std::uint16_t>(n, 0)};
  for (std::size_t i = 0; i < levels; ++i) {
    const std::size_t k = rank(codes[i].words());
    if (k > basis.size()) throw std::invalid_argument("construction_d: basis too short");
    if (rank(std::span(basis.data(), k)) != k) {
      throw std::invalid_argument("construction_d: basis vectors are dependent");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!codes[i].contains(basis[j])) {
        throw std::invalid_argument("construction_d: basis prefix does not span level " +
                                    std::to_string(i + 1));
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::set<std::vector<std::uint16_t>> next = points;
      for (const auto& p : points) {
        std::vector<std::uint16_t> shifted = p;
        for (std::size_t t = 0; t < n; ++t) {
          if (basis[j].get(t)) shifted[t] = static_cast<std::uint16_t>((shifted[t] + (1U << i)) % q);
        }
        next.insert(std::move(shifted));
      }
      points = std::move(next);
      if (points.size() > cap) throw BudgetExceeded("construction_d: too many reps", points.size(), cap);
    }
  }
  std::vector<std::uint16_t> coords;
  coords.reserve(points.size() * n);
  for (const auto& p : points) coords.insert(coords.end(), p.begin(), p.end());
  return PeriodicConstellation(n, levels, std::move(coords), Source::d);
}

std::vector<BinaryCode> projection_codes(const MainCode& code) {
  std::vector<BinaryCode> out;
  for (std::size_t i = 0; i < code.levels(); ++i) {
    std::vector<BitWord> words;
    words.reserve(code.size());
    for (const auto& w : code.code().words()) words.push_back(code.level(w, i));
    // Projections of a linear code are linear; otherwise verify.
    BinaryCode c(code.n(), std::move(words), /*verify=*/!code.is_linear());
    if (code.is_linear()) c = BinaryCode(code.n(), c.words(), /*verify=*/true);
    out.push_back(std::move(c));
  }
  return out;
}

BinaryCode antiprojection(const MainCode& code, std::size_t level, std::span<const BitWord> fixed) {
  if (level >= code.levels()) throw std::invalid_argument("antiprojection: level out of range");
  if (fixed.size() + 1 != code.levels()) {
    throw std::invalid_argument("antiprojection: need L - 1 fixed words");
  }
  std::vector<BitWord> words;
  for (const auto& w : code.code().words()) {
    bool match = true;
    for (std::size_t i = 0, f = 0; i < code.levels() && match; ++i) {
      if (i == level) continue;
      match = code.level(w, i) == fixed[f++];
    }
    if (match) words.push_back(code.level(w, level));
  }
  return BinaryCode(code.n(), std::move(words));
}

BinaryCode antiprojection_at_zero(const MainCode& code, std::size_t level) {
  std::vector<BitWord> zeros(code.levels() - 1, BitWord(code.n()));
  return antiprojection(code, level, zeros);
}

PeriodicConstellation associated_construction_c(const MainCode& code, std::uint64_t cap) {
  const auto projections = projection_codes(code);
  return construction_c(projections, cap);
}

bool membership(const PeriodicConstellation& p, std::span<const std::int64_t> v) {
  return p.contains(v);
}

PeriodicConstellation scaled(const PeriodicConstellation& p, std::uint32_t factor) {
  if (factor == 0 || !std::has_single_bit(factor)) {
    throw std::invalid_argument("scaled: factor must be a power of two");
  }
  const std::size_t extra = std::countr_zero(factor);
  std::vector<std::uint16_t> coords = p.flat();
  for (auto& v : coords) v = static_cast<std::uint16_t>(v * factor);
  return PeriodicConstellation(p.n(), p.levels() + extra, std::move(coords), Source::custom);
}

}  // namespace mlc
