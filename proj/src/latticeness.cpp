#include "mlc/latticeness.hpp"

#include <algorithm>
#include <stdexcept>

#include "mlc/parallel.hpp"

namespace mlc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::lattice: return "lattice";
    case Verdict::not_lattice: return "not_lattice";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::thm1: return "thm1";
    case Method::thm4: return "thm4";
    case Method::thm5: return "thm5";
  }
  return "brute";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::rep_pair: return "rep_pair";
    case WitnessKind::schur_pair: return "schur_pair";
    case WitnessKind::not_nested: return "not_nested";
    case WitnessKind::carry_tuple: return "carry_tuple";
    case WitnessKind::chain_link: return "chain_link";
    case WitnessKind::closure_product: return "closure_product";
  }
  return "rep_pair";
}

namespace {

std::uint64_t checked_square(std::uint64_t m, std::uint64_t budget, const char* what) {
  if (m != 0 && m > budget / m) throw BudgetExceeded(what, m > (1ULL << 32) ? ~0ULL : m * m, budget);
  return m * m;
}

/// Number of pairs (a', b') with a' <= b' preceding (a, b) in row order, plus one.
std::uint64_t unordered_rank(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a * m - a * (a - 1) / 2 + (b - a) + 1;
}

std::uint64_t unordered_total(std::uint64_t m) { return m * (m + 1) / 2; }

void require_linear(const MainCode& code, const char* who) {
  if (!code.is_linear()) {
    throw std::invalid_argument(std::string(who) + ": main code must be linear");
  }
}

std::uint64_t level_mask(std::size_t n) { return n >= 64 ? ~0ULL : (1ULL << n) - 1; }

/// (0, s_1, ..., s_{L-1}) for packed words of at most 64 bits.
std::uint64_t carry_tuple_packed(std::uint64_t c, std::uint64_t ct, std::size_t n,
                                 std::size_t levels) {
  const std::uint64_t mask = level_mask(n);
  std::uint64_t s = 0;
  std::uint64_t tuple = 0;
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    const std::uint64_t a = (c >> (i * n)) & mask;
    const std::uint64_t b = (ct >> (i * n)) & mask;
    s = (a & b) ^ ((a ^ b) & s);
    tuple |= s << ((i + 1) * n);
  }
  return tuple;
}

/// Sorted packed copy of a code for fast membership.
std::vector<std::uint64_t> packed_words(const BinaryCode& code) {
  std::vector<std::uint64_t> out;
  out.reserve(code.size());
  for (const auto& w : code.words()) out.push_back(w.to_uint());
  std::sort(out.begin(), out.end());
  return out;
}

bool packed_contains(const std::vector<std::uint64_t>& sorted, std::uint64_t w) {
  return std::binary_search(sorted.begin(), sorted.end(), w);
}

}  // namespace

LatticenessReport brute_closure_oracle(const PeriodicConstellation& p, std::uint64_t budget) {
  const std::uint64_t m = p.size();
  const std::uint64_t total = checked_square(m, budget, "brute_closure_oracle: rep pair scan");
  const std::size_t n = p.n();
  const std::uint32_t q = p.period();
  auto violates = [&](std::uint64_t idx) {
    thread_local std::vector<std::uint16_t> diff;
    diff.resize(n);
    auto a = p.rep(idx / m);
    auto b = p.rep(idx % m);
    for (std::size_t j = 0; j < n; ++j) {
      diff[j] = static_cast<std::uint16_t>((a[j] + q - b[j]) % q);
    }
    return !p.contains_residue(diff);
  };
  LatticenessReport r;
  r.method = Method::brute;
  const auto found = parallel_find_first(total, violates);
  if (!found) {
    r.verdict = Verdict::lattice;
    r.pairs_scanned = total;
    return r;
  }
  r.verdict = Verdict::not_lattice;
  r.pairs_scanned = *found + 1;
  Witness w;
  w.kind = WitnessKind::rep_pair;
  for (auto idx : {*found / m, *found % m}) {
    auto rep = p.rep(idx);
    w.reps.emplace_back(rep.begin(), rep.end());
  }
  w.detail = "(a - b) mod q is not a representative";
  r.witness = std::move(w);
  return r;
}

LatticenessReport thm1_check(std::span<const BinaryCode> codes, std::uint64_t cap) {
  if (codes.empty()) throw std::invalid_argument("thm1_check: need at least one code");
  for (const auto& c : codes) {
    if (!c.is_linear()) throw std::invalid_argument("thm1_check: level codes must be linear");
    if (c.length() != codes.front().length()) {
      throw std::invalid_argument("thm1_check: level codes must share the same length");
    }
  }
  LatticenessReport r;
  r.method = Method::thm1;
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
    for (const auto& w : codes[i].words()) {
      if (!codes[i + 1].contains(w)) {
        r.verdict = Verdict::not_lattice;
        Witness wt;
        wt.kind = WitnessKind::not_nested;
        wt.level = i + 1;
        wt.words = {w};
        wt.detail = "word of C" + std::to_string(i + 1) + " missing from C" + std::to_string(i + 2);
        r.witness = std::move(wt);
        return r;
      }
    }
  }
  const auto chain = schur_closed_chain(codes);
  if (!chain.closed) {
    const auto& words = codes[chain.level].words();
    const std::uint64_t m = words.size();
    const std::uint64_t a = std::lower_bound(words.begin(), words.end(), chain.x) - words.begin();
    const std::uint64_t b = std::lower_bound(words.begin(), words.end(), chain.y) - words.begin();
    for (std::size_t i = 0; i < chain.level; ++i) r.pairs_scanned += unordered_total(codes[i].size());
    r.pairs_scanned += unordered_rank(a, b, m);
    r.verdict = Verdict::not_lattice;
    Witness wt;
    wt.kind = WitnessKind::schur_pair;
    wt.level = chain.level + 1;
    wt.words = {chain.x, chain.y};
    wt.detail = "x * y is not in C" + std::to_string(chain.level + 2);
    r.witness = std::move(wt);
    return r;
  }
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) r.pairs_scanned += unordered_total(codes[i].size());
  r.verdict = Verdict::lattice;
  try {
    const auto c = construction_c(codes, cap);
    const auto d = construction_d(codes, cap);
    r.c_equals_d = c.flat() == d.flat();
  } catch (const BudgetExceeded&) {
    r.c_equals_d.reset();
  }
  return r;
}

CarryRecord carry_terms(const BitWord& c, const BitWord& ct, std::size_t n, std::size_t levels) {
  if (c.size() != n * levels || ct.size() != n * levels) {
    throw std::invalid_argument("carry_terms: words must have length n * L");
  }
  CarryRecord rec;
  std::vector<BitWord> g(levels), p(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    const BitWord a = c.slice(i * n, n);
    const BitWord b = ct.slice(i * n, n);
    g[i] = a & b;
    p[i] = a ^ b;
  }
  rec.terms.resize(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    auto& t = rec.terms[i];
    t.push_back(g[i]);
    if (i > 0) {
      t.push_back(p[i] & g[i - 1]);
      for (std::size_t j = 1; j < i; ++j) t.push_back(p[i] & rec.terms[i - 1][j]);
    }
  }
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    BitWord s(n);
    for (const auto& t : rec.terms[i]) s ^= t;
    rec.s.push_back(std::move(s));
  }
  rec.s_star.assign(n, 0);
  for (const auto& t : rec.terms[levels - 1]) {
    for (std::size_t j = 0; j < n; ++j) rec.s_star[j] += t.get(j) ? 1 : 0;
  }
  return rec;
}

std::vector<std::int64_t> reconstruct_sum(const BitWord& c, const BitWord& ct,
                                          const CarryRecord& record, std::size_t n,
                                          std::size_t levels) {
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < levels; ++i) {
    BitWord level = c.slice(i * n, n) ^ ct.slice(i * n, n);
    if (i > 0) level ^= record.s[i - 1];
    for (std::size_t j = 0; j < n; ++j) {
      if (level.get(j)) out[j] += std::int64_t{1} << i;
    }
  }
  for (std::size_t j = 0; j < n; ++j) out[j] += (std::int64_t{1} << levels) * record.s_star[j];
  return out;
}

BitWord carry_tuple(const CarryRecord& record, std::size_t n) {
  std::vector<BitWord> parts;
  parts.reserve(record.s.size() + 1);
  parts.emplace_back(n);
  for (const auto& s : record.s) parts.push_back(s);
  return BitWord::concat(parts);
}

BitWord carry_tuple(const BitWord& c, const BitWord& ct, std::size_t n, std::size_t levels) {
  if (c.size() != n * levels || ct.size() != n * levels) {
    throw std::invalid_argument("carry_tuple: words must have length n * L");
  }
  if (n * levels <= 64) {
    return BitWord::from_uint(carry_tuple_packed(c.to_uint(), ct.to_uint(), n, levels), n * levels);
  }
  BitWord tuple(n * levels);
  BitWord s(n);
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    const BitWord a = c.slice(i * n, n);
    const BitWord b = ct.slice(i * n, n);
    s = (a & b) ^ ((a ^ b) & s);
    tuple.assign_slice((i + 1) * n, s);
  }
  return tuple;
}

std::vector<BitWord> carry_set(const MainCode& code, std::uint64_t budget) {
  const std::uint64_t m = code.size();
  if (unordered_total(m) > budget) {
    throw BudgetExceeded("carry_set: pair scan", unordered_total(m), budget);
  }
  const auto& words = code.code().words();
  std::vector<BitWord> out;
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t b = a; b < m; ++b) {
      out.push_back(carry_tuple(words[a], words[b], code.n(), code.levels()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

LatticenessReport thm5_check(const MainCode& code, std::uint64_t budget) {
  require_linear(code, "thm5_check");
  const std::uint64_t m = code.size();
  const std::uint64_t pairs = unordered_total(m);
  if (pairs > budget) throw BudgetExceeded("thm5_check: pair scan", pairs, budget);
  const std::size_t n = code.n();
  const std::size_t levels = code.levels();
  const auto& words = code.code().words();

  std::optional<std::uint64_t> found;
  if (n * levels <= 64) {
    const auto packed = packed_words(code.code());
    std::vector<std::uint64_t> raw(m);
    for (std::uint64_t i = 0; i < m; ++i) raw[i] = words[i].to_uint();
    found = parallel_find_first(m * m, [&](std::uint64_t idx) {
      const std::uint64_t a = idx / m, b = idx % m;
      if (b < a) return false;
      return !packed_contains(packed, carry_tuple_packed(raw[a], raw[b], n, levels));
    });
  } else {
    found = parallel_find_first(m * m, [&](std::uint64_t idx) {
      const std::uint64_t a = idx / m, b = idx % m;
      if (b < a) return false;
      return !code.code().contains(carry_tuple(words[a], words[b], n, levels));
    });
  }

  LatticenessReport r;
  r.method = Method::thm5;
  if (!found) {
    r.verdict = Verdict::lattice;
    r.pairs_scanned = pairs;
    return r;
  }
  const std::uint64_t a = *found / m, b = *found % m;
  r.verdict = Verdict::not_lattice;
  r.pairs_scanned = unordered_rank(a, b, m);
  Witness w;
  w.kind = WitnessKind::carry_tuple;
  w.words = {words[a], words[b]};
  w.carry = carry_tuple(words[a], words[b], n, levels);
  w.detail = "carry tuple is not a codeword";
  r.witness = std::move(w);
  return r;
}

std::vector<ChainLink> antiprojection_chain(std::span<const BinaryCode> projections,
                                            std::span<const BinaryCode> antiprojections_at_zero) {
  if (projections.size() != antiprojections_at_zero.size() || projections.empty()) {
    throw std::invalid_argument("antiprojection_chain: need one antiprojection per level");
  }
  const std::size_t levels = projections.size();
  std::vector<ChainLink> chain;
  auto name_c = [](std::size_t i) { return "C" + std::to_string(i + 1); };
  auto name_s = [](std::size_t i) { return "S" + std::to_string(i + 1) + "(0)"; };
  for (std::size_t i = 0; i + 1 < levels; ++i) {
    chain.push_back({name_c(i), name_s(i + 1), is_nested(projections[i], antiprojections_at_zero[i + 1])});
    chain.push_back({name_s(i + 1), name_c(i + 1),
                     is_nested(antiprojections_at_zero[i + 1], projections[i + 1])});
  }
  chain.push_back({name_c(levels - 1), "F2^" + std::to_string(projections.front().length()), true});
  return chain;
}

LatticenessReport thm4_check(const MainCode& code, std::uint64_t budget) {
  require_linear(code, "thm4_check");
  const std::size_t n = code.n();
  const std::size_t levels = code.levels();
  const auto projections = projection_codes(code);
  std::vector<BinaryCode> zeros;
  for (std::size_t i = 0; i < levels; ++i) zeros.push_back(antiprojection_at_zero(code, i));

  LatticenessReport r;
  r.method = Method::thm4;
  r.chain = antiprojection_chain(projections, zeros);
  for (std::size_t k = 0; k < r.chain.size(); ++k) {
    if (!r.chain[k].holds) {
      r.verdict = Verdict::inconclusive;
      Witness w;
      w.kind = WitnessKind::chain_link;
      w.level = k / 2 + 2;
      w.detail = r.chain[k].lhs + " is not contained in " + r.chain[k].rhs;
      r.witness = std::move(w);
      return r;
    }
  }

  const std::uint64_t m = code.size();
  const std::uint64_t pairs = unordered_total(m);
  if (pairs > budget) throw BudgetExceeded("thm4_check: pair scan", pairs, budget);
  const auto& words = code.code().words();
  // Level i + 1 (0-based) must absorb every carry term produced at level i.
  auto escaping_term = [&](std::uint64_t a, std::uint64_t b) -> std::optional<std::pair<std::size_t, BitWord>> {
    const auto rec = carry_terms(words[a], words[b], n, levels);
    for (std::size_t i = 0; i + 1 < levels; ++i) {
      for (const auto& t : rec.terms[i]) {
        if (!zeros[i + 1].contains(t)) return std::make_pair(i, t);
      }
    }
    return std::nullopt;
  };
  const auto found = parallel_find_first(m * m, [&](std::uint64_t idx) {
    const std::uint64_t a = idx / m, b = idx % m;
    return b >= a && escaping_term(a, b).has_value();
  });
  if (!found) {
    r.verdict = Verdict::lattice;
    r.pairs_scanned = pairs;
    return r;
  }
  const std::uint64_t a = *found / m, b = *found % m;
  const auto esc = *escaping_term(a, b);
  r.verdict = Verdict::inconclusive;
  r.pairs_scanned = unordered_rank(a, b, m);
  Witness w;
  w.kind = WitnessKind::closure_product;
  w.level = esc.first + 2;
  w.words = {words[a], words[b], esc.second};
  w.detail = "carry term of C" + std::to_string(esc.first + 1) + " escapes S" +
             std::to_string(esc.first + 2) + "(0)";
  r.witness = std::move(w);
  return r;
}

bool revalidate_witness(const LatticenessReport& report, const PeriodicConstellation& p) {
  if (report.verdict != Verdict::not_lattice || !report.witness) return false;
  const auto& w = *report.witness;
  if (w.kind != WitnessKind::rep_pair || w.reps.size() != 2) return false;
  const std::int64_t q = p.period();
  std::vector<std::int64_t> a(w.reps[0].begin(), w.reps[0].end());
  std::vector<std::int64_t> b(w.reps[1].begin(), w.reps[1].end());
  if (!p.contains(a) || !p.contains(b)) return false;
  std::vector<std::int64_t> diff(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) diff[j] = a[j] - b[j] + q;
  return !p.contains(diff);
}

bool revalidate_witness(const LatticenessReport& report, const MainCode& code) {
  if (report.verdict != Verdict::not_lattice || !report.witness) return false;
  const auto& w = *report.witness;
  if (w.kind != WitnessKind::carry_tuple || w.words.size() != 2 || !w.carry) return false;
  if (!code.code().contains(w.words[0]) || !code.code().contains(w.words[1])) return false;
  if (code.code().contains(*w.carry)) return false;
  // The lifted sum, read back as a binary expansion, must not be a codeword.
  const std::size_t n = code.n();
  const std::size_t levels = code.levels();
  const auto x = lift(code, w.words[0]);
  const auto y = lift(code, w.words[1]);
  const std::uint32_t q = std::uint32_t{1} << levels;
  BitWord sum(n * levels);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t v = (x[j] + y[j]) % q;
    for (std::size_t i = 0; i < levels; ++i) sum.set(i * n + j, (v >> i) & 1U);
  }
  return !code.code().contains(sum);
}

}  // namespace mlc
