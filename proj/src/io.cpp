#include "mlc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mlc/error.hpp"

namespace mlc {

namespace {

std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_size(std::string_view tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok) + "'", line);
  }
  return v;
}

BitWord parse_row(std::string_view row, std::size_t n, std::size_t line) {
  auto toks = split(row);
  std::string bits;
  if (toks.size() == 1) {
    bits = std::string(toks[0]);
  } else {
    for (auto t : toks) {
      if (t.size() != 1) throw ParseError("bits must be single characters", line);
      bits += t[0];
    }
  }
  if (bits.size() != n) {
    throw ParseError("row has " + std::to_string(bits.size()) + " bits, expected " + std::to_string(n),
                     line);
  }
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError(std::string("invalid bit '") + c + "'", line);
  }
  return BitWord::from_string(bits);
}

std::vector<int> to_ints(std::span<const std::uint16_t> v) { return {v.begin(), v.end()}; }

json chi_json(const std::optional<ChiSquare>& c) {
  if (!c) return nullptr;
  json j;
  j["statistic"] = round6(c->statistic);
  j["dof"] = c->dof;
  j["p_value"] = round6(c->p_value);
  return j;
}

}  // namespace

BinaryCode parse_code(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  bool header = false;
  std::vector<BitWord> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = strip(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (!header) {
      auto toks = split(line);
      if (toks.size() != 2) throw ParseError("header must read 'n k' or 'n *'", line_no);
      n = parse_size(toks[0], line_no, "length n");
      if (n == 0) throw ParseError("length must be positive", line_no);
      if (toks[1] != "*") k = parse_size(toks[1], line_no, "row count k");
      header = true;
      continue;
    }
    if (k && rows.size() == *k) throw ParseError("more rows than the header declares", line_no);
    rows.push_back(parse_row(line, n, line_no));
  }
  // a trailing newline does not open another line
  if (line_no > 1 && text.ends_with('\n')) --line_no;
  if (!header) throw ParseError("missing header", line_no);
  if (k && rows.size() != *k) {
    throw ParseError("expected " + std::to_string(*k) + " rows, found " + std::to_string(rows.size()),
                     line_no);
  }
  if (k) return enumerate_from_generator(n, rows);
  return BinaryCode(n, std::move(rows));
}

BinaryCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open code file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

std::string format_code(const BinaryCode& code) {
  std::ostringstream out;
  const auto& rows = code.generator() ? *code.generator() : code.words();
  out << code.length() << ' ';
  if (code.generator()) {
    out << rows.size() << '\n';
  } else {
    out << "*\n";
  }
  for (const auto& w : rows) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << (w.get(i) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

double round6(double v) {
  if (!std::isfinite(v) || v == 0) return v;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 5);
  double out = 0;
  std::from_chars(buf, res.ptr, out);
  return out;
}

std::string format6(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

json to_json(const PeriodicConstellation& p) {
  json j;
  j["n"] = p.n();
  j["L"] = p.levels();
  j["q"] = p.period();
  j["source"] = to_string(p.source());
  json reps = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) reps.push_back(to_ints(p.rep(i)));
  j["reps"] = std::move(reps);
  return j;
}

PeriodicConstellation constellation_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto levels = j.at("L").get<std::size_t>();
    if (j.contains("q") && j.at("q").get<std::uint64_t>() != (std::uint64_t{1} << levels)) {
      throw Error("constellation JSON: q must equal 2^L");
    }
    const Source source = j.contains("source") ? source_from_string(j.at("source").get<std::string>())
                                               : Source::custom;
    std::vector<std::uint16_t> coords;
    for (const auto& rep : j.at("reps")) {
      if (rep.size() != n) throw Error("constellation JSON: rep of wrong length");
      for (const auto& v : rep) coords.push_back(v.get<std::uint16_t>());
    }
    return PeriodicConstellation(n, levels, std::move(coords), source);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("constellation JSON: ") + e.what());
  }
}

json to_json(const Witness& w) {
  json j;
  j["kind"] = to_string(w.kind);
  j["level"] = w.level ? json(*w.level) : json(nullptr);
  j["reps"] = w.reps;
  json words = json::array();
  for (const auto& x : w.words) words.push_back(x.to_string());
  j["words"] = std::move(words);
  j["carry"] = w.carry ? json(w.carry->to_string()) : json(nullptr);
  j["detail"] = w.detail;
  return j;
}

json to_json(const LatticenessReport& r, std::optional<double> elapsed_ms) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = to_string(r.method);
  j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
  if (elapsed_ms) j["elapsed_ms"] = round6(*elapsed_ms);
  j["pairs_scanned"] = r.pairs_scanned;
  if (!r.chain.empty()) {
    json chain = json::array();
    for (const auto& link : r.chain) {
      chain.push_back({{"lhs", link.lhs}, {"rhs", link.rhs}, {"holds", link.holds}});
    }
    j["chain"] = std::move(chain);
  }
  if (r.c_equals_d) j["c_equals_d"] = *r.c_equals_d;
  return j;
}

json to_json(const DistanceSpectrum& s) {
  json j;
  j["rep"] = s.rep;
  j["R"] = round6(s.radius);
  json entries = json::array();
  for (const auto& [d2, count] : s.entries) entries.push_back({{"d2", d2}, {"count", count}});
  j["entries"] = std::move(entries);
  return j;
}

json to_json(const EdsResult& r) {
  json j;
  j["eds"] = r.eds;
  j["d2"] = r.d2 ? json(*r.d2) : json(nullptr);
  if (r.witness) {
    j["witness"] = {{"reps", {r.witness->first, r.witness->second}},
                    {"counts", {r.counts.first, r.counts.second}}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json to_json(const EquiMinResult& r) {
  json j;
  j["equi_min"] = r.equi_min;
  j["dmin2"] = r.dmin2;
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  if (r.witness) j["witness_d2"] = r.witness_d2;
  return j;
}

json to_json(const PackingReport& r) {
  json j;
  j["n"] = r.n;
  j["L"] = r.levels;
  j["dmin2"] = r.dmin2;
  j["log2_count"] = round6(r.log2_count);
  j["log_vol_per_point"] = round6(r.log_vol_per_point);
  j["log_delta"] = round6(r.log_delta);
  j["delta"] = round6(r.delta);
  j["rho"] = round6(r.rho);
  j["r_pack"] = round6(r.r_pack);
  j["r_effective"] = round6(r.r_effective);
  return j;
}

json to_json(const DensityComparison& c) {
  json j;
  j["n"] = c.n;
  j["d2_cstar"] = c.d2_cstar;
  j["d2_c"] = c.d2_c;
  j["log2_size_cstar"] = round6(c.log2_size_cstar);
  j["log2_size_c"] = round6(c.log2_size_c);
  j["delta_winner"] = to_string(c.delta_winner);
  j["rho_winner"] = to_string(c.rho_winner);
  j["delta_ratio"] = round6(c.delta_ratio);
  return j;
}

json to_json(const ConditionReport& r) {
  json j;
  j["trials"] = r.trials;
  j["threshold"] = r.threshold;
  j["marginal"] = chi_json(r.marginal);
  j["cstar_pair"] = chi_json(r.cstar_pair);
  j["shared_lsb_pair"] = chi_json(r.shared_lsb_pair);
  j["cstar_pair_flagged"] = r.cstar_pair_flagged();
  j["shared_lsb_pair_flagged"] = r.shared_lsb_pair_flagged();
  return j;
}

void write_gvb_csv(std::ostream& out, double step) {
  if (!(step > 0 && step <= 0.5)) throw Error("gvb: step must lie in (0, 0.5]");
  out << "alpha1,rho,levels\n";
  const auto steps = static_cast<std::uint64_t>(std::floor(0.5 / step + 1e-9));
  double best_a = 0, best_rho = -1;
  for (std::uint64_t k = 1; k <= steps; ++k) {
    const double a = static_cast<double>(k) * step;
    const auto pt = gvb_packing_efficiency(a);
    out << format6(a) << ',' << format6(pt.rho) << ',' << pt.levels_used << '\n';
    if (pt.rho > best_rho) {
      best_rho = pt.rho;
      best_a = a;
    }
  }
  const auto opt = gvb_maximize(std::min(step, 1e-3));
  out << "# grid_best alpha1=" << format6(best_a) << " rho=" << format6(best_rho) << '\n';
  out << "# optimum alpha1=" << format6(opt.alpha_star) << " rho=" << format6(opt.rho_star) << '\n';
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace mlc
