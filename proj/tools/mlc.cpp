// Command-line front end: construct, check, table1, gvb, leech, conditions, export.
// Verdicts are data: the exit status is nonzero only for usage, input or budget errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlc/catalog.hpp"
#include "mlc/constructions.hpp"
#include "mlc/ensembles.hpp"
#include "mlc/error.hpp"
#include "mlc/geometry.hpp"
#include "mlc/io.hpp"
#include "mlc/latticeness.hpp"
#include "mlc/leech.hpp"
#include "mlc/parallel.hpp"
#include "mlc/table1.hpp"

namespace {

using mlc::json;
using Clock = std::chrono::steady_clock;

struct InputArgs {
  std::string catalog;
  std::vector<std::string> code_files;
  std::string constellation_file;
  std::size_t n = 0;
  std::size_t levels = 0;
  std::string kind;
};

struct Input {
  std::string label;
  std::vector<mlc::BinaryCode> codes;
  std::optional<mlc::MainCode> main;
  std::optional<mlc::PeriodicConstellation> constellation;
  mlc::Source kind = mlc::Source::cstar;
  bool leech = false;
};

void add_input_options(CLI::App* app, InputArgs& a) {
  app->add_option("--catalog", a.catalog, "Built-in code id (see 'mlc export --list')");
  app->add_option("--code", a.code_files, "Code file; one per level for --kind c/d, one main code for cstar");
  app->add_option("--input", a.constellation_file, "Constellation JSON");
  app->add_option("--n", a.n, "Level width n (catalog families, main-code files)");
  app->add_option("--L", a.levels, "Number of levels (main-code files)");
  app->add_option("--kind", a.kind, "Construction: a, c, cstar or d")
      ->check(CLI::IsMember({"a", "c", "cstar", "d"}));
}

Input resolve(const InputArgs& a) {
  const int sources = !a.catalog.empty() + !a.code_files.empty() + !a.constellation_file.empty();
  if (sources != 1) throw mlc::Error("give exactly one of --catalog, --code, --input");
  Input in;
  if (!a.constellation_file.empty()) {
    std::ifstream f(a.constellation_file);
    if (!f) throw mlc::Error("cannot open '" + a.constellation_file + "'");
    json j;
    try {
      j = json::parse(f);
    } catch (const json::parse_error& e) {
      throw mlc::Error(a.constellation_file + ": " + e.what());
    }
    in.constellation.emplace(mlc::constellation_from_json(j));
    in.label = a.constellation_file;
    in.kind = in.constellation->source();
    return in;
  }
  if (a.catalog == "leech") {
    in.leech = true;
    in.label = "leech";
    return in;
  }
  if (!a.catalog.empty()) {
    auto e = mlc::catalog_example(a.catalog, a.n);
    in.label = e.id;
    in.codes = std::move(e.codes);
    in.main = std::move(e.main);
    in.kind = e.kind;
  } else {
    in.label = a.code_files.front();
    for (std::size_t i = 1; i < a.code_files.size(); ++i) in.label += "," + a.code_files[i];
    std::vector<mlc::BinaryCode> codes;
    for (const auto& path : a.code_files) {
      try {
        codes.push_back(mlc::read_code_file(path));
      } catch (const mlc::ParseError& e) {
        throw mlc::Error(path + ": " + e.what());
      }
    }
    if (a.kind == "cstar") {
      if (codes.size() != 1) throw mlc::Error("--kind cstar takes a single main-code file");
      const std::size_t len = codes[0].length();
      std::size_t n = a.n, levels = a.levels;
      if (n == 0 && levels == 0) throw mlc::Error("main-code files need --n or --L");
      if (n == 0) n = len / levels;
      if (levels == 0) levels = len / n;
      in.main.emplace(std::move(codes[0]), n, levels);
      in.codes = mlc::projection_codes(*in.main);
      in.kind = mlc::Source::cstar;
    } else {
      in.codes = std::move(codes);
      in.main.emplace(mlc::product_main_code(in.codes));
      in.kind = in.codes.size() == 1 ? mlc::Source::a : mlc::Source::c;
    }
  }
  if (a.kind == "a") in.kind = mlc::Source::a;
  if (a.kind == "c") in.kind = mlc::Source::c;
  if (a.kind == "cstar") in.kind = mlc::Source::cstar;
  if (a.kind == "d") in.kind = mlc::Source::d;
  return in;
}

mlc::PeriodicConstellation build(const Input& in) {
  if (in.constellation) return *in.constellation;
  if (in.leech) throw mlc::Error("the Leech main code has 2^36 words; use 'mlc leech'");
  switch (in.kind) {
    case mlc::Source::a:
      if (in.codes.size() != 1) throw mlc::Error("--kind a needs a single code");
      return mlc::construction_a(in.codes[0]);
    case mlc::Source::c:
      return mlc::construction_c(in.codes);
    case mlc::Source::d:
      return mlc::construction_d(in.codes);
    default:
      return mlc::construction_cstar(*in.main);
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    mlc::write_text_file(out_path, text);
  }
}

std::vector<int> parse_rep(const std::string& s) {
  std::vector<int> rep;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      rep.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw mlc::Error("--spectrum expects comma-separated integers, got '" + s + "'");
    }
  }
  return rep;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multilevel lattice constructions from binary codes"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  bool timing = false;
  app.add_option("--threads", threads, "Worker threads (0: MLC_THREADS or hardware)");
  app.add_flag("--timing", timing, "Add elapsed_ms to reports");

  InputArgs construct_in;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct", "Build a constellation and write it as JSON");
  add_input_options(construct, construct_in);
  construct->add_option("--out", construct_out, "Output JSON path (stdout if omitted)");

  InputArgs check_in;
  std::string lattice_method, spectrum_rep, check_out;
  bool eds = false, equimin = false;
  double radius = 0;
  auto* check = app.add_subcommand("check", "Latticeness and geometry report");
  add_input_options(check, check_in);
  check->add_option("--lattice", lattice_method, "brute, thm1, thm4, thm5 or all")
      ->check(CLI::IsMember({"brute", "thm1", "thm4", "thm5", "all"}));
  check->add_flag("--eds", eds, "Equi-distance-spectrum check");
  check->add_flag("--equimin", equimin, "Equi-minimum-distance check");
  check->add_option("--spectrum", spectrum_rep, "Distance spectrum around REP, e.g. 1,1");
  check->add_option("--radius", radius, "Radius for --spectrum and --eds (default 2q)");
  check->add_option("--out", check_out, "Output JSON path (stdout if omitted)");

  std::string table_out;
  auto* table = app.add_subcommand("table1", "Density table for C* and its associated C");
  table->add_option("--out", table_out, "Also write the table as JSON");

  double step = 1e-3;
  std::string gvb_out;
  auto* gvb = app.add_subcommand("gvb", "Packing efficiency curve of GVB-achieving Construction C");
  gvb->add_option("--step", step, "Grid step in alpha1");
  gvb->add_option("--out", gvb_out, "CSV path (stdout if omitted)");

  std::string leech_out;
  auto* leech = app.add_subcommand("leech", "Structured verification of the Leech main code");
  leech->add_option("--out", leech_out, "Output JSON path (stdout if omitted)");

  mlc::EnsembleConfig cfg;
  std::string mode = "nonlinear";
  std::uint64_t trials = 100000;
  std::string cond_out;
  auto* conditions = app.add_subcommand("conditions", "Uniformity and independence tests on random main codes");
  conditions->add_option("--n", cfg.n, "Level width");
  conditions->add_option("--L", cfg.levels, "Number of levels");
  conditions->add_option("--rate", cfg.rate, "Rate R in (0, 1)");
  conditions->add_option("--mode", mode, "nonlinear or linear")->check(CLI::IsMember({"nonlinear", "linear"}));
  conditions->add_option("--seed", cfg.seed, "RNG seed");
  conditions->add_option("--trials", trials, "Independent draws");
  conditions->add_option("--out", cond_out, "Output JSON path (stdout if omitted)");

  InputArgs export_in;
  bool list = false;
  auto* exporter = app.add_subcommand("export", "Write catalog codes in the code file format");
  add_input_options(exporter, export_in);
  exporter->add_flag("--list", list, "List catalog ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (threads > 0) mlc::set_thread_count(threads);
    const auto t0 = Clock::now();

    if (*construct) {
      const auto in = resolve(construct_in);
      const auto p = build(in);
      const std::string text = mlc::to_json(p).dump(2) + "\n";
      emit(construct_out, text);
      (construct_out.empty() ? std::cerr : std::cout)
          << "reps=" << p.size() << " q=" << p.period() << " n=" << p.n() << "\n";
    } else if (*check) {
      const auto in = resolve(check_in);
      json report;
      report["command"] = "check";
      report["input"] = in.label;
      if (!lattice_method.empty()) {
        json lat = json::object();
        const bool all = lattice_method == "all";
        auto run = [&](const std::string& name, auto&& fn) {
          const auto t = Clock::now();
          const mlc::LatticenessReport r = fn();
          lat[name] = mlc::to_json(r, timing ? std::optional<double>(ms_since(t)) : std::nullopt);
        };
        if (in.leech) {
          if (!all && lattice_method != "thm4") throw mlc::Error("the Leech main code supports --lattice thm4");
          run("thm4", [&] { return mlc::leech_thm4_check(mlc::LeechMainCode()); });
        } else {
          if (all || lattice_method == "brute") {
            run("brute", [&] { return mlc::brute_closure_oracle(build(in)); });
          }
          const bool level_family = in.kind == mlc::Source::c || in.kind == mlc::Source::d ||
                                    in.kind == mlc::Source::a;
          if ((all && level_family && !in.constellation) || lattice_method == "thm1") {
            if (in.constellation) throw mlc::Error("thm1 needs level codes, not a constellation");
            run("thm1", [&] { return mlc::thm1_check(in.codes); });
          }
          for (const char* m : {"thm4", "thm5"}) {
            if (!all && lattice_method != m) continue;
            if (in.constellation) {
              if (all) continue;
              throw mlc::Error(std::string(m) + " needs a main code, not a constellation");
            }
            run(m, [&] {
              return std::string(m) == "thm4" ? mlc::thm4_check(*in.main) : mlc::thm5_check(*in.main);
            });
          }
        }
        report["lattice"] = std::move(lat);
      }
      if (eds || equimin || !spectrum_rep.empty()) {
        const auto p = build(in);
        const double r = radius > 0 ? radius : 2.0 * p.period();
        if (eds) report["eds"] = mlc::to_json(mlc::eds_check(p, r));
        if (equimin) report["equimin"] = mlc::to_json(mlc::equi_min_distance_check(p));
        if (!spectrum_rep.empty()) {
          const auto rep = parse_rep(spectrum_rep);
          report["spectrum"] = mlc::to_json(mlc::distance_spectrum(p, rep, r));
        }
      }
      if (timing) report["elapsed_ms"] = mlc::round6(ms_since(t0));
      emit(check_out, report.dump(2) + "\n");
    } else if (*table) {
      const auto rows = mlc::table1();
      std::cout << mlc::render_table1(rows);
      if (!table_out.empty()) mlc::write_text_file(table_out, mlc::to_json(rows).dump(2) + "\n");
    } else if (*gvb) {
      std::ostringstream csv;
      mlc::write_gvb_csv(csv, step);
      emit(gvb_out, csv.str());
    } else if (*leech) {
      const mlc::LeechMainCode code;
      const auto r = mlc::leech_report(code);
      json j;
      j["command"] = "leech";
      j["thm4"] = mlc::to_json(r.thm4);
      j["golay_pairs_scanned"] = r.golay_pairs_scanned;
      j["golay_parity_violations"] = r.golay_parity_violations;
      j["s2_zero_size"] = r.s2_zero_size;
      j["s3_zero_size"] = r.s3_zero_size;
      j["s3_zero_is_even_weight"] = r.s3_zero_is_even_weight;
      j["linear"] = r.linear;
      j["log2_size"] = mlc::LeechMainCode::kLog2Size;
      j["dmin2"] = r.dmin2;
      j["upper_bound"] = r.upper_bound;
      j["packing"] = mlc::to_json(r.packing);
      j["associated_c"] = {{"dmin2", r.assoc_dmin2},
                           {"published_dmin2", r.assoc_dmin2_published},
                           {"mismatch", r.assoc_dmin2 != r.assoc_dmin2_published},
                           {"packing", mlc::to_json(r.assoc_packing)}};
      if (timing) j["elapsed_ms"] = mlc::round6(ms_since(t0));
      emit(leech_out, j.dump(2) + "\n");
    } else if (*conditions) {
      cfg.mode = mlc::ensemble_mode_from_string(mode);
      auto j = mlc::to_json(mlc::condition_checks(cfg, trials));
      json out;
      out["command"] = "conditions";
      out["n"] = cfg.n;
      out["L"] = cfg.levels;
      out["rate"] = cfg.rate;
      out["mode"] = mode;
      out["seed"] = cfg.seed;
      out.update(j);
      emit(cond_out, out.dump(2) + "\n");
    } else if (*exporter) {
      if (list) {
        for (const auto& id : mlc::catalog_ids()) std::cout << id << "\n";
        std::cout << "leech\n";
        return 0;
      }
      const auto in = resolve(export_in);
      if (in.leech) throw mlc::Error("the Leech main code is structural; export --catalog golay instead");
      if (in.kind == mlc::Source::cstar) {
        std::cout << "# main code, n=" << in.main->n() << " L=" << in.main->levels() << "\n"
                  << mlc::format_code(in.main->code());
      } else {
        for (std::size_t i = 0; i < in.codes.size(); ++i) {
          std::cout << "# level " << i + 1 << "\n" << mlc::format_code(in.codes[i]);
        }
      }
    }
  } catch (const mlc::BudgetExceeded& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: the input is too large to enumerate; use a structured method "
                 "(thm1/thm4/thm5) or a smaller code\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
