#pragma once

// Text code files and the JSON / CSV exchange formats.
//
// Code file: first line "n k" followed by k generator rows, or "n *"
// followed by one codeword per line. A row is either n space-separated bits
// or a single run of n bits. '#' starts a comment.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mlc/constructions.hpp"
#include "mlc/ensembles.hpp"
#include "mlc/geometry.hpp"
#include "mlc/gf2.hpp"
#include "mlc/latticeness.hpp"
#include "mlc/packing.hpp"

namespace mlc {

using json = nlohmann::ordered_json;

BinaryCode parse_code(std::string_view text);
BinaryCode read_code_file(const std::string& path);
/// Generator form when the code carries a generator, explicit form otherwise.
std::string format_code(const BinaryCode& code);

/// Rounds to 6 significant digits, half to even on the decimal expansion.
double round6(double v);
std::string format6(double v);

json to_json(const PeriodicConstellation& p);
PeriodicConstellation constellation_from_json(const json& j);

json to_json(const Witness& w);
json to_json(const LatticenessReport& r, std::optional<double> elapsed_ms = std::nullopt);
json to_json(const DistanceSpectrum& s);
json to_json(const EdsResult& r);
json to_json(const EquiMinResult& r);
json to_json(const PackingReport& r);
json to_json(const DensityComparison& c);
json to_json(const ConditionReport& r);

/// alpha1,rho,levels rows over (0, 0.5] at `step`, then an optimum comment line.
void write_gvb_csv(std::ostream& out, double step);

/// Writes `text` to `path`, throwing Error on failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mlc
