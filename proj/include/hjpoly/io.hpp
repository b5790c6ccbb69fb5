#pragma once

// JSON (lossless) and OFF (lossy decimal) serialization of the library's
// value types.  Every rational travels as its canonical "p/q" string, so a
// parse of a dump reproduces the original object bit for bit; object keys
// are emitted in sorted order, making dumps byte-stable across runs.

#include "hjpoly/certify.hpp"
#include "hjpoly/cover.hpp"
#include "hjpoly/hj.hpp"
#include "hjpoly/rat.hpp"
#include "hjpoly/realize.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hjpoly {

using Json = nlohmann::json;

// ---- hypergraph files ----------------------------------------------------
// Carries an optional generator annotation (d, n, line patterns) alongside
// the plain incidence data, so solver inputs need not come from a generator.
struct HypergraphFile {
    Hypergraph graph;
    std::optional<int> d;
    std::optional<int> n;
    std::optional<std::vector<LinePattern>> patterns;  // parallel to edges
    friend bool operator==(const HypergraphFile& a, const HypergraphFile& b) = default;
};

HypergraphFile hypergraph_file(const HJHypergraph& hj);
Json to_json(const HypergraphFile& file);
HypergraphFile hypergraph_file_from_json(const Json& js);

// ---- solver solution files ------------------------------------------------
Json tau_solution_json(const TauResult& result);
TauResult tau_solution_from_json(const Json& js);

Json chi_solution_json(const ChiResult& result);
ChiResult chi_solution_from_json(const Json& js);

// ---- realization files ----------------------------------------------------
struct RealizationFile {
    Realization realization;
    std::optional<CertBundle> certificates;
};

Json to_json(const RealizationFile& file);
// Parses and structurally validates (validate_realization); certificate
// re-checking is a separate explicit step (recheck_bundle).
RealizationFile realization_file_from_json(const Json& js);

// ---- formatting helpers ----------------------------------------------------
// Fixed-point decimal with the given number of fractional digits, rounding
// half away from zero: decimal_string(-1/3, 4) == "-0.3333".
std::string decimal_string(const Rat& value, unsigned digits);

// Lossy OFF-style export: header comment naming the exact source, "nOFF",
// the dimension, counts, then one decimal row per point.
std::string off_export(const Realization& real, unsigned digits = 20);

// Canonical file rendering of a JSON value: 2-space indent, sorted keys,
// trailing newline.
std::string dump_json(const Json& js);

}  // namespace hjpoly
