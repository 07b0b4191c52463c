#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "wops/moment_functional.hpp"
#include "wops/pearson.hpp"

namespace wops {

// A run is a functional, a Pearson pair, a degree cap, and a mode.
// mode "verify" treats band violations as hard failures; "explore"
// downgrades them to warnings so non-semiclassical pairs can be probed.
struct RunConfig {
  nlohmann::json functional;
  nlohmann::json pair;  // "appell" | "appell_type:i" | "example2" | inline
  int max_degree = 4;
  std::string mode = "verify";
};

// Throws BadParameter on schema violations (missing keys, N < 1,
// unknown mode).
RunConfig load_config(const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);

FunctionalPtr config_functional(const RunConfig& cfg);
PearsonPair config_pair(const RunConfig& cfg, int dimension);

// Each command writes a JSON report to `out` and returns the process
// exit code: 0 all verified, 1 mathematical violation, 2 unusable
// input (the latter surfaces as BadParameter from the loaders; the
// command-line wrapper maps it to 2).
int run_classify(const RunConfig& cfg, std::ostream& out);
int run_verify(const RunConfig& cfg, std::ostream& out);
int run_export(const RunConfig& cfg, const std::string& what,
               std::ostream& out);

// Serialization helpers shared by export and the reports: rationals as
// "p/q" strings, polynomials rendered in graded descending order.
nlohmann::json rmatrix_to_json(const RMatrix& m);
nlohmann::json polymatrix_to_json(const PolyMatrix& m);

}  // namespace wops
