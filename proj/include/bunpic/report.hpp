#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bunpic/gerbe.hpp"
#include "bunpic/sweep.hpp"

namespace bunpic {

using nlohmann::json;

enum class ExitCode { Ok = 0, InputError = 1, HypothesisFailure = 2 };

struct RunConfig {
  std::string group;                         // spec text or "@path" to a root-datum JSON file
  std::optional<json> group_datum;           // inline root datum (batch lines)
  std::optional<IntVector> delta;            // coordinates in the generators of pi_1(G)
  std::optional<IntVector> lift_d;           // explicit cocharacter
  std::optional<std::string> family_spec;    // "preset:p1,p2" or "@path"
  std::optional<CurveFamily> family;         // inline or raw flags
  std::vector<std::string> compute;
  std::string format = "json";               // text | json
};

const std::vector<std::string>& computation_names();  // pi1 forms ns picard rigidified gerbe poincare

// {"group": ..., "delta": [...], "lift_d": [...], "family": "preset" | {...},
//  "compute": [...]}; throws InvalidSpec.
RunConfig run_config_from_json(const json& j);

struct RunOutcome {
  ExitCode code = ExitCode::Ok;
  json report;
};

RunOutcome run_report(const RunConfig& cfg);
std::vector<RunOutcome> run_batch(const std::vector<std::string>& lines, Execution exec);

// Text is a line-per-leaf projection of the JSON report.
std::string render_text(const json& report);
std::string render(const json& report, const std::string& format);

json int_json(const Int& x);
json vector_json(const IntVector& v);
json matrix_json(const IntMatrix& m);  // list of rows
json group_json(const FGAbelianGroup& g);
json lattice_json(const Lattice& l);   // basis as list of column vectors
json hypothesis_json(const HypothesisResult& h);
json picard_json(const PicardReport& r);
json gerbe_json(const GerbeReport& r);

}  // namespace bunpic
