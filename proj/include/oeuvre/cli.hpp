#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oeuvre/portfolio.hpp"

namespace oeuvre::cli {

enum Exit : int {
  ok = 0,
  usage = 1,
  bad_input = 2,
  pending_decisions = 3,
  invariant_breach = 4,
};

struct PipelineConfig {
  // paths
  std::string corpus;
  std::string roster;
  std::string gold;
  std::string decisions;
  std::string clusters;
  std::string candidates;
  std::string retrieved;
  std::string out_dir = ".";
  std::string general_names;
  std::string synonyms;

  YearWindow window{2010, 2016};
  std::string scenario = "2";
  std::string mode = "initials";
  std::optional<int> fixed_threshold;  // unset: block-size table
  bool strict_threshold = false;
  bool fold_diacritics = true;
  bool career_cities = false;
  bool trace_scores = false;

  int threads = 1;
  std::uint64_t seed = 20161231;
  std::size_t researchers = 200;
  std::string fixture;  // gen: "" (population) or "bernelli"

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

// Keys mirror the field names above; "window" is "Y0:Y1" or [y0, y1] and
// "threshold" is "block-size" or an integer. Unknown keys are an InputError.
void apply_config(PipelineConfig& cfg, const nlohmann::json& j);
PipelineConfig read_config_file(const std::string& path);

// Config echo written into every run manifest.
nlohmann::ordered_json to_json(const PipelineConfig& cfg);

// Hex SHA-256 of a file's bytes. Throws InputError when unreadable.
std::string sha256_file(const std::string& path);

// Parses `args` (args[0] is the program name) and runs one subcommand.
// Returns the process exit status; messages go to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oeuvre::cli
