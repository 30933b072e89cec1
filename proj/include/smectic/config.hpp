#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smectic/model.hpp"

namespace smectic {

// Parsed run configuration: physical/numerical parameters plus output
// controls. The on-disk format is flat "key = value" lines with '#' comments.
struct RunConfig {
  Params params;
  std::string out_dir = "out";
  bool snapshots = true;
  bool override_solvability = false;
  std::string initial_phi = "paper";
};

// All problems found while parsing; each entry names the line and/or key.
struct ConfigError : std::runtime_error {
  explicit ConfigError(std::vector<std::string> errs);
  std::vector<std::string> errors;
};

// Parses and fully validates a config document. Unknown keys are rejected,
// every Params invariant is enforced, and with scheme = od2 the solvability
// constraint dt < 2 eps^2 / gamma is checked unless override_solvability.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

}  // namespace smectic
