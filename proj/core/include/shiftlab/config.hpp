#pragma once

#include <string>
#include <vector>

#include "shiftlab/language.hpp"

namespace shiftlab {

/// Search horizons. Negative values mean "resolve a default at run time":
/// aut_range from the spec family, max_inverse_range from aut_range, depth
/// from default_verification_depth.
struct Horizons {
  int n_max = 40;
  int aut_range = -1;
  int max_inverse_range = -1;
  int depth = -1;
  int max_power = 8;
  long long max_shift = 24;
  std::vector<int> rect_sizes = {4, 8, 16, 32};
  bool operator==(const Horizons&) const = default;
};

int resolve_aut_range(const Horizons& h, const SubshiftSpec& spec);
int resolve_inverse_range(const Horizons& h, const SubshiftSpec& spec);
int resolve_depth(const Horizons& h, const SubshiftSpec& spec, int range);

struct SpecEntry {
  std::string name;
  SubshiftSpec spec;
  Horizons horizons;
  std::string note;  // free-text annotation copied into the run report
  bool operator==(const SpecEntry&) const = default;
};

struct ExperimentConfig {
  std::vector<SpecEntry> specs;  // sorted by name
  Limits limits;
  Horizons defaults;
  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses the key-value experiment format:
///
///   [limits]
///   max_words = 2000000
///
///   [horizons]
///   n_max = 40
///
///   [specs.fibonacci]
///   type = "substitution"
///   rules = {"0" = "01", "1" = "0"}
///   seed = "0"
///   aut_range = 2
///
/// Spec sections accept per-spec horizon overrides. Unknown keys, duplicate
/// names and malformed values raise ConfigError.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace shiftlab
