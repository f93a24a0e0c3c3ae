#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftlab/config.hpp"
#include "shiftlab/growth.hpp"
#include "shiftlab/rectangle.hpp"

namespace shiftlab {

struct OrderRow {
  int code_index = 0;
  std::optional<OrderModShiftResult> order;
  std::string error;
  bool operator==(const OrderRow&) const = default;
};

struct RectRow {
  int code_index = 0;
  int width = 0;
  int height = 0;
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> seed_bound;
  bool bound_holds = false;
  bool threshold_triggered = false;
  std::string error;
  bool operator==(const RectRow&) const = default;
};

struct SpecRunReport {
  std::string name;
  SubshiftSpec spec;
  Horizons horizons;  // resolved values actually used
  std::string note;   // family caveats (e.g. full-shift slice caption)

  std::optional<GrowthReport> growth;
  std::optional<MorseHedlundResult> morse_hedlund;
  std::optional<TransitivityResult> transitivity;

  std::vector<AutomorphismCertificate> certificates;
  SearchStats search_stats;

  std::vector<OrderRow> orders;
  std::vector<RectRow> rect_checks;

  std::vector<std::string> errors;  // "phase: kind: message"
  bool operator==(const SpecRunReport&) const = default;
};

struct PeriodicityVerdict {
  bool all_periodic_mod_shift = false;
  int max_power = 0;
  std::vector<std::string> unresolved;  // "spec#index" for non-Found certificates
  bool operator==(const PeriodicityVerdict&) const = default;
};

struct PeriodicityReport {
  Horizons defaults;
  std::vector<SpecRunReport> specs;
  PeriodicityVerdict verdict;
  bool operator==(const PeriodicityReport&) const = default;
};

/// Runs the full pipeline per spec with per-phase error isolation: language,
/// complexity, growth, transitivity, automorphism search, order mod shift,
/// and the window checks over the configured size grid. Deterministic: equal
/// configs produce equal reports.
PeriodicityReport run_experiment(const ExperimentConfig& config);

std::string report_to_json(const PeriodicityReport& report);
PeriodicityReport report_from_json(const std::string& text);
std::string report_to_text(const PeriodicityReport& report);

/// "n,P" lines for one spec's table.
std::string complexity_csv(const std::vector<std::uint64_t>& table);

/// "code,width,height,count,seed_bound,threshold" lines.
std::string rect_csv(const SpecRunReport& spec_report);

/// Writes report.json / report.txt / per-spec CSVs into out_dir for the
/// requested formats ("json", "text", "csv"). Returns the paths written.
std::vector<std::string> emit_report(const PeriodicityReport& report,
                                     const std::set<std::string>& formats,
                                     const std::string& out_dir);

}  // namespace shiftlab
