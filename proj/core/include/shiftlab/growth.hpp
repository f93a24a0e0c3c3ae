#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab {

enum class GrowthClass {
  Const,
  Linear,
  NLogLogN,
  NLogN,
  Quadratic,
  Exponential,
  Unclassified,
};

const char* to_string(GrowthClass c);
GrowthClass growth_class_from_string(const std::string& s);

struct MorseHedlundResult {
  bool forced_periodic = false;
  int n_star = 0;  // least n with P(n) <= n when forced_periodic
  bool operator==(const MorseHedlundResult&) const = default;
};

/// Scans a complexity table for the periodicity threshold P(n) <= n.
/// Throws MalformedTable when the table is empty or decreasing.
MorseHedlundResult morse_hedlund_classify(const std::vector<std::uint64_t>& table);

struct GrowthReport {
  std::vector<std::uint64_t> table;
  double entropy_estimate = 0.0;       // log P(n_max) / n_max, nats
  double upper_poly_estimate = 0.0;    // max over the tail half of log P / log n
  double lower_poly_estimate = 0.0;    // min over the tail half
  GrowthClass growth_class = GrowthClass::Unclassified;
  double subquadratic_proxy = 0.0;     // min over n of P(n) / n^2, finite-horizon surrogate
  bool operator==(const GrowthReport&) const = default;
};

/// Requires a table of length >= 8 (TableTooShort otherwise). The class is
/// picked by least-squares fit of log P(n) over the tail half against the
/// model shapes 1, n, n log log n, n log n, n^2 and a free-rate exponential;
/// a relative residual gap under 10% yields Unclassified.
GrowthReport growth_report(const std::vector<std::uint64_t>& table);

}  // namespace shiftlab
