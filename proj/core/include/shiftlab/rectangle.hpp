#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftlab/automorphisms.hpp"

namespace shiftlab {

/// A width x height window of cells; row j lists the symbols at vertical
/// coordinate j. Canonical form is the row-major concatenation.
struct RectPattern {
  int width = 0;
  int height = 0;
  std::vector<Word> rows;

  std::string canonical() const;
  std::string grid_text() const;  // one row per line
  bool operator==(const RectPattern&) const = default;
};

/// Translation under which a pattern repeats: cell(i+dx, j+dy) = cell(i, j).
/// (0,0) is not a period vector.
struct PeriodVector {
  long long dx = 0;
  long long dy = 0;
  bool operator==(const PeriodVector&) const = default;
};

/// Seed length needed for a width x height window: 2N(k-1) + n.
int iterate_seed_length(const SlidingBlockCode& code, int width, int height);

/// Builds the window whose row j is the j-fold image of the seed under the
/// code, aligned so every row shows the same absolute columns. The seed must
/// be admissible and of length 2N(k-1)+n (SeedLengthMismatch otherwise).
RectPattern build_iterate_window(Language& lang, const SlidingBlockCode& code,
                                 const Word& seed, int width, int height);

/// Number of distinct windows over all admissible seeds. Codes that act as a
/// shift power take a closed counting path; everything else enumerates seeds
/// (ResourceLimit past the caps).
std::uint64_t rect_complexity(Language& lang, const SlidingBlockCode& code,
                              int width, int height);

/// The one-row bound: every window is determined by its seed, so the count is
/// at most P(2N(k-1)+n).
std::uint64_t seed_word_bound(Language& lang, const SlidingBlockCode& code,
                              int width, int height);

enum class ThresholdVerdict { Triggered, NotTriggered };

/// Triggered iff rect_complexity(n,k) <= n*k/16, compared exactly.
ThresholdVerdict periodicity_threshold_check(Language& lang, const SlidingBlockCode& code,
                                             int width, int height);

struct PeriodCertificate {
  enum class Outcome { Found, BoundExhausted };
  Outcome outcome = Outcome::BoundExhausted;
  PeriodVector vector;  // valid when Found
  int max_power = 0;
  long long max_shift = 0;
};

/// Order-mod-shift outcome re-expressed as a window translation: Found(b, a)
/// becomes the vector (a, b).
PeriodCertificate certify_period(Language& lang, const AutomorphismCertificate& cert,
                                 int max_power, long long max_shift);

/// Checks the pattern against its own translate by v on the overlap. Throws
/// NoOverlap when the translate misses the window entirely.
bool verify_window_periodicity(const RectPattern& pattern, const PeriodVector& v);

}  // namespace shiftlab
