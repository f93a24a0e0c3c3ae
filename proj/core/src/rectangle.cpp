#include "shiftlab/rectangle.hpp"

#include <algorithm>
#include <unordered_set>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

void check_dimensions(int width, int height) {
  if (width < 1 || height < 1)
    raise(ErrorKind::InvalidSpec, "window dimensions must be positive");
}

std::vector<Word> iterate_rows(const SlidingBlockCode& code, const Word& seed, int width,
                               int height) {
  const int n = code.range();
  std::vector<Word> rows;
  rows.reserve(static_cast<size_t>(height));
  Word line = seed;
  for (int j = 0; j < height; ++j) {
    rows.push_back(line.substr(static_cast<size_t>((height - 1 - j) * n),
                               static_cast<size_t>(width)));
    if (j + 1 < height) line = apply_code(code, line);
  }
  return rows;
}

}  // namespace

std::string RectPattern::canonical() const {
  std::string out;
  out.reserve(static_cast<size_t>(width) * static_cast<size_t>(height));
  for (const Word& row : rows) out += row;
  return out;
}

std::string RectPattern::grid_text() const {
  std::string out;
  for (size_t j = 0; j < rows.size(); ++j) {
    if (j) out.push_back('\n');
    out += rows[j];
  }
  return out;
}

int iterate_seed_length(const SlidingBlockCode& code, int width, int height) {
  check_dimensions(width, height);
  return 2 * code.range() * (height - 1) + width;
}

RectPattern build_iterate_window(Language& lang, const SlidingBlockCode& code, const Word& seed,
                                 int width, int height) {
  check_dimensions(width, height);
  require_binding(lang, code);
  const int need = iterate_seed_length(code, width, height);
  if (static_cast<int>(seed.size()) != need)
    raise(ErrorKind::SeedLengthMismatch,
          "seed length " + std::to_string(seed.size()) + " differs from required " +
              std::to_string(need));
  if (!lang.contains(seed))
    raise(ErrorKind::InadmissibleWindow, "seed is not an admissible word");
  return {width, height, iterate_rows(code, seed, width, height)};
}

std::uint64_t rect_complexity(Language& lang, const SlidingBlockCode& code, int width,
                              int height) {
  check_dimensions(width, height);
  require_binding(lang, code);
  if (height == 1) return lang.complexity(width);

  // A code acting as shift^s fills row j with the row above moved by s, so
  // the window is a bijective rearrangement of one word along the base line.
  for (int s = -code.range(); s <= code.range(); ++s) {
    if (std::abs(s) > width) continue;
    if (code_equals_shift(lang, code, s))
      return lang.complexity(width + std::abs(s) * (height - 1));
  }

  const int seed_len = iterate_seed_length(code, width, height);
  std::unordered_set<std::string> seen;
  for (const Word& seed : lang.words(seed_len).words) {
    RectPattern pattern{width, height, iterate_rows(code, seed, width, height)};
    seen.insert(pattern.canonical());
  }
  return seen.size();
}

std::uint64_t seed_word_bound(Language& lang, const SlidingBlockCode& code, int width,
                              int height) {
  check_dimensions(width, height);
  require_binding(lang, code);
  return lang.complexity(iterate_seed_length(code, width, height));
}

ThresholdVerdict periodicity_threshold_check(Language& lang, const SlidingBlockCode& code,
                                             int width, int height) {
  const std::uint64_t count = rect_complexity(lang, code, width, height);
  const std::uint64_t cells = static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
  return count <= cells / 16 ? ThresholdVerdict::Triggered : ThresholdVerdict::NotTriggered;
}

PeriodCertificate certify_period(Language& lang, const AutomorphismCertificate& cert,
                                 int max_power, long long max_shift) {
  OrderModShiftResult order = order_mod_shift(lang, cert, max_power, max_shift);
  PeriodCertificate out;
  out.max_power = max_power;
  out.max_shift = max_shift;
  if (order.outcome == OrderModShiftResult::Outcome::Found) {
    out.outcome = PeriodCertificate::Outcome::Found;
    out.vector = {order.shift, static_cast<long long>(order.power)};
  }
  return out;
}

bool verify_window_periodicity(const RectPattern& pattern, const PeriodVector& v) {
  if (v.dx == 0 && v.dy == 0)
    raise(ErrorKind::InvalidSpec, "the zero vector is not a period");
  const long long w = pattern.width;
  const long long h = pattern.height;
  const long long i_lo = std::max(0LL, -v.dx);
  const long long i_hi = std::min(w, w - v.dx);
  const long long j_lo = std::max(0LL, -v.dy);
  const long long j_hi = std::min(h, h - v.dy);
  if (i_lo >= i_hi || j_lo >= j_hi)
    raise(ErrorKind::NoOverlap, "translate misses the window entirely");
  for (long long j = j_lo; j < j_hi; ++j)
    for (long long i = i_lo; i < i_hi; ++i)
      if (pattern.rows[static_cast<size_t>(j)][static_cast<size_t>(i)] !=
          pattern.rows[static_cast<size_t>(j + v.dy)][static_cast<size_t>(i + v.dx)])
        return false;
  return true;
}

}  // namespace shiftlab
