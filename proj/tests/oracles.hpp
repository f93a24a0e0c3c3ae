#pragma once
// Reference implementations used only by the tests. Each recomputes a result
// the library also produces, by a deliberately different route, so that the
// two can disagree loudly.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/block_code.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/language.hpp"

namespace oracle {

/// Runs f and reports the kind of the ShiftError it throws, if any.
template <typename F>
inline std::optional<shiftlab::ErrorKind> error_kind_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const shiftlab::ShiftError& e) {
    return e.kind();
  }
  return std::nullopt;
}

/// Length-n factors of the fixed point of a prefix-stable substitution,
/// collected from a long explicit prefix. The rule must map the seed symbol
/// to a word starting with that symbol.
inline std::set<std::string> substitution_factors(const std::map<char, std::string>& rules,
                                                  char seed, int n,
                                                  std::size_t prefix_target = 20000) {
  std::string word(1, seed);
  while (word.size() < prefix_target) {
    std::string next;
    for (char c : word) next += rules.at(c);
    if (next == word) break;
    word = std::move(next);
  }
  std::set<std::string> out;
  if (n <= 0 || static_cast<std::size_t>(n) > word.size()) return out;
  for (std::size_t i = 0; i + n <= word.size(); ++i) out.insert(word.substr(i, n));
  return out;
}

/// Length-n factors of the rotation coding with slope (p + sqrt(q)) / r,
/// computed with plain floating-point floors.
inline std::set<std::string> mechanical_factors(long long p, long long q, long long r, int n,
                                                int window = 0) {
  if (window == 0) window = 96 * n + 96;
  const long double alpha =
      (static_cast<long double>(p) + std::sqrt(static_cast<long double>(q))) /
      static_cast<long double>(r);
  std::string sample;
  long double prev = 0.0L;
  for (int i = 1; i <= window; ++i) {
    const long double cur = std::floor(static_cast<long double>(i) * alpha);
    sample += static_cast<char>('0' + static_cast<int>(cur - prev));
    prev = cur;
  }
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= sample.size(); ++i) out.insert(sample.substr(i, n));
  return out;
}

inline bool avoids(const std::string& w, const std::vector<std::string>& forbidden) {
  for (const std::string& f : forbidden)
    if (w.find(f) != std::string::npos) return false;
  return true;
}

inline bool extends_right(const std::string& w, const std::string& alphabet,
                          const std::vector<std::string>& forbidden, int steps) {
  if (steps == 0) return true;
  for (char c : alphabet) {
    std::string t = w + c;
    if (avoids(t, forbidden) && extends_right(t, alphabet, forbidden, steps - 1)) return true;
  }
  return false;
}

inline bool extends_left(const std::string& w, const std::string& alphabet,
                         const std::vector<std::string>& forbidden, int steps) {
  if (steps == 0) return true;
  for (char c : alphabet) {
    std::string t = std::string(1, c) + w;
    if (avoids(t, forbidden) && extends_left(t, alphabet, forbidden, steps - 1)) return true;
  }
  return false;
}

/// Words of length n that avoid every forbidden factor and extend `margin`
/// symbols in both directions. Any forbidden-free walk longer than the number
/// of memory states must revisit one, so a margin past that number certifies
/// a bi-infinite extension; 12 covers every alphabet/forbidden size the tests
/// use.
inline std::set<std::string> sft_factors(const std::string& alphabet,
                                         const std::vector<std::string>& forbidden, int n,
                                         int margin = 12) {
  std::set<std::string> out;
  std::vector<int> idx(n, 0);
  std::string w(n, alphabet[0]);
  while (true) {
    for (int i = 0; i < n; ++i) w[i] = alphabet[idx[i]];
    if (avoids(w, forbidden) && extends_right(w, alphabet, forbidden, margin) &&
        extends_left(w, alphabet, forbidden, margin))
      out.insert(w);
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(alphabet.size())) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

/// Cyclic length-n windows of a periodic word.
inline std::set<std::string> periodic_factors(const std::string& cycle, int n) {
  std::string doubled = cycle;
  while (doubled.size() < cycle.size() + n) doubled += cycle;
  std::set<std::string> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) out.insert(doubled.substr(i, n));
  return out;
}

/// Window count by direct construction in absolute coordinates: level j of
/// the seed occupies columns [-N(height-1) + jN, ...), and row j of the
/// window reads columns [0, width) of that level.
inline std::uint64_t rect_count(shiftlab::Language& lang, const shiftlab::SlidingBlockCode& code,
                                int width, int height) {
  const int N = code.range();
  const int seed_len = 2 * N * (height - 1) + width;
  std::set<std::string> seen;
  for (const shiftlab::Word& seed : lang.words(seed_len).words) {
    std::string level = seed;
    long long left = -static_cast<long long>(N) * (height - 1);
    std::string canon;
    for (int j = 0; j < height; ++j) {
      canon.append(level.substr(static_cast<std::size_t>(-left), width));
      if (j + 1 < height) {
        level = shiftlab::apply_code(code, level);
        left += N;
      }
    }
    seen.insert(std::move(canon));
  }
  return seen.size();
}

/// Semantic check that shift^a o code^b is the identity: applies the code b
/// times to every admissible word of a covering length and compares the
/// result with the a-shifted original, position by position.
inline bool identity_after_shift(shiftlab::Language& lang, const shiftlab::SlidingBlockCode& code,
                                 int b, long long a) {
  const int N = code.range();
  const long long bN = static_cast<long long>(b) * N;
  const int probe_len = static_cast<int>(2 * bN + 2 * std::llabs(a) + 7);
  for (const shiftlab::Word& w : lang.words(probe_len).words) {
    std::string z = w;
    for (int step = 0; step < b; ++step) z = shiftlab::apply_code(code, z);
    // z[j] is the composite image at absolute position j + bN; the shift then
    // reads position i from z[i + a - bN].
    bool any = false;
    for (long long i = 0; i < probe_len; ++i) {
      const long long j = i + a - bN;
      if (j < 0 || j >= static_cast<long long>(z.size())) continue;
      any = true;
      if (z[static_cast<std::size_t>(j)] != w[static_cast<std::size_t>(i)]) return false;
    }
    if (!any) return false;  // probe length leaves no overlap: treat as failure
  }
  return true;
}

}  // namespace oracle
