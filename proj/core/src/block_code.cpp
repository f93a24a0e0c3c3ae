#include "shiftlab/block_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "shiftlab/errors.hpp"

namespace shiftlab {

SlidingBlockCode::SlidingBlockCode(SubshiftSpec spec, int range,
                                   std::vector<std::pair<Word, Symbol>> rule)
    : spec_(std::move(spec)), range_(range), rule_(std::move(rule)) {
  if (range_ < 0) raise(ErrorKind::InvalidCode, "code range must be nonnegative");
  const Alphabet& a = spec_.alphabet;
  const size_t window = 2 * static_cast<size_t>(range_) + 1;
  for (const auto& [w, out] : rule_) {
    if (w.size() != window)
      raise(ErrorKind::MalformedTable, "rule window length must be twice the range plus one");
    if (!a.contains_word(w))
      raise(ErrorKind::MalformedTable, "rule window uses a symbol outside the alphabet");
    if (!a.contains(out))
      raise(ErrorKind::MalformedTable, "rule output lies outside the alphabet");
  }
  std::sort(rule_.begin(), rule_.end(), [&](const auto& x, const auto& y) {
    return a.word_less(x.first, y.first);
  });
  for (size_t i = 1; i < rule_.size(); ++i)
    if (rule_[i].first == rule_[i - 1].first)
      raise(ErrorKind::MalformedTable, "duplicate rule window");
}

const Symbol* SlidingBlockCode::find_output(std::string_view window) const {
  auto it = std::lower_bound(rule_.begin(), rule_.end(), window,
                             [&](const auto& entry, std::string_view w) {
                               return spec_.alphabet.word_less(entry.first, w);
                             });
  if (it == rule_.end() || std::string_view(it->first) != window) return nullptr;
  return &it->second;
}

Symbol SlidingBlockCode::output(std::string_view window) const {
  const Symbol* out = find_output(window);
  if (!out)
    raise(ErrorKind::InadmissibleWindow,
          "window \"" + std::string(window) + "\" is not in the rule table");
  return *out;
}

std::string SlidingBlockCode::output_profile() const {
  std::string profile;
  profile.reserve(rule_.size());
  for (const auto& [w, out] : rule_) profile.push_back(out);
  return profile;
}

SlidingBlockCode identity_code(Language& lang) {
  std::vector<std::pair<Word, Symbol>> rule;
  for (const Word& w : lang.words(1).words) rule.push_back({w, w[0]});
  return SlidingBlockCode(lang.spec(), 0, std::move(rule));
}

SlidingBlockCode shift_power_code(Language& lang, int exponent) {
  const int range = std::abs(exponent);
  std::vector<std::pair<Word, Symbol>> rule;
  for (const Word& w : lang.words(2 * range + 1).words)
    rule.push_back({w, w[static_cast<size_t>(range + exponent)]});
  return SlidingBlockCode(lang.spec(), range, std::move(rule));
}

Word apply_code(const SlidingBlockCode& code, std::string_view w) {
  const size_t window = 2 * static_cast<size_t>(code.range()) + 1;
  if (w.size() < window)
    raise(ErrorKind::WordTooShort, "word of length " + std::to_string(w.size()) +
                                       " is shorter than the rule window");
  Word out;
  out.reserve(w.size() - window + 1);
  for (size_t j = 0; j + window <= w.size(); ++j) out.push_back(code.output(w.substr(j, window)));
  return out;
}

void require_binding(const Language& lang, const SlidingBlockCode& code) {
  if (!(code.spec() == lang.spec()))
    raise(ErrorKind::SpecMismatch, "code is bound to a different subshift spec");
}

void validate_code(Language& lang, const SlidingBlockCode& code) {
  require_binding(lang, code);
  const WordSet& windows = lang.words(2 * code.range() + 1);
  if (code.rule().size() != windows.words.size())
    raise(ErrorKind::InvalidCode, "rule table does not cover the admissible windows exactly");
  for (size_t i = 0; i < windows.words.size(); ++i)
    if (code.rule()[i].first != windows.words[i])
      raise(ErrorKind::InvalidCode, "rule table domain differs from the admissible windows");
}

SlidingBlockCode compose(Language& lang, const SlidingBlockCode& outer,
                         const SlidingBlockCode& inner) {
  require_binding(lang, outer);
  require_binding(lang, inner);
  const int range = outer.range() + inner.range();
  std::vector<std::pair<Word, Symbol>> rule;
  for (const Word& w : lang.words(2 * range + 1).words) {
    Word mid = apply_code(inner, w);
    rule.push_back({w, outer.output(mid)});
  }
  return SlidingBlockCode(lang.spec(), range, std::move(rule));
}

SlidingBlockCode pad_range(Language& lang, const SlidingBlockCode& code, int new_range) {
  require_binding(lang, code);
  if (new_range < code.range())
    raise(ErrorKind::RangeShrink, "cannot re-express a code at a smaller range");
  if (new_range == code.range()) return code;
  const size_t offset = static_cast<size_t>(new_range - code.range());
  const size_t window = 2 * static_cast<size_t>(code.range()) + 1;
  std::vector<std::pair<Word, Symbol>> rule;
  for (const Word& w : lang.words(2 * new_range + 1).words)
    rule.push_back({w, code.output(std::string_view(w).substr(offset, window))});
  return SlidingBlockCode(lang.spec(), new_range, std::move(rule));
}

bool codes_equal_on(Language& lang, const SlidingBlockCode& a, const SlidingBlockCode& b) {
  require_binding(lang, a);
  require_binding(lang, b);
  const int range = std::max(a.range(), b.range());
  const size_t wa = 2 * static_cast<size_t>(a.range()) + 1;
  const size_t wb = 2 * static_cast<size_t>(b.range()) + 1;
  const size_t oa = static_cast<size_t>(range - a.range());
  const size_t ob = static_cast<size_t>(range - b.range());
  for (const Word& w : lang.words(2 * range + 1).words) {
    std::string_view view(w);
    if (a.output(view.substr(oa, wa)) != b.output(view.substr(ob, wb))) return false;
  }
  return true;
}

bool code_equals_shift(Language& lang, const SlidingBlockCode& code, long long exponent) {
  require_binding(lang, code);
  const long long range = code.range();
  if (std::llabs(exponent) <= range) {
    for (const auto& [w, out] : code.rule())
      if (out != w[static_cast<size_t>(range + exponent)]) return false;
    return true;
  }
  // Acting as a farther shift power means the window determines the symbol
  // at that offset, so every word reaching from the window to the offset
  // extends uniquely on the far side: the complexity must plateau one step
  // before the comparison span. That keeps this path off growing languages
  // entirely; the word sweep below is the actual proof.
  const long long span = std::llabs(exponent) + range + 1;
  if (span > lang.limits().max_word_length)
    raise(ErrorKind::ResourceLimit, "shift comparison span exceeds the word length cap");
  if (lang.complexity(static_cast<int>(span)) != lang.complexity(static_cast<int>(span - 1)))
    return false;
  const size_t window = 2 * static_cast<size_t>(range) + 1;
  for (const Word& w : lang.words(static_cast<int>(span)).words) {
    std::string_view view(w);
    if (exponent > 0) {
      if (code.output(view.substr(0, window)) != w[static_cast<size_t>(range + exponent)])
        return false;
    } else {
      if (code.output(view.substr(static_cast<size_t>(-exponent - range), window)) != w[0])
        return false;
    }
  }
  return true;
}

}  // namespace shiftlab
