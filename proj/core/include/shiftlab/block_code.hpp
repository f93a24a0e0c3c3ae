#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "shiftlab/language.hpp"

namespace shiftlab {

/// Local rule of radius N: a total map from the admissible (2N+1)-words of
/// the bound spec to symbols. The rule table is kept in canonical word order;
/// two codes are equal (operator==) iff spec, range and table coincide.
class SlidingBlockCode {
 public:
  SlidingBlockCode() = default;
  SlidingBlockCode(SubshiftSpec spec, int range,
                   std::vector<std::pair<Word, Symbol>> rule);

  int range() const { return range_; }
  const SubshiftSpec& spec() const { return spec_; }
  const std::vector<std::pair<Word, Symbol>>& rule() const { return rule_; }

  /// Output symbol for one admissible window; throws InadmissibleWindow when
  /// the window is not in the table.
  Symbol output(std::string_view window) const;
  const Symbol* find_output(std::string_view window) const;

  /// Concatenated outputs in canonical window order; the deterministic sort
  /// key used for certificate lists.
  std::string output_profile() const;

  bool operator==(const SlidingBlockCode&) const = default;

 private:
  SubshiftSpec spec_;
  int range_ = 0;
  std::vector<std::pair<Word, Symbol>> rule_;
};

SlidingBlockCode identity_code(Language& lang);

/// The shift composed with itself `exponent` times, as a code of radius
/// |exponent| (convention: (shift x)(i) = x(i+1), so exponent +1 reads the
/// rightmost window symbol).
SlidingBlockCode shift_power_code(Language& lang, int exponent);

/// Slides the rule across w. Output length |w| - 2N. Throws WordTooShort when
/// |w| < 2N+1 and InadmissibleWindow when a window is missing from the table.
Word apply_code(const SlidingBlockCode& code, std::string_view w);

/// outer after inner, radius N_outer + N_inner. Both codes must bind the same
/// spec as lang (SpecMismatch otherwise).
SlidingBlockCode compose(Language& lang, const SlidingBlockCode& outer,
                         const SlidingBlockCode& inner);

/// Re-expresses the rule at a larger radius; refuses to shrink (RangeShrink).
SlidingBlockCode pad_range(Language& lang, const SlidingBlockCode& code, int new_range);

/// Equality as maps on the subshift: pads both codes to the larger radius and
/// compares rule tables on all admissible windows.
bool codes_equal_on(Language& lang, const SlidingBlockCode& a, const SlidingBlockCode& b);

/// Whether the code acts as the shift to the power `exponent` on every point.
/// Exponents beyond the radius are decided through the complexity plateau
/// (they require the language to stop growing), so the check stays cheap on
/// exponentially growing languages.
bool code_equals_shift(Language& lang, const SlidingBlockCode& code, long long exponent);

/// Checks that the two codes bind lang's spec; throws SpecMismatch.
void require_binding(const Language& lang, const SlidingBlockCode& code);

/// Domain must be exactly the admissible (2N+1)-words; throws InvalidCode.
void validate_code(Language& lang, const SlidingBlockCode& code);

}  // namespace shiftlab
