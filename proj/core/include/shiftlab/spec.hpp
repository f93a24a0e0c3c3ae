#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shiftlab/alphabet.hpp"

namespace shiftlab {

/// Every sequence over the alphabet.
struct FullShift {
  bool operator==(const FullShift&) const = default;
};

/// Shift of finite type: sequences avoiding a finite list of forbidden words.
struct ForbiddenWords {
  std::vector<Word> words;
  bool operator==(const ForbiddenWords&) const = default;
};

/// Shift generated by a primitive substitution. Rules are kept sorted by
/// source symbol so two equal substitutions compare equal.
struct Substitution {
  std::vector<std::pair<Symbol, Word>> rules;
  Symbol seed = 0;

  const Word* image_of(Symbol s) const;
  bool operator==(const Substitution&) const = default;
};

/// Mechanical sequence with quadratic irrational slope (p + sqrt(q)) / r and
/// intercept 0, sampled with exact integer arithmetic.
struct MechanicalWord {
  long long p = 0;
  long long q = 0;
  long long r = 1;
  bool operator==(const MechanicalWord&) const = default;
};

/// Single periodic orbit: the closure of w^inf under the shift.
struct PeriodicOrbit {
  Word word;
  bool operator==(const PeriodicOrbit&) const = default;
};

struct SubshiftSpec {
  Alphabet alphabet;
  std::variant<FullShift, ForbiddenWords, Substitution, MechanicalWord, PeriodicOrbit> family;

  bool operator==(const SubshiftSpec&) const = default;
};

/// Name of the spec family as it appears in config files and reports.
const char* family_name(const SubshiftSpec& spec);

/// Validates structural invariants (alphabet well formed, rules total,
/// substitution primitive, slope a quadratic irrational in (0,1), ...).
/// Throws InvalidSpec or NonPrimitiveSubstitution.
void validate_spec(const SubshiftSpec& spec);

/// Least p >= 1 with the substitution's incidence matrix positive at power p.
/// Throws NonPrimitiveSubstitution when no such p exists.
int primitive_power(const Substitution& sub, const Alphabet& alphabet);

/// Least period of w, i.e. the least divisor p of |w| with w = u^(|w|/p).
int least_period(const Word& w);

// Convenience builders used by tests and the CLI.
SubshiftSpec make_full_shift(const std::string& alphabet);
SubshiftSpec make_sft(const std::string& alphabet, std::vector<Word> forbidden);
SubshiftSpec make_substitution(std::vector<std::pair<Symbol, Word>> rules, Symbol seed);
SubshiftSpec make_mechanical(long long p, long long q, long long r);
SubshiftSpec make_periodic_orbit(const Word& word);

}  // namespace shiftlab
