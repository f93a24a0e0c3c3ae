#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftlab/spec.hpp"

namespace shiftlab {

/// Hard caps that turn runaway computations into ResourceLimit errors instead
/// of silent degradation.
struct Limits {
  std::uint64_t max_words = 2'000'000;        // materialized words per length
  int max_word_length = 512;                  // enumerable word length
  std::uint64_t max_search_nodes = 4'000'000; // rule-assignment search nodes
  bool operator==(const Limits&) const = default;
};

/// The set of admissible words of one length, canonically sorted and
/// duplicate free.
struct WordSet {
  int length = 0;
  std::vector<Word> words;

  std::uint64_t count() const { return words.size(); }
  bool operator==(const WordSet&) const = default;
};

bool word_set_contains(const WordSet& set, const Alphabet& alphabet, std::string_view w);

namespace detail {
class LanguageBackend;
}

struct TransitivityResult;

/// A subshift language with memoized enumeration. All heavier operations take
/// a Language so repeated queries for the same length hit the cache. The class
/// is cheap to construct but not thread safe; use one instance per thread.
class Language {
 public:
  explicit Language(SubshiftSpec spec, Limits limits = {});
  ~Language();
  Language(Language&&) noexcept;
  Language& operator=(Language&&) noexcept;

  const SubshiftSpec& spec() const { return spec_; }
  const Alphabet& alphabet() const { return spec_.alphabet; }
  const Limits& limits() const { return limits_; }

  /// All admissible words of length n (n >= 1). Words that cannot occur in a
  /// two-sided point are pruned.
  const WordSet& words(int n);

  /// |words(n)|, computed without materialization where a counting path
  /// exists (full shifts, finite-type graphs).
  std::uint64_t complexity(int n);

  /// [P(1), ..., P(n_max)].
  std::vector<std::uint64_t> complexity_table(int n_max);

  bool contains(const Word& w);

  /// Least period of the orbit for PeriodicOrbit specs, nullopt otherwise.
  std::optional<int> periodic_hint() const;

 private:
  friend TransitivityResult transitivity_certificate(Language&);

  SubshiftSpec spec_;
  Limits limits_;
  std::unique_ptr<detail::LanguageBackend> backend_;
  std::map<int, WordSet> word_cache_;
  std::map<int, std::uint64_t> count_cache_;
};

// Convenience wrappers matching the one-shot call shape. Each constructs a
// transient Language, so prefer the class when making repeated queries.
WordSet enumerate_words(const SubshiftSpec& spec, int n, const Limits& limits = {});
std::uint64_t block_complexity(const SubshiftSpec& spec, int n, const Limits& limits = {});
std::vector<std::uint64_t> complexity_table(const SubshiftSpec& spec, int n_max,
                                            const Limits& limits = {});

struct TransitivityResult {
  enum class Verdict { Transitive, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  bool operator==(const TransitivityResult&) const = default;
};

/// Sound one-sided certificate: Transitive comes with a reason, everything
/// else is Unknown (never "intransitive").
TransitivityResult transitivity_certificate(Language& lang);

}  // namespace shiftlab
