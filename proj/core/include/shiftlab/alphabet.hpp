#pragma once

#include <array>
#include <string>
#include <string_view>

namespace shiftlab {

using Symbol = char;
using Word = std::string;

/// Ordered finite symbol set. The declaration order is total and fixed; it
/// induces the canonical (lexicographic) order used everywhere a WordSet or a
/// rule table is sorted.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbols() const { return symbols_; }
  bool contains(Symbol s) const { return rank(s) >= 0; }
  int rank(Symbol s) const { return ranks_[static_cast<unsigned char>(s)]; }
  Symbol symbol(int rank) const { return symbols_[static_cast<size_t>(rank)]; }

  bool contains_word(std::string_view w) const;
  bool word_less(std::string_view a, std::string_view b) const;

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<short, 256> ranks_;
};

/// Comparator carrying the alphabet so word containers sort canonically even
/// when the symbol order differs from raw char order.
struct WordLess {
  const Alphabet* alphabet;
  bool operator()(std::string_view a, std::string_view b) const {
    return alphabet->word_less(a, b);
  }
};

}  // namespace shiftlab
