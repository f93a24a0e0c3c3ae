#include "shiftlab/alphabet.hpp"

#include "shiftlab/errors.hpp"

namespace shiftlab {

Alphabet::Alphabet() { ranks_.fill(-1); }

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  ranks_.fill(-1);
  if (symbols_.empty()) raise(ErrorKind::InvalidSpec, "alphabet must be nonempty");
  for (size_t i = 0; i < symbols_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (ranks_[c] >= 0) raise(ErrorKind::InvalidSpec, "alphabet symbols must be distinct");
    ranks_[c] = static_cast<short>(i);
  }
}

bool Alphabet::contains_word(std::string_view w) const {
  for (char c : w)
    if (!contains(c)) return false;
  return true;
}

bool Alphabet::word_less(std::string_view a, std::string_view b) const {
  size_t n = a.size() < b.size() ? a.size() : b.size();
  for (size_t i = 0; i < n; ++i) {
    int ra = rank(a[i]), rb = rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

}  // namespace shiftlab
