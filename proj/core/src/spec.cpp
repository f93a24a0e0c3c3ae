#include "shiftlab/spec.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

// Exact check that (p + sqrt(q)) / r lies strictly between 0 and 1, with
// q > 0 nonsquare and r > 0. All comparisons stay in integers.
bool slope_in_unit_interval(long long p, long long q, long long r) {
  // p + sqrt(q) > 0  <=>  p >= 0 or q > p^2
  if (p < 0 && static_cast<__int128>(p) * p >= q) return false;
  // p + sqrt(q) < r  <=>  r - p > 0 and q < (r - p)^2
  if (r - p <= 0) return false;
  __int128 d = static_cast<__int128>(r) - p;
  return static_cast<__int128>(q) < d * d;
}

bool is_perfect_square(long long q) {
  if (q < 0) return true;  // rejected elsewhere
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(q)));
  for (long long t = std::max(0LL, s - 2); t <= s + 2; ++t)
    if (t * t == q) return true;
  return false;
}

}  // namespace

const Word* Substitution::image_of(Symbol s) const {
  for (const auto& [src, img] : rules)
    if (src == s) return &img;
  return nullptr;
}

const char* family_name(const SubshiftSpec& spec) {
  struct Visitor {
    const char* operator()(const FullShift&) const { return "full"; }
    const char* operator()(const ForbiddenWords&) const { return "sft"; }
    const char* operator()(const Substitution&) const { return "substitution"; }
    const char* operator()(const MechanicalWord&) const { return "sturmian"; }
    const char* operator()(const PeriodicOrbit&) const { return "periodic"; }
  };
  return std::visit(Visitor{}, spec.family);
}

int primitive_power(const Substitution& sub, const Alphabet& alphabet) {
  int d = alphabet.size();
  // reach[i][j]: symbol i occurs in the image of symbol j.
  std::vector<std::vector<bool>> reach(d, std::vector<bool>(d, false));
  for (const auto& [src, img] : sub.rules) {
    int j = alphabet.rank(src);
    for (char c : img) reach[alphabet.rank(c)][j] = true;
  }
  auto all_positive = [&](const std::vector<std::vector<bool>>& m) {
    for (const auto& row : m)
      for (bool b : row)
        if (!b) return false;
    return true;
  };
  std::vector<std::vector<bool>> power = reach;
  int bound = (d - 1) * (d - 1) + 1;  // Wielandt exponent
  for (int p = 1; p <= bound; ++p) {
    if (all_positive(power)) return p;
    std::vector<std::vector<bool>> next(d, std::vector<bool>(d, false));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        if (power[i][k])
          for (int j = 0; j < d; ++j)
            if (reach[k][j]) next[i][j] = true;
    power = std::move(next);
  }
  raise(ErrorKind::NonPrimitiveSubstitution,
        "incidence matrix never becomes entrywise positive");
}

int least_period(const Word& w) {
  int n = static_cast<int>(w.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

void validate_spec(const SubshiftSpec& spec) {
  const Alphabet& a = spec.alphabet;
  if (a.size() == 0) raise(ErrorKind::InvalidSpec, "alphabet must be nonempty");

  struct Visitor {
    const Alphabet& a;

    void operator()(const FullShift&) const {}

    void operator()(const ForbiddenWords& f) const {
      for (const Word& w : f.words) {
        if (w.empty()) raise(ErrorKind::InvalidSpec, "forbidden words must be nonempty");
        if (!a.contains_word(w))
          raise(ErrorKind::InvalidSpec, "forbidden word uses a symbol outside the alphabet");
      }
    }

    void operator()(const Substitution& s) const {
      if (s.rules.size() != static_cast<size_t>(a.size()))
        raise(ErrorKind::InvalidSpec, "substitution must map every alphabet symbol");
      std::set<Symbol> sources;
      for (const auto& [src, img] : s.rules) {
        if (!a.contains(src))
          raise(ErrorKind::InvalidSpec, "substitution source symbol outside the alphabet");
        if (!sources.insert(src).second)
          raise(ErrorKind::InvalidSpec, "duplicate substitution rule");
        if (img.empty()) raise(ErrorKind::InvalidSpec, "substitution images must be nonempty");
        if (!a.contains_word(img))
          raise(ErrorKind::InvalidSpec, "substitution image uses a symbol outside the alphabet");
      }
      if (!a.contains(s.seed))
        raise(ErrorKind::InvalidSpec, "substitution seed outside the alphabet");
      primitive_power(s, a);  // throws when non-primitive
    }

    void operator()(const MechanicalWord& m) const {
      if (a.symbols() != "01")
        raise(ErrorKind::InvalidSpec, "mechanical specs use the alphabet 01");
      if (m.r <= 0) raise(ErrorKind::InvalidSpec, "slope denominator r must be positive");
      if (m.q <= 0) raise(ErrorKind::InvalidSpec, "slope radicand q must be positive");
      if (is_perfect_square(m.q))
        raise(ErrorKind::InvalidSpec, "slope radicand q must be nonsquare");
      if (!slope_in_unit_interval(m.p, m.q, m.r))
        raise(ErrorKind::InvalidSpec, "slope (p + sqrt(q))/r must lie in (0, 1)");
    }

    void operator()(const PeriodicOrbit& o) const {
      if (o.word.empty()) raise(ErrorKind::InvalidSpec, "orbit word must be nonempty");
      if (!a.contains_word(o.word))
        raise(ErrorKind::InvalidSpec, "orbit word uses a symbol outside the alphabet");
    }
  };
  std::visit(Visitor{a}, spec.family);
}

SubshiftSpec make_full_shift(const std::string& alphabet) {
  return SubshiftSpec{Alphabet(alphabet), FullShift{}};
}

SubshiftSpec make_sft(const std::string& alphabet, std::vector<Word> forbidden) {
  return SubshiftSpec{Alphabet(alphabet), ForbiddenWords{std::move(forbidden)}};
}

SubshiftSpec make_substitution(std::vector<std::pair<Symbol, Word>> rules, Symbol seed) {
  std::sort(rules.begin(), rules.end());
  std::string symbols;
  for (const auto& [src, img] : rules) symbols.push_back(src);
  return SubshiftSpec{Alphabet(symbols), Substitution{std::move(rules), seed}};
}

SubshiftSpec make_mechanical(long long p, long long q, long long r) {
  return SubshiftSpec{Alphabet("01"), MechanicalWord{p, q, r}};
}

SubshiftSpec make_periodic_orbit(const Word& word) {
  std::string symbols(word);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return SubshiftSpec{Alphabet(symbols), PeriodicOrbit{word}};
}

}  // namespace shiftlab
