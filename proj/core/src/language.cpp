#include "shiftlab/language.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <utility>
#include <variant>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace detail {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    raise(ErrorKind::ResourceLimit, "word count exceeds the 64-bit range");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    raise(ErrorKind::ResourceLimit, "word count exceeds the 64-bit range");
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

class LanguageBackend {
 public:
  virtual ~LanguageBackend() = default;

  virtual WordSet enumerate(int n) = 0;
  virtual std::uint64_t count(int n) { return enumerate(n).count(); }
  virtual std::optional<bool> contains_fast(std::string_view) { return std::nullopt; }
  virtual std::optional<int> periodic_hint() const { return std::nullopt; }
  virtual TransitivityResult transitivity() = 0;
};

namespace {

// ---------------------------------------------------------------------------
// Full shift: counting is a closed form, enumeration is an odometer.

class FullBackend final : public LanguageBackend {
 public:
  FullBackend(const SubshiftSpec& spec, const Limits& limits)
      : alphabet_(spec.alphabet), limits_(limits) {}

  std::uint64_t count(int n) override {
    return checked_pow(static_cast<std::uint64_t>(alphabet_.size()), n);
  }

  WordSet enumerate(int n) override {
    std::uint64_t total = count(n);
    if (total > limits_.max_words)
      raise(ErrorKind::ResourceLimit, "enumeration would materialize " +
                                          std::to_string(total) + " words");
    WordSet out;
    out.length = n;
    out.words.reserve(static_cast<size_t>(total));
    Word w(static_cast<size_t>(n), alphabet_.symbol(0));
    std::vector<int> digit(static_cast<size_t>(n), 0);
    while (true) {
      out.words.push_back(w);
      int i = n - 1;
      while (i >= 0 && digit[i] == alphabet_.size() - 1) {
        digit[i] = 0;
        w[i] = alphabet_.symbol(0);
        --i;
      }
      if (i < 0) break;
      ++digit[i];
      w[i] = alphabet_.symbol(digit[i]);
    }
    return out;
  }

  std::optional<bool> contains_fast(std::string_view w) override {
    return alphabet_.contains_word(w);
  }

  TransitivityResult transitivity() override {
    return {TransitivityResult::Verdict::Transitive,
            "any two admissible words concatenate admissibly"};
  }

 private:
  Alphabet alphabet_;
  Limits limits_;
};

// ---------------------------------------------------------------------------
// Finite type: a memory graph over (m-1)-words, trimmed so every surviving
// vertex lies on a bi-infinite path. Counting is a path DP, enumeration a DFS
// that emits words already in canonical order.

class SftBackend final : public LanguageBackend {
 public:
  SftBackend(const SubshiftSpec& spec, const Limits& limits)
      : alphabet_(spec.alphabet),
        limits_(limits),
        forbidden_(std::get<ForbiddenWords>(spec.family).words) {}

  WordSet enumerate(int n) override {
    ensure_graph();
    WordSet out;
    out.length = n;
    if (n < vlen_) {
      std::set<Word, WordLess> seen{WordLess{&alphabet_}};
      for (int v : alive_)
        for (int j = 0; j + n <= vlen_; ++j)
          seen.insert(vertices_[v].substr(static_cast<size_t>(j), static_cast<size_t>(n)));
      out.words.assign(seen.begin(), seen.end());
      return out;
    }
    std::uint64_t total = count(n);
    if (total > limits_.max_words)
      raise(ErrorKind::ResourceLimit, "enumeration would materialize " +
                                          std::to_string(total) + " words");
    out.words.reserve(static_cast<size_t>(total));
    Word buf;
    for (int v : alive_) {
      buf = vertices_[v];
      extend(v, n - vlen_, buf, out.words);
    }
    return out;
  }

  std::uint64_t count(int n) override {
    ensure_graph();
    if (n < vlen_) return enumerate(n).count();
    std::vector<std::uint64_t> ways(vertices_.size(), 0);
    for (int v : alive_) ways[v] = 1;
    for (int step = 0; step < n - vlen_; ++step) {
      std::vector<std::uint64_t> next(vertices_.size(), 0);
      for (int u : alive_)
        if (ways[u])
          for (const auto& [v, sym] : edges_[u])
            next[v] = checked_add(next[v], ways[u]);
      ways = std::move(next);
    }
    std::uint64_t total = 0;
    for (int v : alive_) total = checked_add(total, ways[v]);
    return total;
  }

  std::optional<bool> contains_fast(std::string_view w) override {
    ensure_graph();
    if (static_cast<int>(w.size()) < vlen_) {
      for (int v : alive_)
        if (vertices_[v].find(w) != Word::npos) return true;
      return false;
    }
    int cur = vertex_index(w.substr(0, static_cast<size_t>(vlen_)));
    if (cur < 0 || !alive_mask_[cur]) return false;
    for (size_t i = static_cast<size_t>(vlen_); i < w.size(); ++i) {
      int next = -1;
      for (const auto& [v, sym] : edges_[cur])
        if (sym == w[i]) {
          next = v;
          break;
        }
      if (next < 0) return false;
      cur = next;
    }
    return true;
  }

  TransitivityResult transitivity() override {
    ensure_graph();
    if (strongly_connected())
      return {TransitivityResult::Verdict::Transitive,
              "memory graph on " + std::to_string(alive_.size()) +
                  " vertices is strongly connected"};
    return {TransitivityResult::Verdict::Unknown,
            "memory graph is not strongly connected"};
  }

 private:
  void ensure_graph() {
    if (built_) return;
    int flen = 0;
    for (const Word& f : forbidden_) flen = std::max(flen, static_cast<int>(f.size()));
    vlen_ = std::max(flen - 1, 1);

    std::uint64_t candidates = checked_pow(static_cast<std::uint64_t>(alphabet_.size()), vlen_);
    if (candidates > limits_.max_words)
      raise(ErrorKind::ResourceLimit, "memory graph needs " + std::to_string(candidates) +
                                          " candidate vertices");
    Word w(static_cast<size_t>(vlen_), alphabet_.symbol(0));
    std::vector<int> digit(static_cast<size_t>(vlen_), 0);
    while (true) {
      if (!contains_forbidden(w)) vertices_.push_back(w);
      int i = vlen_ - 1;
      while (i >= 0 && digit[i] == alphabet_.size() - 1) {
        digit[i] = 0;
        w[i] = alphabet_.symbol(0);
        --i;
      }
      if (i < 0) break;
      ++digit[i];
      w[i] = alphabet_.symbol(digit[i]);
    }

    const size_t V = vertices_.size();
    edges_.assign(V, {});
    std::vector<std::vector<int>> inputs(V);
    std::vector<int> out_deg(V, 0), in_deg(V, 0);
    for (size_t u = 0; u < V; ++u) {
      for (int r = 0; r < alphabet_.size(); ++r) {
        Symbol c = alphabet_.symbol(r);
        Word step = vertices_[u] + c;
        if (ends_with_forbidden(step)) continue;
        int v = vertex_index(std::string_view(step).substr(1));
        edges_[u].push_back({v, c});
        inputs[v].push_back(static_cast<int>(u));
        ++out_deg[u];
        ++in_deg[v];
      }
    }

    // Iteratively drop vertices that cannot sit on a bi-infinite path.
    std::vector<char> dead(V, 0);
    std::deque<int> queue;
    for (size_t v = 0; v < V; ++v)
      if (out_deg[v] == 0 || in_deg[v] == 0) {
        dead[v] = 1;
        queue.push_back(static_cast<int>(v));
      }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const auto& [t, sym] : edges_[v])
        if (!dead[t] && --in_deg[t] == 0) {
          dead[t] = 1;
          queue.push_back(t);
        }
      for (int s : inputs[v])
        if (!dead[s] && --out_deg[s] == 0) {
          dead[s] = 1;
          queue.push_back(s);
        }
    }

    alive_mask_.assign(V, 0);
    for (size_t v = 0; v < V; ++v)
      if (!dead[v]) {
        alive_mask_[v] = 1;
        alive_.push_back(static_cast<int>(v));
      }
    if (alive_.empty())
      raise(ErrorKind::EmptyLanguage, "forbidden words leave no bi-infinite sequence");
    for (size_t u = 0; u < V; ++u) {
      std::erase_if(edges_[u], [&](const auto& e) { return !alive_mask_[e.first]; });
      if (!alive_mask_[u]) edges_[u].clear();
    }
    built_ = true;
  }

  bool contains_forbidden(const Word& w) const {
    for (const Word& f : forbidden_)
      if (w.find(f) != Word::npos) return true;
    return false;
  }

  // w extends an admissible word by one symbol, so a fresh violation must be
  // a suffix.
  bool ends_with_forbidden(const Word& w) const {
    std::string_view view(w);
    for (const Word& f : forbidden_)
      if (f.size() <= view.size() && view.ends_with(f)) return true;
    return false;
  }

  int vertex_index(std::string_view w) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w, WordLess{&alphabet_});
    if (it == vertices_.end() || std::string_view(*it) != w) return -1;
    return static_cast<int>(it - vertices_.begin());
  }

  void extend(int u, int remaining, Word& buf, std::vector<Word>& out) const {
    if (remaining == 0) {
      out.push_back(buf);
      return;
    }
    for (const auto& [v, sym] : edges_[u]) {
      buf.push_back(sym);
      extend(v, remaining - 1, buf, out);
      buf.pop_back();
    }
  }

  bool strongly_connected() const {
    auto reach = [&](bool forward) {
      std::vector<char> seen(vertices_.size(), 0);
      std::deque<int> queue{alive_.front()};
      seen[alive_.front()] = 1;
      size_t found = 1;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (forward) {
          for (const auto& [v, sym] : edges_[u])
            if (!seen[v]) {
              seen[v] = 1;
              ++found;
              queue.push_back(v);
            }
        } else {
          for (int s : alive_)
            if (!seen[s])
              for (const auto& [v, sym] : edges_[s])
                if (v == u) {
                  seen[s] = 1;
                  ++found;
                  queue.push_back(s);
                  break;
                }
        }
      }
      return found == alive_.size();
    };
    return reach(true) && reach(false);
  }

  Alphabet alphabet_;
  Limits limits_;
  std::vector<Word> forbidden_;
  bool built_ = false;
  int vlen_ = 1;
  std::vector<Word> vertices_;
  std::vector<std::vector<std::pair<int, Symbol>>> edges_;
  std::vector<char> alive_mask_;
  std::vector<int> alive_;
};

// ---------------------------------------------------------------------------
// Primitive substitution: exact enumeration by desubstitution. The admissible
// 2-blocks are the closure of the seed image's 2-blocks under
// uv -> 2-blocks of rho(u) rho(v), where rho is the substitution raised to
// its primitive power. Words of length n are then read off inside images
// rho^K(u) rho^K(v) once every image is long enough to cover any n-window
// with two adjacent blocks.

class SubstitutionBackend final : public LanguageBackend {
 public:
  SubstitutionBackend(const SubshiftSpec& spec, const Limits& limits)
      : alphabet_(spec.alphabet),
        limits_(limits),
        sub_(std::get<Substitution>(spec.family)) {}

  WordSet enumerate(int n) override {
    prepare();
    WordSet out;
    out.length = n;
    if (alphabet_.size() == 1) {
      out.words.push_back(Word(static_cast<size_t>(n), alphabet_.symbol(0)));
      return out;
    }

    std::vector<Word> img(static_cast<size_t>(alphabet_.size()));
    for (int r = 0; r < alphabet_.size(); ++r) img[r] = Word(1, alphabet_.symbol(r));
    const size_t want = static_cast<size_t>(std::max(n - 1, 1));
    while (min_length(img) < want) {
      for (Word& w : img) w = apply_rho(w);
      if (max_length(img) > kImageCap)
        raise(ErrorKind::ResourceLimit, "substitution images exceed the expansion cap");
    }

    std::set<Word, WordLess> seen{WordLess{&alphabet_}};
    for (const Word& uv : two_blocks_) {
      Word s = img[alphabet_.rank(uv[0])] + img[alphabet_.rank(uv[1])];
      for (size_t j = 0; j + static_cast<size_t>(n) <= s.size(); ++j) {
        seen.insert(s.substr(j, static_cast<size_t>(n)));
        if (seen.size() > limits_.max_words)
          raise(ErrorKind::ResourceLimit, "enumeration exceeds the word cap");
      }
    }
    out.words.assign(seen.begin(), seen.end());
    return out;
  }

  TransitivityResult transitivity() override {
    return {TransitivityResult::Verdict::Transitive,
            "primitive substitution shifts are minimal"};
  }

 private:
  static constexpr size_t kImageCap = 4'000'000;

  void prepare() {
    if (prepared_) return;
    const int d = alphabet_.size();
    tau_.resize(static_cast<size_t>(d));
    for (const auto& [src, image] : sub_.rules) tau_[alphabet_.rank(src)] = image;
    if (d == 1) {
      prepared_ = true;
      return;
    }

    int p = primitive_power(sub_, alphabet_);
    rho_ = tau_;
    for (int i = 1; i < p; ++i)
      for (Word& w : rho_) w = apply_tau(w);

    std::set<Word, WordLess> blocks{WordLess{&alphabet_}};
    const Word& base = rho_[alphabet_.rank(sub_.seed)];
    for (size_t j = 0; j + 2 <= base.size(); ++j) blocks.insert(base.substr(j, 2));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Word> current(blocks.begin(), blocks.end());
      for (const Word& uv : current) {
        Word s = rho_[alphabet_.rank(uv[0])] + rho_[alphabet_.rank(uv[1])];
        for (size_t j = 0; j + 2 <= s.size(); ++j)
          if (blocks.insert(s.substr(j, 2)).second) grew = true;
      }
    }
    two_blocks_.assign(blocks.begin(), blocks.end());
    prepared_ = true;
  }

  Word apply_tau(const Word& w) const {
    Word out;
    for (Symbol c : w) out += tau_[alphabet_.rank(c)];
    return out;
  }

  Word apply_rho(const Word& w) const {
    Word out;
    for (Symbol c : w) out += rho_[alphabet_.rank(c)];
    return out;
  }

  static size_t min_length(const std::vector<Word>& img) {
    size_t m = img.front().size();
    for (const Word& w : img) m = std::min(m, w.size());
    return m;
  }

  static size_t max_length(const std::vector<Word>& img) {
    size_t m = 0;
    for (const Word& w : img) m = std::max(m, w.size());
    return m;
  }

  Alphabet alphabet_;
  Limits limits_;
  Substitution sub_;
  bool prepared_ = false;
  std::vector<Word> tau_;
  std::vector<Word> rho_;
  std::vector<Word> two_blocks_;
};

// ---------------------------------------------------------------------------
// Mechanical sequence with slope (p + sqrt(q)) / r. Sampling uses exact
// integer arithmetic: floor(i * slope) = floor_div(i*p + isqrt(q*i*i), r)
// because q*i*i is never a perfect square for i != 0.

class MechanicalBackend final : public LanguageBackend {
 public:
  MechanicalBackend(const SubshiftSpec& spec, const Limits& limits)
      : m_(std::get<MechanicalWord>(spec.family)), limits_(limits) {}

  WordSet enumerate(int n) override {
    const long long window = 64LL * n;
    Word sample;
    sample.reserve(static_cast<size_t>(window));
    long long prev = floor_term(0);
    for (long long i = 1; i <= window; ++i) {
      long long cur = floor_term(i);
      sample.push_back(static_cast<Symbol>('0' + (cur - prev)));
      prev = cur;
    }
    std::set<Word> seen;
    for (size_t j = 0; j + static_cast<size_t>(n) <= sample.size(); ++j)
      seen.insert(sample.substr(j, static_cast<size_t>(n)));
    if (seen.size() != static_cast<size_t>(n) + 1) {
      if (seen.size() < static_cast<size_t>(n) + 1)
        raise(ErrorKind::ResourceLimit,
              "sampling window of length " + std::to_string(window) +
                  " misses factors of length " + std::to_string(n));
      raise(ErrorKind::InvalidSpec, "slope does not generate a complexity n+1 language");
    }
    WordSet out;
    out.length = n;
    out.words.assign(seen.begin(), seen.end());
    return out;
  }

  TransitivityResult transitivity() override {
    return {TransitivityResult::Verdict::Transitive,
            "irrational rotation codings are minimal"};
  }

 private:
  long long floor_term(long long i) const {
    __int128 radicand = static_cast<__int128>(m_.q) * i * i;
    __int128 x = static_cast<__int128>(i) * m_.p + isqrt(radicand);
    __int128 quot = x / m_.r;
    if (x % m_.r != 0 && x < 0) --quot;
    return static_cast<long long>(quot);
  }

  static __int128 isqrt(__int128 v) {
    if (v <= 0) return 0;
    auto u = static_cast<unsigned __int128>(v);
    auto x = static_cast<unsigned __int128>(
        std::sqrt(static_cast<long double>(u)));
    while (x > 0 && x * x > u) --x;
    while ((x + 1) * (x + 1) <= u) ++x;
    return static_cast<__int128>(x);
  }

  MechanicalWord m_;
  Limits limits_;
};

// ---------------------------------------------------------------------------
// Single periodic orbit: the words of length n are the n-windows of the
// repeating cycle, and there are exactly p of them once n reaches the period.

class PeriodicBackend final : public LanguageBackend {
 public:
  PeriodicBackend(const SubshiftSpec& spec, const Limits& limits)
      : alphabet_(spec.alphabet), limits_(limits) {
    const Word& w = std::get<PeriodicOrbit>(spec.family).word;
    period_ = least_period(w);
    cycle_ = w.substr(0, static_cast<size_t>(period_));
  }

  WordSet enumerate(int n) override {
    std::set<Word, WordLess> seen{WordLess{&alphabet_}};
    for (int s = 0; s < period_; ++s) seen.insert(window(s, n));
    WordSet out;
    out.length = n;
    out.words.assign(seen.begin(), seen.end());
    return out;
  }

  std::uint64_t count(int n) override {
    if (n >= period_) return static_cast<std::uint64_t>(period_);
    return enumerate(n).count();
  }

  std::optional<bool> contains_fast(std::string_view w) override {
    for (int s = 0; s < period_; ++s) {
      bool match = true;
      for (size_t i = 0; i < w.size() && match; ++i)
        match = cycle_[(static_cast<size_t>(s) + i) % static_cast<size_t>(period_)] == w[i];
      if (match) return true;
    }
    return false;
  }

  std::optional<int> periodic_hint() const override { return period_; }

  TransitivityResult transitivity() override {
    return {TransitivityResult::Verdict::Transitive,
            "a single periodic orbit is one shift cycle"};
  }

 private:
  Word window(int start, int n) const {
    Word w;
    w.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      w.push_back(cycle_[static_cast<size_t>((start + i) % period_)]);
    return w;
  }

  Alphabet alphabet_;
  Limits limits_;
  int period_ = 1;
  Word cycle_;
};

}  // namespace

std::unique_ptr<LanguageBackend> make_backend(const SubshiftSpec& spec, const Limits& limits) {
  struct Visitor {
    const SubshiftSpec& spec;
    const Limits& limits;
    std::unique_ptr<LanguageBackend> operator()(const FullShift&) const {
      return std::make_unique<FullBackend>(spec, limits);
    }
    std::unique_ptr<LanguageBackend> operator()(const ForbiddenWords&) const {
      return std::make_unique<SftBackend>(spec, limits);
    }
    std::unique_ptr<LanguageBackend> operator()(const Substitution&) const {
      return std::make_unique<SubstitutionBackend>(spec, limits);
    }
    std::unique_ptr<LanguageBackend> operator()(const MechanicalWord&) const {
      return std::make_unique<MechanicalBackend>(spec, limits);
    }
    std::unique_ptr<LanguageBackend> operator()(const PeriodicOrbit&) const {
      return std::make_unique<PeriodicBackend>(spec, limits);
    }
  };
  return std::visit(Visitor{spec, limits}, spec.family);
}

}  // namespace detail

// ---------------------------------------------------------------------------

bool word_set_contains(const WordSet& set, const Alphabet& alphabet, std::string_view w) {
  auto it = std::lower_bound(set.words.begin(), set.words.end(), w, WordLess{&alphabet});
  return it != set.words.end() && std::string_view(*it) == w;
}

Language::Language(SubshiftSpec spec, Limits limits)
    : spec_(std::move(spec)), limits_(limits) {
  validate_spec(spec_);
  backend_ = detail::make_backend(spec_, limits_);
}

Language::~Language() = default;
Language::Language(Language&&) noexcept = default;
Language& Language::operator=(Language&&) noexcept = default;

const WordSet& Language::words(int n) {
  if (n < 1) raise(ErrorKind::InvalidSpec, "word length must be at least 1");
  if (n > limits_.max_word_length)
    raise(ErrorKind::ResourceLimit,
          "length " + std::to_string(n) + " exceeds the word length cap");
  auto it = word_cache_.find(n);
  if (it != word_cache_.end()) return it->second;
  WordSet set = backend_->enumerate(n);
  count_cache_[n] = set.count();
  return word_cache_.emplace(n, std::move(set)).first->second;
}

std::uint64_t Language::complexity(int n) {
  if (n < 1) raise(ErrorKind::InvalidSpec, "word length must be at least 1");
  auto it = count_cache_.find(n);
  if (it != count_cache_.end()) return it->second;
  if (n > limits_.max_word_length)
    raise(ErrorKind::ResourceLimit,
          "length " + std::to_string(n) + " exceeds the word length cap");
  std::uint64_t c = backend_->count(n);
  count_cache_[n] = c;
  return c;
}

std::vector<std::uint64_t> Language::complexity_table(int n_max) {
  if (n_max < 1) raise(ErrorKind::InvalidSpec, "table needs at least one entry");
  std::vector<std::uint64_t> table;
  table.reserve(static_cast<size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) table.push_back(complexity(n));
  return table;
}

bool Language::contains(const Word& w) {
  if (w.empty()) return true;
  if (!alphabet().contains_word(w)) return false;
  if (auto fast = backend_->contains_fast(w)) return *fast;
  const WordSet& set = words(static_cast<int>(w.size()));
  return word_set_contains(set, alphabet(), w);
}

std::optional<int> Language::periodic_hint() const { return backend_->periodic_hint(); }

WordSet enumerate_words(const SubshiftSpec& spec, int n, const Limits& limits) {
  Language lang(spec, limits);
  return lang.words(n);
}

std::uint64_t block_complexity(const SubshiftSpec& spec, int n, const Limits& limits) {
  Language lang(spec, limits);
  return lang.complexity(n);
}

std::vector<std::uint64_t> complexity_table(const SubshiftSpec& spec, int n_max,
                                            const Limits& limits) {
  Language lang(spec, limits);
  return lang.complexity_table(n_max);
}

TransitivityResult transitivity_certificate(Language& lang) {
  return lang.backend_->transitivity();
}

}  // namespace shiftlab
