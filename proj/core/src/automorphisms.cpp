#include "shiftlab/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <variant>

#include "shiftlab/errors.hpp"

namespace shiftlab {

int default_verification_depth(const SubshiftSpec& spec, int range) {
  const int n = range;
  struct Visitor {
    int n;
    int operator()(const FullShift&) const { return 4 * n + 4; }
    int operator()(const ForbiddenWords& f) const {
      int fmax = 0;
      for (const Word& w : f.words) fmax = std::max(fmax, static_cast<int>(w.size()));
      return std::max(4 * n + 4, fmax + 2 * n);
    }
    int operator()(const Substitution&) const { return 6 * n + 12; }
    int operator()(const MechanicalWord&) const { return 6 * n + 12; }
    int operator()(const PeriodicOrbit& o) const {
      return std::max(4 * n + 4, least_period(o.word) + 2 * n + 2);
    }
  };
  return std::visit(Visitor{n}, spec.family);
}

bool endomorphy_depth_exact(const SubshiftSpec& spec) {
  return std::holds_alternative<FullShift>(spec.family) ||
         std::holds_alternative<ForbiddenWords>(spec.family) ||
         std::holds_alternative<PeriodicOrbit>(spec.family);
}

bool is_endomorphism(Language& lang, const SlidingBlockCode& code, int depth) {
  require_binding(lang, code);
  const int window = 2 * code.range() + 1;
  if (depth < window)
    raise(ErrorKind::DepthTooSmall, "verification depth must reach one full window");
  if (std::holds_alternative<FullShift>(lang.spec().family)) return true;
  // The language is factorial, so admissibility of every image at the top
  // length covers all shorter lengths as well.
  for (const Word& w : lang.words(depth).words)
    if (!lang.contains(apply_code(code, w))) return false;
  return true;
}

InverseSearchResult find_inverse(Language& lang, const SlidingBlockCode& code,
                                 int max_inverse_range, int depth) {
  require_binding(lang, code);
  if (max_inverse_range < 0)
    raise(ErrorKind::InvalidCode, "inverse range bound must be nonnegative");
  if (!is_endomorphism(lang, code, depth))
    raise(ErrorKind::InvalidCode, "code is not an endomorphism at the verification depth");

  const int n = code.range();
  const SlidingBlockCode identity = identity_code(lang);
  std::string symbols;
  for (const Word& w : lang.words(1).words) symbols.push_back(w[0]);

  for (int nr = 0; nr <= max_inverse_range; ++nr) {
    const int span = 2 * (n + nr) + 1;

    // The inverse would have to recover the source center from the image
    // window, so every admissible source word forces one table entry.
    std::map<Word, std::pair<Symbol, const Word*>, WordLess> forced{WordLess{&lang.alphabet()}};
    bool conflict = false;
    for (const Word& w : lang.words(span).words) {
      Word key = apply_code(code, w);
      Symbol center = w[static_cast<size_t>(n + nr)];
      auto [it, inserted] = forced.try_emplace(key, center, &w);
      if (!inserted && it->second.first != center) {
        conflict = true;
        break;
      }
    }
    if (conflict) continue;

    const auto& domain = lang.words(2 * nr + 1).words;
    std::vector<std::pair<Word, Symbol>> rule;
    rule.reserve(domain.size());
    std::vector<size_t> open;
    for (size_t i = 0; i < domain.size(); ++i) {
      auto it = forced.find(domain[i]);
      if (it != forced.end()) {
        rule.push_back({domain[i], it->second.first});
      } else {
        open.push_back(i);
        rule.push_back({domain[i], symbols[0]});
      }
    }
    std::uint64_t combos = 1;
    for (size_t i = 0; i < open.size() && combos <= 4096; ++i)
      combos *= static_cast<std::uint64_t>(symbols.size());
    if (open.size() > 12 || combos > 4096) continue;

    const int inverse_depth = std::max(depth, default_verification_depth(lang.spec(), nr));
    std::vector<size_t> choice(open.size(), 0);
    while (true) {
      for (size_t i = 0; i < open.size(); ++i) rule[open[i]].second = symbols[choice[i]];
      SlidingBlockCode candidate(lang.spec(), nr, rule);
      if (is_endomorphism(lang, candidate, inverse_depth) &&
          codes_equal_on(lang, compose(lang, candidate, code), identity) &&
          codes_equal_on(lang, compose(lang, code, candidate), identity)) {
        AutomorphismCertificate cert{code, candidate, depth, endomorphy_depth_exact(lang.spec())};
        return {cert, std::nullopt};
      }
      size_t i = 0;
      while (i < choice.size() && choice[i] + 1 == symbols.size()) choice[i++] = 0;
      if (i == choice.size()) break;
      ++choice[i];
    }
  }

  // No inverse within the range bound. Collisions at the table levels only
  // rule out those radii, so probe the widest window the depth affords:
  // genuine non-injectivity keeps producing equal-image pairs with distinct
  // centers at every margin, while a merely undersized bound stops
  // colliding once the margin clears the true inverse radius.
  const int probe_margin = std::max(n + max_inverse_range, depth / 2);
  const int probe_span = 2 * probe_margin + 1;
  NonInvertibility fail;
  fail.kind = NonInvertibility::Kind::BoundExhausted;
  fail.checked_depth = probe_span;
  fail.max_range_tried = max_inverse_range;
  std::map<Word, std::pair<Symbol, const Word*>, WordLess> probe{WordLess{&lang.alphabet()}};
  for (const Word& w : lang.words(probe_span).words) {
    Word key = apply_code(code, w);
    Symbol center = w[static_cast<size_t>(probe_margin)];
    auto [it, inserted] = probe.try_emplace(key, center, &w);
    if (!inserted && it->second.first != center) {
      fail.kind = NonInvertibility::Kind::NonInjectiveEvidence;
      fail.collision = {{*it->second.second, w}};
      break;
    }
  }
  return {std::nullopt, fail};
}

namespace {

struct TriggerEntry {
  std::vector<int> window_index;  // canonical index of each sliding window
};

class RuleSearch {
 public:
  RuleSearch(Language& lang, int range, int max_inverse_range, int depth)
      : lang_(lang), range_(range), max_inverse_range_(max_inverse_range), depth_(depth) {}

  AutomorphismSearch run() {
    const auto& windows = lang_.words(2 * range_ + 1).words;
    for (const Word& w : lang_.words(1).words) symbols_.push_back(w[0]);
    build_triggers(windows);
    outputs_.assign(windows.size(), symbols_.front());
    assign(0, windows);
    return {std::move(certificates_), stats_};
  }

 private:
  // Buckets m-words by the assignment step that completes their last window,
  // so each is checked exactly once per branch and as early as possible. The
  // bucket total is capped; lengths past the cap fall back to a full
  // endomorphism check on completed assignments.
  void build_triggers(const std::vector<Word>& windows) {
    triggers_.assign(windows.size(), {});
    const int window = 2 * range_ + 1;
    std::uint64_t budget = 150'000;
    prune_depth_ = window;
    for (int m = window + 1; m <= depth_; ++m) {
      std::uint64_t count = lang_.complexity(m);
      if (count > budget) break;
      budget -= count;
      for (const Word& u : lang_.words(m).words) {
        TriggerEntry entry;
        int last = -1;
        std::string_view view(u);
        for (size_t j = 0; j + static_cast<size_t>(window) <= u.size(); ++j) {
          int idx = index_of(windows, view.substr(j, static_cast<size_t>(window)));
          entry.window_index.push_back(idx);
          last = std::max(last, idx);
        }
        triggers_[static_cast<size_t>(last)].push_back(std::move(entry));
      }
      prune_depth_ = m;
    }
  }

  int index_of(const std::vector<Word>& windows, std::string_view w) const {
    auto it = std::lower_bound(windows.begin(), windows.end(), w, WordLess{&lang_.alphabet()});
    return static_cast<int>(it - windows.begin());
  }

  void assign(size_t j, const std::vector<Word>& windows) {
    if (j == windows.size()) {
      finish(windows);
      return;
    }
    for (Symbol c : symbols_) {
      if (++stats_.nodes > lang_.limits().max_search_nodes)
        raise(ErrorKind::ResourceLimit,
              "rule search exceeded " + std::to_string(lang_.limits().max_search_nodes) +
                  " nodes (pruned " + std::to_string(stats_.pruned) + ", completed " +
                  std::to_string(stats_.completed) + ")");
      outputs_[j] = c;
      if (!admissible_so_far(j)) {
        ++stats_.pruned;
        continue;
      }
      assign(j + 1, windows);
    }
  }

  bool admissible_so_far(size_t j) {
    Word image;
    for (const TriggerEntry& entry : triggers_[j]) {
      image.clear();
      for (int idx : entry.window_index) image.push_back(outputs_[static_cast<size_t>(idx)]);
      if (!lang_.contains(image)) return false;
    }
    return true;
  }

  void finish(const std::vector<Word>& windows) {
    ++stats_.completed;
    std::vector<std::pair<Word, Symbol>> rule;
    rule.reserve(windows.size());
    for (size_t i = 0; i < windows.size(); ++i) rule.push_back({windows[i], outputs_[i]});
    SlidingBlockCode candidate(lang_.spec(), range_, std::move(rule));
    if (prune_depth_ < depth_ && !is_endomorphism(lang_, candidate, depth_)) return;
    ++stats_.endomorphisms;
    InverseSearchResult inverse = find_inverse(lang_, candidate, max_inverse_range_, depth_);
    if (inverse.certificate) certificates_.push_back(std::move(*inverse.certificate));
  }

  Language& lang_;
  int range_;
  int max_inverse_range_;
  int depth_;
  int prune_depth_ = 0;
  std::string symbols_;
  std::vector<Symbol> outputs_;
  std::vector<std::vector<TriggerEntry>> triggers_;
  std::vector<AutomorphismCertificate> certificates_;
  SearchStats stats_;
};

}  // namespace

AutomorphismSearch enumerate_automorphisms(Language& lang, int range, int max_inverse_range,
                                           int depth) {
  if (range < 0) raise(ErrorKind::InvalidCode, "search range must be nonnegative");
  if (depth < 2 * range + 1)
    raise(ErrorKind::DepthTooSmall, "verification depth must reach one full window");
  RuleSearch search(lang, range, max_inverse_range, depth);
  return search.run();
}

OrderModShiftResult order_mod_shift(Language& lang, const AutomorphismCertificate& cert,
                                    int max_power, long long max_shift) {
  require_binding(lang, cert.code);
  if (max_power < 1) raise(ErrorKind::InvalidCode, "power bound must be at least 1");
  OrderModShiftResult result;
  result.max_power = max_power;
  result.max_shift = max_shift;

  SlidingBlockCode power = cert.code;
  for (int b = 1; b <= max_power; ++b) {
    if (b > 1) power = compose(lang, cert.code, power);
    for (long long mag = 0; mag <= max_shift; ++mag) {
      for (long long a : {mag, -mag}) {
        // shift^a o code^b = identity exactly when code^b = shift^{-a}
        if (code_equals_shift(lang, power, -a)) {
          result.outcome = OrderModShiftResult::Outcome::Found;
          result.power = b;
          result.shift = a;
          return result;
        }
        if (mag == 0) break;
      }
    }
  }
  return result;
}

}  // namespace shiftlab
