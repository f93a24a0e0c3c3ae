#include "shiftlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "shiftlab/automorphisms.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {

int resolve_aut_range(const Horizons& h, const SubshiftSpec& spec) {
  if (h.aut_range >= 0) return h.aut_range;
  if (std::holds_alternative<Substitution>(spec.family) && spec.alphabet.size() == 2) return 2;
  return 1;
}

int resolve_inverse_range(const Horizons& h, const SubshiftSpec& spec) {
  if (h.max_inverse_range >= 0) return h.max_inverse_range;
  return resolve_aut_range(h, spec) + 2;
}

int resolve_depth(const Horizons& h, const SubshiftSpec& spec, int range) {
  if (h.depth >= 0) return h.depth;
  return default_verification_depth(spec, range);
}

namespace {

[[noreturn]] void fail(int line, const std::string& message) {
  raise(ErrorKind::ConfigError, "line " + std::to_string(line) + ": " + message);
}

struct Scalar {
  bool is_int = false;
  long long num = 0;
  std::string str;
};

struct Value {
  enum class Kind { Int, Str, IntArray, StrArray, Table };
  Kind kind = Kind::Int;
  long long num = 0;
  std::string str;
  std::vector<long long> ints;
  std::vector<std::string> strs;
  std::vector<std::pair<std::string, Scalar>> table;
  int line = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, long long& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

// Splits "a, b, c" at top level (outside quotes); empties rejected.
std::vector<std::string_view> split_list(std::string_view body, int line) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  bool quoted = false;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '"') quoted = !quoted;
    if (i == body.size() || (body[i] == ',' && !quoted)) {
      std::string_view part = trim(body.substr(start, i - start));
      if (part.empty()) fail(line, "empty list entry");
      parts.push_back(part);
      start = i + 1;
    }
  }
  if (quoted) fail(line, "unterminated string");
  return parts;
}

Scalar parse_scalar(std::string_view s, int line) {
  Scalar out;
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    out.str = std::string(s.substr(1, s.size() - 2));
    if (out.str.find('"') != std::string::npos) fail(line, "stray quote inside string");
    return out;
  }
  if (parse_int(s, out.num)) {
    out.is_int = true;
    return out;
  }
  fail(line, "expected an integer or a quoted string: " + std::string(s));
}

Value parse_value(std::string_view s, int line) {
  Value v;
  v.line = line;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(line, "unterminated array");
    std::string_view body = trim(s.substr(1, s.size() - 2));
    if (body.empty()) {
      v.kind = Value::Kind::IntArray;
      return v;
    }
    bool first = true;
    for (std::string_view part : split_list(body, line)) {
      Scalar sc = parse_scalar(part, line);
      if (first) v.kind = sc.is_int ? Value::Kind::IntArray : Value::Kind::StrArray;
      first = false;
      if (sc.is_int != (v.kind == Value::Kind::IntArray)) fail(line, "mixed array entry types");
      if (sc.is_int)
        v.ints.push_back(sc.num);
      else
        v.strs.push_back(sc.str);
    }
    return v;
  }
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') fail(line, "unterminated inline table");
    v.kind = Value::Kind::Table;
    std::string_view body = trim(s.substr(1, s.size() - 2));
    if (body.empty()) return v;
    for (std::string_view part : split_list(body, line)) {
      size_t eq = std::string::npos;
      bool quoted = false;
      for (size_t i = 0; i < part.size(); ++i) {
        if (part[i] == '"') quoted = !quoted;
        if (part[i] == '=' && !quoted) {
          eq = i;
          break;
        }
      }
      if (eq == std::string::npos) fail(line, "inline table entry needs key = value");
      std::string_view key = trim(part.substr(0, eq));
      if (key.size() >= 2 && key.front() == '"' && key.back() == '"')
        key = key.substr(1, key.size() - 2);
      if (key.empty()) fail(line, "empty inline table key");
      for (const auto& [k, sc] : v.table)
        if (k == key) fail(line, "duplicate inline table key: " + std::string(key));
      v.table.push_back({std::string(key), parse_scalar(trim(part.substr(eq + 1)), line)});
    }
    return v;
  }
  Scalar sc = parse_scalar(s, line);
  if (sc.is_int) {
    v.kind = Value::Kind::Int;
    v.num = sc.num;
  } else {
    v.kind = Value::Kind::Str;
    v.str = sc.str;
  }
  return v;
}

struct Section {
  std::string name;  // empty for [limits] / [horizons]
  int line = 0;
  std::map<std::string, Value> keys;
};

long long take_int(Section& s, const std::string& key, long long fallback, bool* had = nullptr) {
  auto it = s.keys.find(key);
  if (it == s.keys.end()) {
    if (had) *had = false;
    return fallback;
  }
  if (it->second.kind != Value::Kind::Int) fail(it->second.line, key + " must be an integer");
  long long out = it->second.num;
  if (had) *had = true;
  s.keys.erase(it);
  return out;
}

std::string take_str(Section& s, const std::string& key, bool required, int section_line) {
  auto it = s.keys.find(key);
  if (it == s.keys.end()) {
    if (required) fail(section_line, "missing key: " + key);
    return {};
  }
  if (it->second.kind != Value::Kind::Str) fail(it->second.line, key + " must be a string");
  std::string out = it->second.str;
  s.keys.erase(it);
  return out;
}

void reject_leftovers(const Section& s, const std::string& where) {
  if (s.keys.empty()) return;
  const auto& [key, value] = *s.keys.begin();
  fail(value.line, "unknown key '" + key + "' in " + where);
}

void apply_horizons(Section& s, Horizons& h) {
  bool had = false;
  long long v;

  v = take_int(s, "n_max", h.n_max, &had);
  if (had && v < 1) fail(s.line, "n_max must be at least 1");
  h.n_max = static_cast<int>(v);

  v = take_int(s, "aut_range", h.aut_range, &had);
  if (had && v < 0) fail(s.line, "aut_range must be nonnegative");
  h.aut_range = static_cast<int>(v);

  v = take_int(s, "max_inverse_range", h.max_inverse_range, &had);
  if (had && v < 0) fail(s.line, "max_inverse_range must be nonnegative");
  h.max_inverse_range = static_cast<int>(v);

  v = take_int(s, "depth", h.depth, &had);
  if (had && v < 1) fail(s.line, "depth must be at least 1");
  h.depth = static_cast<int>(v);

  v = take_int(s, "max_power", h.max_power, &had);
  if (had && v < 1) fail(s.line, "max_power must be at least 1");
  h.max_power = static_cast<int>(v);

  v = take_int(s, "max_shift", h.max_shift, &had);
  if (had && v < 0) fail(s.line, "max_shift must be nonnegative");
  h.max_shift = v;

  auto it = s.keys.find("rect_sizes");
  if (it != s.keys.end()) {
    if (it->second.kind != Value::Kind::IntArray)
      fail(it->second.line, "rect_sizes must be an integer array");
    h.rect_sizes.clear();
    for (long long n : it->second.ints) {
      if (n < 1) fail(it->second.line, "rect sizes must be positive");
      h.rect_sizes.push_back(static_cast<int>(n));
    }
    s.keys.erase(it);
  }
}

SubshiftSpec build_spec(Section& s) {
  const std::string type = take_str(s, "type", true, s.line);
  if (type == "full") return make_full_shift(take_str(s, "alphabet", true, s.line));
  if (type == "sft") {
    std::string alphabet = take_str(s, "alphabet", true, s.line);
    auto it = s.keys.find("forbid");
    if (it == s.keys.end()) fail(s.line, "missing key: forbid");
    std::vector<Word> forbidden;
    if (it->second.kind == Value::Kind::StrArray)
      forbidden.assign(it->second.strs.begin(), it->second.strs.end());
    else if (!(it->second.kind == Value::Kind::IntArray && it->second.ints.empty()))
      fail(it->second.line, "forbid must be a string array");
    s.keys.erase(it);
    return make_sft(alphabet, std::move(forbidden));
  }
  if (type == "substitution") {
    auto it = s.keys.find("rules");
    if (it == s.keys.end()) fail(s.line, "missing key: rules");
    if (it->second.kind != Value::Kind::Table) fail(it->second.line, "rules must be an inline table");
    std::vector<std::pair<Symbol, Word>> rules;
    for (const auto& [key, sc] : it->second.table) {
      if (key.size() != 1) fail(it->second.line, "rule source must be a single symbol");
      if (sc.is_int) fail(it->second.line, "rule image must be a string");
      rules.push_back({key[0], sc.str});
    }
    s.keys.erase(it);
    std::string seed = take_str(s, "seed", true, s.line);
    if (seed.size() != 1) fail(s.line, "seed must be a single symbol");
    return make_substitution(std::move(rules), seed[0]);
  }
  if (type == "sturmian") {
    auto it = s.keys.find("alpha");
    if (it == s.keys.end()) fail(s.line, "missing key: alpha");
    if (it->second.kind != Value::Kind::Table) fail(it->second.line, "alpha must be an inline table");
    long long p = 0, q = 0, r = 1;
    bool saw_p = false, saw_q = false;
    for (const auto& [key, sc] : it->second.table) {
      if (!sc.is_int) fail(it->second.line, "alpha entries must be integers");
      if (key == "p") {
        p = sc.num;
        saw_p = true;
      } else if (key == "q") {
        q = sc.num;
        saw_q = true;
      } else if (key == "r") {
        r = sc.num;
      } else {
        fail(it->second.line, "unknown alpha entry: " + key);
      }
    }
    if (!saw_p || !saw_q) fail(it->second.line, "alpha needs p and q");
    s.keys.erase(it);
    return make_mechanical(p, q, r);
  }
  if (type == "periodic") return make_periodic_orbit(take_str(s, "word", true, s.line));
  fail(s.line, "unknown spec type: " + type);
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  Section limits_section, horizons_section;
  std::vector<Section> spec_sections;
  Section* current = nullptr;

  while (std::getline(in, raw)) {
    ++lineno;
    // cut comments outside strings
    bool quoted = false;
    size_t cut = raw.size();
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '"') quoted = !quoted;
      if (raw[i] == '#' && !quoted) {
        cut = i;
        break;
      }
    }
    std::string_view line = trim(std::string_view(raw).substr(0, cut));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "unterminated section header");
      std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name == "limits") {
        current = &limits_section;
      } else if (name == "horizons") {
        current = &horizons_section;
      } else if (name.starts_with("specs.")) {
        std::string_view spec_name = name.substr(6);
        if (spec_name.empty()) fail(lineno, "empty spec name");
        for (char c : spec_name)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
            fail(lineno, "spec names use letters, digits, '_' and '-'");
        for (const Section& s : spec_sections)
          if (s.name == spec_name) fail(lineno, "duplicate spec name: " + std::string(spec_name));
        spec_sections.push_back({std::string(spec_name), lineno, {}});
        current = &spec_sections.back();
      } else {
        fail(lineno, "unknown section: " + std::string(name));
      }
      current->line = lineno;
      continue;
    }

    size_t eq = std::string::npos;
    quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '=' && !quoted) {
        eq = i;
        break;
      }
    }
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    if (!current) fail(lineno, "key outside any section");
    std::string key(trim(line.substr(0, eq)));
    if (key.empty()) fail(lineno, "empty key");
    if (current->keys.count(key)) fail(lineno, "duplicate key: " + key);
    current->keys.emplace(key, parse_value(trim(line.substr(eq + 1)), lineno));
  }

  ExperimentConfig cfg;

  {
    long long v;
    bool had;
    v = take_int(limits_section, "max_words", static_cast<long long>(cfg.limits.max_words), &had);
    if (had && v < 1) fail(limits_section.line, "max_words must be at least 1");
    cfg.limits.max_words = static_cast<std::uint64_t>(v);
    v = take_int(limits_section, "max_word_length", cfg.limits.max_word_length, &had);
    if (had && v < 1) fail(limits_section.line, "max_word_length must be at least 1");
    cfg.limits.max_word_length = static_cast<int>(v);
    v = take_int(limits_section, "max_search_nodes",
                 static_cast<long long>(cfg.limits.max_search_nodes), &had);
    if (had && v < 1) fail(limits_section.line, "max_search_nodes must be at least 1");
    cfg.limits.max_search_nodes = static_cast<std::uint64_t>(v);
    reject_leftovers(limits_section, "[limits]");
  }

  apply_horizons(horizons_section, cfg.defaults);
  reject_leftovers(horizons_section, "[horizons]");

  for (Section& section : spec_sections) {
    SpecEntry entry;
    entry.name = section.name;
    entry.spec = build_spec(section);
    entry.horizons = cfg.defaults;
    apply_horizons(section, entry.horizons);
    entry.note = take_str(section, "note", false, section.line);
    reject_leftovers(section, "[specs." + section.name + "]");
    validate_spec(entry.spec);
    cfg.specs.push_back(std::move(entry));
  }
  std::sort(cfg.specs.begin(), cfg.specs.end(),
            [](const SpecEntry& a, const SpecEntry& b) { return a.name < b.name; });
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoFailure, "cannot read config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace shiftlab
