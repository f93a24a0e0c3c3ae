#include "shiftlab/serialize.hpp"

#include <algorithm>

#include "serialize_detail.hpp"
#include "shiftlab/block_code.hpp"

namespace shiftlab {

namespace detail {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ConfigError, std::string("json parse: ") + e.what());
  }
}

Json spec_json(const SubshiftSpec& spec) {
  Json j;
  j["family"] = family_name(spec);
  j["alphabet"] = spec.alphabet.symbols();
  struct Visitor {
    Json& j;
    void operator()(const FullShift&) const {}
    void operator()(const ForbiddenWords& f) const { j["forbid"] = f.words; }
    void operator()(const Substitution& s) const {
      Json rules = Json::object();
      for (const auto& [src, image] : s.rules) rules[std::string(1, src)] = image;
      j["rules"] = std::move(rules);
      j["seed"] = std::string(1, s.seed);
    }
    void operator()(const MechanicalWord& m) const {
      j["slope"] = Json{{"p", m.p}, {"q", m.q}, {"r", m.r}};
    }
    void operator()(const PeriodicOrbit& o) const { j["word"] = o.word; }
  };
  std::visit(Visitor{j}, spec.family);
  return j;
}

SubshiftSpec spec_from(const Json& j) {
  SubshiftSpec spec;
  try {
    const std::string family = j.at("family").get<std::string>();
    spec.alphabet = Alphabet(j.at("alphabet").get<std::string>());
    if (family == "full") {
      spec.family = FullShift{};
    } else if (family == "sft") {
      spec.family = ForbiddenWords{j.at("forbid").get<std::vector<Word>>()};
    } else if (family == "substitution") {
      Substitution sub;
      for (const auto& [key, value] : j.at("rules").items()) {
        if (key.size() != 1)
          raise(ErrorKind::ConfigError, "rule source must be a single symbol");
        sub.rules.push_back({key[0], value.get<Word>()});
      }
      const std::string seed = j.at("seed").get<std::string>();
      if (seed.size() != 1) raise(ErrorKind::ConfigError, "seed must be a single symbol");
      sub.seed = seed[0];
      std::sort(sub.rules.begin(), sub.rules.end());
      spec.family = std::move(sub);
    } else if (family == "sturmian") {
      const Json& slope = j.at("slope");
      spec.family = MechanicalWord{slope.at("p").get<long long>(),
                                   slope.at("q").get<long long>(),
                                   slope.at("r").get<long long>()};
    } else if (family == "periodic") {
      spec.family = PeriodicOrbit{j.at("word").get<Word>()};
    } else {
      raise(ErrorKind::ConfigError, "unknown spec family: " + family);
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ConfigError, std::string("spec json: ") + e.what());
  }
  validate_spec(spec);
  return spec;
}

Json code_json(const SlidingBlockCode& code) {
  Json rule = Json::object();
  for (const auto& [w, out] : code.rule()) rule[w] = std::string(1, out);
  return Json{{"range", code.range()}, {"rule", std::move(rule)}};
}

SlidingBlockCode code_from(Language& lang, const Json& j) {
  int range = 0;
  std::vector<std::pair<Word, Symbol>> rule;
  try {
    range = j.at("range").get<int>();
    for (const auto& [window, value] : j.at("rule").items()) {
      const std::string out = value.get<std::string>();
      if (out.size() != 1)
        raise(ErrorKind::MalformedTable, "rule output must be a single symbol");
      rule.push_back({window, out[0]});
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ConfigError, std::string("code json: ") + e.what());
  }
  SlidingBlockCode code(lang.spec(), range, std::move(rule));
  validate_code(lang, code);
  return code;
}

Json certificate_json(const AutomorphismCertificate& cert) {
  return Json{{"code", code_json(cert.code)},
              {"inverse", code_json(cert.inverse)},
              {"verification_depth", cert.verification_depth},
              {"endomorphy_exact", cert.endomorphy_exact}};
}

AutomorphismCertificate certificate_from(Language& lang, const Json& j) {
  AutomorphismCertificate cert;
  try {
    cert.code = code_from(lang, j.at("code"));
    cert.inverse = code_from(lang, j.at("inverse"));
    cert.verification_depth = j.at("verification_depth").get<int>();
    cert.endomorphy_exact = j.at("endomorphy_exact").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ConfigError, std::string("certificate json: ") + e.what());
  }
  return cert;
}

Json growth_json(const GrowthReport& report) {
  return Json{{"table", report.table},
              {"entropy_estimate", report.entropy_estimate},
              {"upper_poly_estimate", report.upper_poly_estimate},
              {"lower_poly_estimate", report.lower_poly_estimate},
              {"growth_class", to_string(report.growth_class)},
              {"subquadratic_proxy", report.subquadratic_proxy}};
}

GrowthReport growth_from(const Json& j) {
  GrowthReport report;
  try {
    report.table = j.at("table").get<std::vector<std::uint64_t>>();
    report.entropy_estimate = j.at("entropy_estimate").get<double>();
    report.upper_poly_estimate = j.at("upper_poly_estimate").get<double>();
    report.lower_poly_estimate = j.at("lower_poly_estimate").get<double>();
    report.growth_class = growth_class_from_string(j.at("growth_class").get<std::string>());
    report.subquadratic_proxy = j.at("subquadratic_proxy").get<double>();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ConfigError, std::string("growth json: ") + e.what());
  }
  return report;
}

}  // namespace detail

std::string spec_to_json(const SubshiftSpec& spec) { return detail::spec_json(spec).dump(2); }

SubshiftSpec spec_from_json(const std::string& text) {
  return detail::spec_from(detail::parse_json(text));
}

std::string code_to_json(const SlidingBlockCode& code) { return detail::code_json(code).dump(2); }

SlidingBlockCode code_from_json(Language& lang, const std::string& text) {
  return detail::code_from(lang, detail::parse_json(text));
}

std::string certificate_to_json(const AutomorphismCertificate& cert) {
  return detail::certificate_json(cert).dump(2);
}

AutomorphismCertificate certificate_from_json(Language& lang, const std::string& text) {
  return detail::certificate_from(lang, detail::parse_json(text));
}

std::string growth_report_to_json(const GrowthReport& report) {
  return detail::growth_json(report).dump(2);
}

}  // namespace shiftlab
