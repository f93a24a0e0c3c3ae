#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "shiftlab/config.hpp"
#include "shiftlab/report.hpp"
#include "shiftlab/serialize.hpp"
#include "shiftlab/spec.hpp"

using namespace shiftlab;

namespace {

const char* kSmallConfig = R"(
# two specs, one override each

[limits]
max_words = 500000

[horizons]
n_max = 12
rect_sizes = [4, 8]

[specs.orbit]
type = "periodic"
word = "0011"
aut_range = 1
note = "four-cycle"

[specs.golden]
type = "sft"
alphabet = "01"
forbid = ["11"]
n_max = 10
aut_range = 1
)";

}  // namespace

TEST_CASE("config parsing fills defaults and overrides") {
  ExperimentConfig cfg = parse_config_text(kSmallConfig);
  CHECK(cfg.limits.max_words == 500000);
  CHECK(cfg.limits.max_word_length == 512);
  CHECK(cfg.defaults.n_max == 12);
  CHECK(cfg.defaults.rect_sizes == std::vector<int>{4, 8});
  REQUIRE(cfg.specs.size() == 2);
  CHECK(cfg.specs[0].name == "golden");  // sorted by name
  CHECK(cfg.specs[1].name == "orbit");
  CHECK(cfg.specs[0].horizons.n_max == 10);
  CHECK(cfg.specs[1].horizons.n_max == 12);
  CHECK(cfg.specs[1].note == "four-cycle");
  CHECK(family_name(cfg.specs[0].spec) == std::string("sft"));
  CHECK(family_name(cfg.specs[1].spec) == std::string("periodic"));
}

TEST_CASE("config parsing rejects malformed input") {
  auto kind = [](const std::string& text) {
    return oracle::error_kind_of([&] { parse_config_text(text); });
  };
  CHECK(kind("x = 1\n") == ErrorKind::ConfigError);  // key outside a section
  CHECK(kind("[specs.a]\ntype = \"full\"\nalphabet = \"01\"\n[specs.a]\ntype = \"full\"\nalphabet = \"01\"\n") ==
        ErrorKind::ConfigError);
  CHECK(kind("[horizons]\nn_max = 3\nn_max = 4\n") == ErrorKind::ConfigError);
  CHECK(kind("[horizons]\nn_max = \"ten\"\n") == ErrorKind::ConfigError);
  CHECK(kind("[horizons]\nn_max = 0\n") == ErrorKind::ConfigError);
  CHECK(kind("[horizons]\nwibble = 3\n") == ErrorKind::ConfigError);
  CHECK(kind("[specs.a]\ntype = \"full\"\nalphabet = \"01\"\nwibble = 3\n") ==
        ErrorKind::ConfigError);
  CHECK(kind("[specs.a]\ntype = \"torus\"\n") == ErrorKind::ConfigError);
  CHECK(kind("[specs.a]\ntype = \"sft\"\nalphabet = \"01\"\n") == ErrorKind::ConfigError);
  CHECK(kind("[specs.bad name]\ntype = \"full\"\nalphabet = \"01\"\n") ==
        ErrorKind::ConfigError);
  CHECK(kind("[mystery]\nn_max = 3\n") == ErrorKind::ConfigError);
  try {
    parse_config_text("[horizons]\nn_max = yes\n");
    FAIL("expected a ConfigError");
  } catch (const ShiftError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("spec-level validation escapes as its own kind") {
  CHECK(oracle::error_kind_of([] {
          parse_config_text("[specs.s]\ntype = \"sturmian\"\nalpha = { p = -1, q = 4, r = 2 }\n");
        }) == ErrorKind::InvalidSpec);
  CHECK(oracle::error_kind_of([] {
          parse_config_text(
              "[specs.s]\ntype = \"substitution\"\nrules = { \"0\" = \"01\", \"1\" = \"1\" }\nseed = \"0\"\n");
        }) == ErrorKind::NonPrimitiveSubstitution);
}

TEST_CASE("missing config file") {
  CHECK(oracle::error_kind_of([] { parse_config_file("/nonexistent/nowhere.toml"); }) ==
        ErrorKind::IoFailure);
}

TEST_CASE("horizon resolution") {
  Horizons h;
  SubshiftSpec fib = make_substitution({{'0', "01"}, {'1', "0"}}, '0');
  SubshiftSpec golden = make_sft("01", {"11"});
  CHECK(resolve_aut_range(h, fib) == 2);
  CHECK(resolve_aut_range(h, golden) == 1);
  CHECK(resolve_inverse_range(h, fib) == 4);
  CHECK(resolve_depth(h, golden, 1) == default_verification_depth(golden, 1));
  h.aut_range = 3;
  h.max_inverse_range = 7;
  h.depth = 30;
  CHECK(resolve_aut_range(h, fib) == 3);
  CHECK(resolve_inverse_range(h, fib) == 7);
  CHECK(resolve_depth(h, fib, 3) == 30);
}

TEST_CASE("spec serialization round trips") {
  for (const SubshiftSpec& spec :
       {make_full_shift("01"), make_sft("01", {"11", "0000"}),
        make_substitution({{'0', "01"}, {'1', "0"}}, '0'), make_mechanical(-1, 5, 2),
        make_periodic_orbit("00010011")}) {
    SubshiftSpec back = spec_from_json(spec_to_json(spec));
    CHECK(back == spec);
  }
  CHECK(oracle::error_kind_of([] { spec_from_json("{\"family\": \"torus\"}"); }) ==
        ErrorKind::ConfigError);
  CHECK(oracle::error_kind_of([] { spec_from_json("not json"); }) == ErrorKind::ConfigError);
}

TEST_CASE("code and certificate serialization round trips") {
  Language golden(make_sft("01", {"11"}));
  SlidingBlockCode sigma = shift_power_code(golden, 1);
  SlidingBlockCode back = code_from_json(golden, code_to_json(sigma));
  CHECK(back == sigma);
  CHECK(oracle::error_kind_of([&] {
          code_from_json(golden, "{\"range\": 0, \"rule\": {\"0\": \"00\", \"1\": \"1\"}}");
        }) == ErrorKind::MalformedTable);

  AutomorphismCertificate cert{sigma, shift_power_code(golden, -1), 8, true};
  AutomorphismCertificate cert_back = certificate_from_json(golden, certificate_to_json(cert));
  CHECK(cert_back == cert);
}

TEST_CASE("growth serialization carries the class name") {
  Language full(make_full_shift("01"));
  GrowthReport g = growth_report(full.complexity_table(16));
  std::string j = growth_report_to_json(g);
  CHECK(j.find("\"exponential\"") != std::string::npos);
  CHECK(j.find("entropy_estimate") != std::string::npos);
}

TEST_CASE("run_experiment produces a full periodic verdict") {
  ExperimentConfig cfg = parse_config_text(kSmallConfig);
  PeriodicityReport report = run_experiment(cfg);
  REQUIRE(report.specs.size() == 2);
  CHECK(report.verdict.all_periodic_mod_shift);
  CHECK(report.verdict.unresolved.empty());
  CHECK(report.verdict.max_power >= 1);
  for (const SpecRunReport& sr : report.specs) {
    CHECK(sr.errors.empty());
    CHECK(sr.growth.has_value());
    CHECK(sr.transitivity.has_value());
    CHECK_FALSE(sr.certificates.empty());
    CHECK(sr.orders.size() == sr.certificates.size());
    CHECK(sr.rect_checks.size() == sr.certificates.size() * sr.horizons.rect_sizes.size());
    for (const RectRow& row : sr.rect_checks) {
      CHECK(row.error.empty());
      CHECK(row.bound_holds);
    }
  }
}

TEST_CASE("empty spec list yields an empty successful report") {
  ExperimentConfig cfg;
  PeriodicityReport report = run_experiment(cfg);
  CHECK(report.specs.empty());
  CHECK(report.verdict.all_periodic_mod_shift);
  CHECK(report.verdict.unresolved.empty());
}

TEST_CASE("a failing spec never suppresses the others") {
  ExperimentConfig cfg;
  cfg.specs.push_back({"broken", make_sft("01", {"0", "1"}), Horizons{}, ""});
  cfg.specs.push_back({"golden", make_sft("01", {"11"}), Horizons{.n_max = 10, .aut_range = 1}, ""});
  PeriodicityReport report = run_experiment(cfg);
  REQUIRE(report.specs.size() == 2);
  CHECK_FALSE(report.specs[0].errors.empty());
  CHECK(report.specs[0].errors.front().find("EmptyLanguage") != std::string::npos);
  CHECK(report.specs[1].errors.empty());
  CHECK_FALSE(report.specs[1].certificates.empty());
  CHECK_FALSE(report.verdict.all_periodic_mod_shift);
  REQUIRE_FALSE(report.verdict.unresolved.empty());
  CHECK(report.verdict.unresolved.front().find("broken") != std::string::npos);
}

TEST_CASE("bound-exhausted orders leave the verdict unresolved") {
  ExperimentConfig cfg;
  cfg.specs.push_back(
      {"full", make_full_shift("01"),
       Horizons{.n_max = 10, .aut_range = 0, .max_power = 1, .rect_sizes = {4}}, ""});
  PeriodicityReport report = run_experiment(cfg);
  REQUIRE(report.specs.size() == 1);
  CHECK_FALSE(report.verdict.all_periodic_mod_shift);  // the swap needs power two
  CHECK_FALSE(report.verdict.unresolved.empty());
}

TEST_CASE("report json round trips byte for byte") {
  ExperimentConfig cfg = parse_config_text(kSmallConfig);
  PeriodicityReport report = run_experiment(cfg);
  const std::string j1 = report_to_json(report);
  PeriodicityReport back = report_from_json(j1);
  CHECK(report_to_json(back) == j1);
  CHECK(back.verdict == report.verdict);
  CHECK(oracle::error_kind_of([] { report_from_json("nope"); }) == ErrorKind::ConfigError);
}

TEST_CASE("text report spells out the conventions") {
  ExperimentConfig cfg = parse_config_text(kSmallConfig);
  PeriodicityReport report = run_experiment(cfg);
  const std::string text = report_to_text(report);
  CHECK(text.find("(shift x)(i) = x(i+1)") != std::string::npos);
  CHECK(text.find("period vector") != std::string::npos);
  CHECK(text.find("[golden]") != std::string::npos);
  CHECK(text.find("four-cycle") != std::string::npos);
  CHECK(text.find("order: b=1") != std::string::npos);

  ExperimentConfig fib_cfg = parse_config_text(
      "[specs.fib]\ntype = \"substitution\"\nrules = { \"0\" = \"01\", \"1\" = \"0\" }\nseed = \"0\"\nrect_sizes = [4]\n");
  const std::string fib_text = report_to_text(run_experiment(fib_cfg));
  CHECK(fib_text.find("verified to depth") != std::string::npos);
}

TEST_CASE("csv emitters") {
  Language full(make_full_shift("01"));
  CHECK(complexity_csv(full.complexity_table(3)) == "n,P\n1,2\n2,4\n3,8\n");
}

TEST_CASE("emit_report writes the requested files") {
  ExperimentConfig cfg = parse_config_text(kSmallConfig);
  PeriodicityReport report = run_experiment(cfg);
  const std::string dir =
      (std::filesystem::temp_directory_path() / "shiftlab_report_test").string();
  std::filesystem::remove_all(dir);
  std::vector<std::string> paths = emit_report(report, {"json", "text", "csv"}, dir);
  CHECK(paths.size() >= 4);  // report.json, report.txt, two complexity csvs
  for (const std::string& p : paths) CHECK(std::filesystem::exists(p));
  std::ifstream in(dir + "/report.json");
  std::string j((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(report_from_json(j).verdict == report.verdict);
  std::filesystem::remove_all(dir);

  CHECK(oracle::error_kind_of([&] { emit_report(report, {"yaml"}, dir); }) ==
        ErrorKind::ConfigError);
  CHECK(oracle::error_kind_of([&] { emit_report(report, {"json"}, "/dev/null/x"); }) ==
        ErrorKind::IoFailure);
}
