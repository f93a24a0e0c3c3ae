#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shiftlab/automorphisms.hpp"
#include "shiftlab/config.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/growth.hpp"
#include "shiftlab/rectangle.hpp"
#include "shiftlab/report.hpp"
#include "shiftlab/serialize.hpp"

namespace {

using shiftlab::ErrorKind;

const shiftlab::SpecEntry& find_spec(const shiftlab::ExperimentConfig& config,
                                     const std::string& name) {
  for (const shiftlab::SpecEntry& entry : config.specs)
    if (entry.name == name) return entry;
  shiftlab::raise(ErrorKind::ConfigError, "config has no spec named " + name);
}

int resolved_n_max(const shiftlab::SpecEntry& entry, int override_n) {
  return override_n > 0 ? override_n : entry.horizons.n_max;
}

struct SearchSetup {
  shiftlab::Language lang;
  int range;
  int max_inverse_range;
  int depth;
};

SearchSetup make_setup(const shiftlab::ExperimentConfig& config, const shiftlab::SpecEntry& entry,
                       int range_opt, int inverse_opt, int depth_opt) {
  shiftlab::Horizons h = entry.horizons;
  if (range_opt >= 0) h.aut_range = range_opt;
  if (inverse_opt >= 0) h.max_inverse_range = inverse_opt;
  if (depth_opt > 0) h.depth = depth_opt;
  const int range = shiftlab::resolve_aut_range(h, entry.spec);
  return {shiftlab::Language(entry.spec, config.limits), range,
          shiftlab::resolve_inverse_range(h, entry.spec),
          shiftlab::resolve_depth(h, entry.spec, range)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subshift languages, block codes and automorphism checks"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "experiment config file")->required();

  std::string spec_name;
  int opt_n = 0, opt_n_max = 0, opt_width = 0, opt_height = 0;
  int opt_range = -1, opt_inverse = -1, opt_depth = 0, opt_max_power = 0;
  long long opt_max_shift = -1;
  int opt_shift = 1;
  std::string code_path, out_dir;
  std::vector<std::string> formats;

  CLI::App* words = app.add_subcommand("words", "list the admissible words of one length");
  words->add_option("--spec", spec_name, "spec name from the config")->required();
  words->add_option("-n,--length", opt_n, "word length")->required();

  CLI::App* complexity = app.add_subcommand("complexity", "print the complexity table as CSV");
  complexity->add_option("--spec", spec_name, "spec name from the config")->required();
  complexity->add_option("--n-max", opt_n_max, "table length (default: config horizon)");

  CLI::App* classify = app.add_subcommand("classify-growth", "fit the growth class, JSON output");
  classify->add_option("--spec", spec_name, "spec name from the config")->required();
  classify->add_option("--n-max", opt_n_max, "table length (default: config horizon)");

  CLI::App* autos = app.add_subcommand("automorphisms", "search invertible codes, JSON output");
  autos->add_option("--spec", spec_name, "spec name from the config")->required();
  autos->add_option("--range", opt_range, "code radius (default: config horizon)");
  autos->add_option("--max-inverse-range", opt_inverse, "inverse radius bound");
  autos->add_option("--depth", opt_depth, "image verification depth");

  CLI::App* order = app.add_subcommand("order-mod-shift",
                                       "per-certificate order search, CSV output");
  order->add_option("--spec", spec_name, "spec name from the config")->required();
  order->add_option("--range", opt_range, "code radius (default: config horizon)");
  order->add_option("--max-inverse-range", opt_inverse, "inverse radius bound");
  order->add_option("--depth", opt_depth, "image verification depth");
  order->add_option("--max-power", opt_max_power, "largest power tried");
  order->add_option("--max-shift", opt_max_shift, "largest |shift| tried");

  CLI::App* rect = app.add_subcommand("rect-complexity",
                                      "count iterate windows for one code and size");
  rect->add_option("--spec", spec_name, "spec name from the config")->required();
  rect->add_option("-n,--width", opt_width, "window width")->required();
  rect->add_option("-k,--height", opt_height, "window height")->required();
  rect->add_option("--shift", opt_shift, "use this shift power as the code (default 1)");
  rect->add_option("--code", code_path, "JSON file with the code to use instead");

  CLI::App* run = app.add_subcommand("run", "full pipeline over every spec in the config");
  run->add_option("--format", formats, "report formats: json, text, csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  run->add_option("--out", out_dir, "output directory (default: print to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    const shiftlab::ExperimentConfig config = shiftlab::parse_config_file(config_path);

    if (words->parsed()) {
      const shiftlab::SpecEntry& entry = find_spec(config, spec_name);
      shiftlab::Language lang(entry.spec, config.limits);
      for (const shiftlab::Word& w : lang.words(opt_n).words) std::cout << w << "\n";
    } else if (complexity->parsed()) {
      const shiftlab::SpecEntry& entry = find_spec(config, spec_name);
      shiftlab::Language lang(entry.spec, config.limits);
      std::cout << shiftlab::complexity_csv(
          lang.complexity_table(resolved_n_max(entry, opt_n_max)));
    } else if (classify->parsed()) {
      const shiftlab::SpecEntry& entry = find_spec(config, spec_name);
      shiftlab::Language lang(entry.spec, config.limits);
      const auto table = lang.complexity_table(resolved_n_max(entry, opt_n_max));
      std::cout << shiftlab::growth_report_to_json(shiftlab::growth_report(table)) << "\n";
    } else if (autos->parsed()) {
      const shiftlab::SpecEntry& entry = find_spec(config, spec_name);
      SearchSetup setup = make_setup(config, entry, opt_range, opt_inverse, opt_depth);
      shiftlab::AutomorphismSearch found = shiftlab::enumerate_automorphisms(
          setup.lang, setup.range, setup.max_inverse_range, setup.depth);
      nlohmann::ordered_json j;
      j["certificates"] = nlohmann::ordered_json::array();
      for (const shiftlab::AutomorphismCertificate& c : found.certificates)
        j["certificates"].push_back(
            nlohmann::ordered_json::parse(shiftlab::certificate_to_json(c)));
      j["stats"] = {{"nodes", found.stats.nodes},
                    {"pruned", found.stats.pruned},
                    {"completed", found.stats.completed},
                    {"endomorphisms", found.stats.endomorphisms}};
      std::cout << j.dump(2) << "\n";
    } else if (order->parsed()) {
      const shiftlab::SpecEntry& entry = find_spec(config, spec_name);
      SearchSetup setup = make_setup(config, entry, opt_range, opt_inverse, opt_depth);
      const int max_power = opt_max_power > 0 ? opt_max_power : entry.horizons.max_power;
      const long long max_shift = opt_max_shift >= 0 ? opt_max_shift : entry.horizons.max_shift;
      shiftlab::AutomorphismSearch found = shiftlab::enumerate_automorphisms(
          setup.lang, setup.range, setup.max_inverse_range, setup.depth);
      std::cout << "code,outcome,power,shift\n";
      for (size_t i = 0; i < found.certificates.size(); ++i) {
        shiftlab::OrderModShiftResult r = shiftlab::order_mod_shift(
            setup.lang, found.certificates[i], max_power, max_shift);
        if (r.outcome == shiftlab::OrderModShiftResult::Outcome::Found)
          std::cout << i << ",found," << r.power << "," << r.shift << "\n";
        else
          std::cout << i << ",bound_exhausted,,\n";
      }
    } else if (rect->parsed()) {
      const shiftlab::SpecEntry& entry = find_spec(config, spec_name);
      shiftlab::Language lang(entry.spec, config.limits);
      shiftlab::SlidingBlockCode code;
      if (!code_path.empty()) {
        std::ifstream in(code_path);
        if (!in) shiftlab::raise(ErrorKind::IoFailure, "cannot read code file: " + code_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        code = shiftlab::code_from_json(lang, buffer.str());
      } else {
        code = shiftlab::shift_power_code(lang, opt_shift);
      }
      const std::uint64_t count = shiftlab::rect_complexity(lang, code, opt_width, opt_height);
      const std::uint64_t bound = shiftlab::seed_word_bound(lang, code, opt_width, opt_height);
      const auto cells =
          static_cast<std::uint64_t>(opt_width) * static_cast<std::uint64_t>(opt_height);
      std::cout << opt_width << "," << opt_height << "," << count << "," << bound << ","
                << (count <= cells / 16 ? "triggered" : "not_triggered") << "\n";
    } else if (run->parsed()) {
      shiftlab::PeriodicityReport report = shiftlab::run_experiment(config);
      if (out_dir.empty()) {
        if (formats.size() > 1)
          shiftlab::raise(ErrorKind::ConfigError,
                          "multiple formats need --out to write files");
        const std::string format = formats.empty() ? "text" : formats.front();
        if (format == "json")
          std::cout << shiftlab::report_to_json(report) << "\n";
        else if (format == "csv")
          for (const shiftlab::SpecRunReport& sr : report.specs)
            std::cout << shiftlab::rect_csv(sr);
        else
          std::cout << shiftlab::report_to_text(report);
      } else {
        std::set<std::string> wanted(formats.begin(), formats.end());
        if (wanted.empty()) wanted = {"json", "text"};
        for (const std::string& path : shiftlab::emit_report(report, wanted, out_dir))
          std::cout << path << "\n";
      }
    }
  } catch (const shiftlab::ShiftError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ConfigError ? 3 : 2;
  }
  return 0;
}
