#include "shiftlab/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "serialize_detail.hpp"
#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

using detail::Json;

std::string phase_error(const std::string& phase, const ShiftError& e) {
  return phase + ": " + e.what();
}

SpecRunReport run_spec(const SpecEntry& entry, const Limits& limits) {
  SpecRunReport sr;
  sr.name = entry.name;
  sr.spec = entry.spec;
  sr.note = entry.note;

  Horizons h = entry.horizons;
  h.aut_range = resolve_aut_range(entry.horizons, entry.spec);
  h.max_inverse_range = resolve_inverse_range(entry.horizons, entry.spec);
  h.depth = resolve_depth(entry.horizons, entry.spec, h.aut_range);
  sr.horizons = h;

  std::optional<Language> lang;
  try {
    lang.emplace(entry.spec, limits);
  } catch (const ShiftError& e) {
    sr.errors.push_back(phase_error("language", e));
    return sr;
  }

  std::vector<std::uint64_t> table;
  try {
    table = lang->complexity_table(h.n_max);
  } catch (const ShiftError& e) {
    sr.errors.push_back(phase_error("complexity", e));
  }
  if (!table.empty()) {
    try {
      sr.growth = growth_report(table);
    } catch (const ShiftError& e) {
      sr.errors.push_back(phase_error("growth", e));
    }
    try {
      sr.morse_hedlund = morse_hedlund_classify(table);
    } catch (const ShiftError& e) {
      sr.errors.push_back(phase_error("morse_hedlund", e));
    }
  }

  try {
    sr.transitivity = transitivity_certificate(*lang);
  } catch (const ShiftError& e) {
    sr.errors.push_back(phase_error("transitivity", e));
  }

  try {
    AutomorphismSearch found =
        enumerate_automorphisms(*lang, h.aut_range, h.max_inverse_range, h.depth);
    sr.certificates = std::move(found.certificates);
    sr.search_stats = found.stats;
  } catch (const ShiftError& e) {
    sr.errors.push_back(phase_error("search", e));
  }

  for (size_t i = 0; i < sr.certificates.size(); ++i) {
    OrderRow row;
    row.code_index = static_cast<int>(i);
    try {
      row.order = order_mod_shift(*lang, sr.certificates[i], h.max_power, h.max_shift);
    } catch (const ShiftError& e) {
      row.error = e.what();
    }
    sr.orders.push_back(std::move(row));
  }

  for (size_t i = 0; i < sr.certificates.size(); ++i) {
    for (int size : h.rect_sizes) {
      RectRow row;
      row.code_index = static_cast<int>(i);
      row.width = size;
      row.height = size;
      try {
        row.count = rect_complexity(*lang, sr.certificates[i].code, size, size);
        row.seed_bound = seed_word_bound(*lang, sr.certificates[i].code, size, size);
        row.bound_holds = *row.count <= *row.seed_bound;
        const auto cells = static_cast<std::uint64_t>(size) * static_cast<std::uint64_t>(size);
        row.threshold_triggered = *row.count <= cells / 16;
      } catch (const ShiftError& e) {
        row.error = e.what();
      }
      sr.rect_checks.push_back(std::move(row));
    }
  }
  return sr;
}

bool phase_failed(const SpecRunReport& sr, const std::string& phase) {
  const std::string prefix = phase + ": ";
  for (const std::string& e : sr.errors)
    if (e.rfind(prefix, 0) == 0) return true;
  return false;
}

// --- JSON ------------------------------------------------------------------

Json horizons_json(const Horizons& h) {
  return Json{{"n_max", h.n_max},
              {"aut_range", h.aut_range},
              {"max_inverse_range", h.max_inverse_range},
              {"depth", h.depth},
              {"max_power", h.max_power},
              {"max_shift", h.max_shift},
              {"rect_sizes", h.rect_sizes}};
}

Horizons horizons_from(const Json& j) {
  Horizons h;
  h.n_max = j.at("n_max").get<int>();
  h.aut_range = j.at("aut_range").get<int>();
  h.max_inverse_range = j.at("max_inverse_range").get<int>();
  h.depth = j.at("depth").get<int>();
  h.max_power = j.at("max_power").get<int>();
  h.max_shift = j.at("max_shift").get<long long>();
  h.rect_sizes = j.at("rect_sizes").get<std::vector<int>>();
  return h;
}

Json order_json(const OrderModShiftResult& r) {
  return Json{{"outcome",
               r.outcome == OrderModShiftResult::Outcome::Found ? "found" : "bound_exhausted"},
              {"power", r.power},
              {"shift", r.shift},
              {"max_power", r.max_power},
              {"max_shift", r.max_shift}};
}

OrderModShiftResult order_from(const Json& j) {
  OrderModShiftResult r;
  r.outcome = j.at("outcome").get<std::string>() == "found"
                  ? OrderModShiftResult::Outcome::Found
                  : OrderModShiftResult::Outcome::BoundExhausted;
  r.power = j.at("power").get<int>();
  r.shift = j.at("shift").get<long long>();
  r.max_power = j.at("max_power").get<int>();
  r.max_shift = j.at("max_shift").get<long long>();
  return r;
}

Json spec_run_json(const SpecRunReport& sr) {
  Json j;
  j["name"] = sr.name;
  j["spec"] = detail::spec_json(sr.spec);
  j["horizons"] = horizons_json(sr.horizons);
  j["note"] = sr.note;
  j["growth"] = sr.growth ? detail::growth_json(*sr.growth) : Json(nullptr);
  j["morse_hedlund"] = sr.morse_hedlund
                           ? Json{{"forced_periodic", sr.morse_hedlund->forced_periodic},
                                  {"n_star", sr.morse_hedlund->n_star}}
                           : Json(nullptr);
  j["transitivity"] =
      sr.transitivity
          ? Json{{"verdict", sr.transitivity->verdict == TransitivityResult::Verdict::Transitive
                                 ? "transitive"
                                 : "unknown"},
                 {"reason", sr.transitivity->reason}}
          : Json(nullptr);
  Json certs = Json::array();
  for (const AutomorphismCertificate& c : sr.certificates)
    certs.push_back(detail::certificate_json(c));
  j["certificates"] = std::move(certs);
  j["search_stats"] = Json{{"nodes", sr.search_stats.nodes},
                           {"pruned", sr.search_stats.pruned},
                           {"completed", sr.search_stats.completed},
                           {"endomorphisms", sr.search_stats.endomorphisms}};
  Json orders = Json::array();
  for (const OrderRow& row : sr.orders)
    orders.push_back(Json{{"code_index", row.code_index},
                          {"order", row.order ? order_json(*row.order) : Json(nullptr)},
                          {"error", row.error}});
  j["orders"] = std::move(orders);
  Json rects = Json::array();
  for (const RectRow& row : sr.rect_checks)
    rects.push_back(Json{{"code_index", row.code_index},
                         {"width", row.width},
                         {"height", row.height},
                         {"count", row.count ? Json(*row.count) : Json(nullptr)},
                         {"seed_bound", row.seed_bound ? Json(*row.seed_bound) : Json(nullptr)},
                         {"bound_holds", row.bound_holds},
                         {"threshold_triggered", row.threshold_triggered},
                         {"error", row.error}});
  j["rect_checks"] = std::move(rects);
  j["errors"] = sr.errors;
  return j;
}

SpecRunReport spec_run_from(const Json& j) {
  SpecRunReport sr;
  sr.name = j.at("name").get<std::string>();
  sr.spec = detail::spec_from(j.at("spec"));
  sr.horizons = horizons_from(j.at("horizons"));
  sr.note = j.at("note").get<std::string>();
  if (!j.at("growth").is_null()) sr.growth = detail::growth_from(j.at("growth"));
  if (!j.at("morse_hedlund").is_null()) {
    const Json& m = j.at("morse_hedlund");
    sr.morse_hedlund =
        MorseHedlundResult{m.at("forced_periodic").get<bool>(), m.at("n_star").get<int>()};
  }
  if (!j.at("transitivity").is_null()) {
    const Json& t = j.at("transitivity");
    sr.transitivity =
        TransitivityResult{t.at("verdict").get<std::string>() == "transitive"
                               ? TransitivityResult::Verdict::Transitive
                               : TransitivityResult::Verdict::Unknown,
                           t.at("reason").get<std::string>()};
  }
  Language lang(sr.spec);
  for (const Json& c : j.at("certificates"))
    sr.certificates.push_back(detail::certificate_from(lang, c));
  const Json& stats = j.at("search_stats");
  sr.search_stats = SearchStats{stats.at("nodes").get<std::uint64_t>(),
                                stats.at("pruned").get<std::uint64_t>(),
                                stats.at("completed").get<std::uint64_t>(),
                                stats.at("endomorphisms").get<std::uint64_t>()};
  for (const Json& o : j.at("orders")) {
    OrderRow row;
    row.code_index = o.at("code_index").get<int>();
    if (!o.at("order").is_null()) row.order = order_from(o.at("order"));
    row.error = o.at("error").get<std::string>();
    sr.orders.push_back(std::move(row));
  }
  for (const Json& r : j.at("rect_checks")) {
    RectRow row;
    row.code_index = r.at("code_index").get<int>();
    row.width = r.at("width").get<int>();
    row.height = r.at("height").get<int>();
    if (!r.at("count").is_null()) row.count = r.at("count").get<std::uint64_t>();
    if (!r.at("seed_bound").is_null()) row.seed_bound = r.at("seed_bound").get<std::uint64_t>();
    row.bound_holds = r.at("bound_holds").get<bool>();
    row.threshold_triggered = r.at("threshold_triggered").get<bool>();
    row.error = r.at("error").get<std::string>();
    sr.rect_checks.push_back(std::move(row));
  }
  sr.errors = j.at("errors").get<std::vector<std::string>>();
  return sr;
}

}  // namespace

PeriodicityReport run_experiment(const ExperimentConfig& config) {
  PeriodicityReport report;
  report.defaults = config.defaults;
  for (const SpecEntry& entry : config.specs)
    report.specs.push_back(run_spec(entry, config.limits));

  PeriodicityVerdict verdict;
  verdict.all_periodic_mod_shift = true;
  for (const SpecRunReport& sr : report.specs) {
    if (phase_failed(sr, "language") || phase_failed(sr, "search")) {
      verdict.all_periodic_mod_shift = false;
      verdict.unresolved.push_back(sr.name + "#search");
      continue;
    }
    for (const OrderRow& row : sr.orders) {
      if (row.order && row.order->outcome == OrderModShiftResult::Outcome::Found) {
        verdict.max_power = std::max(verdict.max_power, row.order->power);
      } else {
        verdict.all_periodic_mod_shift = false;
        verdict.unresolved.push_back(sr.name + "#" + std::to_string(row.code_index));
      }
    }
  }
  report.verdict = verdict;
  return report;
}

std::string report_to_json(const PeriodicityReport& report) {
  Json j;
  j["defaults"] = horizons_json(report.defaults);
  Json specs = Json::array();
  for (const SpecRunReport& sr : report.specs) specs.push_back(spec_run_json(sr));
  j["specs"] = std::move(specs);
  j["verdict"] = Json{{"all_periodic_mod_shift", report.verdict.all_periodic_mod_shift},
                      {"max_power", report.verdict.max_power},
                      {"unresolved", report.verdict.unresolved}};
  return j.dump(2);
}

PeriodicityReport report_from_json(const std::string& text) {
  Json j = detail::parse_json(text);
  PeriodicityReport report;
  try {
    report.defaults = horizons_from(j.at("defaults"));
    for (const Json& s : j.at("specs")) report.specs.push_back(spec_run_from(s));
    const Json& v = j.at("verdict");
    report.verdict =
        PeriodicityVerdict{v.at("all_periodic_mod_shift").get<bool>(),
                           v.at("max_power").get<int>(),
                           v.at("unresolved").get<std::vector<std::string>>()};
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ConfigError, std::string("report json: ") + e.what());
  }
  return report;
}

std::string report_to_text(const PeriodicityReport& report) {
  std::ostringstream out;
  out << "subshift periodicity report\n";
  out << "===========================\n";
  out << "convention: (shift x)(i) = x(i+1); a found pair (power b, shift a) means\n";
  out << "shift^a o code^b = identity, giving the window period vector (a, b).\n\n";

  for (const SpecRunReport& sr : report.specs) {
    out << "[" << sr.name << "] " << family_name(sr.spec) << " over alphabet "
        << sr.spec.alphabet.symbols() << "\n";
    if (!sr.note.empty()) out << "  note: " << sr.note << "\n";
    if (sr.growth) {
      out << "  growth: " << to_string(sr.growth->growth_class) << " (entropy estimate "
          << sr.growth->entropy_estimate << ", P(" << sr.growth->table.size()
          << ") = " << sr.growth->table.back() << ")\n";
    }
    if (sr.morse_hedlund) {
      if (sr.morse_hedlund->forced_periodic)
        out << "  complexity forces periodicity at length " << sr.morse_hedlund->n_star << "\n";
      else
        out << "  complexity stays above the periodicity threshold\n";
    }
    if (sr.transitivity) {
      out << "  transitivity: "
          << (sr.transitivity->verdict == TransitivityResult::Verdict::Transitive ? "transitive"
                                                                                  : "unknown")
          << " (" << sr.transitivity->reason << ")\n";
    }
    out << "  search at range " << sr.horizons.aut_range << ": " << sr.certificates.size()
        << " automorphism certificates (" << sr.search_stats.nodes << " nodes, "
        << sr.search_stats.pruned << " pruned, " << sr.search_stats.endomorphisms
        << " endomorphisms)\n";
    for (size_t i = 0; i < sr.certificates.size(); ++i) {
      const AutomorphismCertificate& c = sr.certificates[i];
      out << "    #" << i << " range " << c.code.range() << " profile "
          << c.code.output_profile() << ", inverse range " << c.inverse.range() << ", ";
      if (c.endomorphy_exact)
        out << "image admissibility exact at depth " << c.verification_depth;
      else
        out << "image admissibility verified to depth " << c.verification_depth;
      const OrderRow& row = sr.orders[i];
      if (row.order && row.order->outcome == OrderModShiftResult::Outcome::Found)
        out << "; order: b=" << row.order->power << " a=" << row.order->shift;
      else if (row.order)
        out << "; order: not found within b<=" << row.order->max_power
            << ", |a|<=" << row.order->max_shift;
      else
        out << "; order: " << row.error;
      out << "\n";
    }
    for (const RectRow& row : sr.rect_checks) {
      out << "    window " << row.width << "x" << row.height << " via #" << row.code_index
          << ": ";
      if (!row.error.empty()) {
        out << row.error << "\n";
        continue;
      }
      out << "count " << *row.count << ", seed bound " << *row.seed_bound << ", bound "
          << (row.bound_holds ? "holds" : "FAILS") << ", threshold "
          << (row.threshold_triggered ? "triggered" : "not triggered") << "\n";
    }
    for (const std::string& e : sr.errors) out << "  error " << e << "\n";
    out << "\n";
  }

  out << "verdict: ";
  if (report.verdict.all_periodic_mod_shift)
    out << "every found automorphism is periodic mod shift (powers up to "
        << report.verdict.max_power << ")\n";
  else {
    out << "unresolved cases remain:";
    for (const std::string& u : report.verdict.unresolved) out << " " << u;
    out << "\n";
  }
  return out.str();
}

std::string complexity_csv(const std::vector<std::uint64_t>& table) {
  std::ostringstream out;
  out << "n,P\n";
  for (size_t i = 0; i < table.size(); ++i) out << (i + 1) << "," << table[i] << "\n";
  return out.str();
}

std::string rect_csv(const SpecRunReport& spec_report) {
  std::ostringstream out;
  out << "code,width,height,count,seed_bound,threshold\n";
  for (const RectRow& row : spec_report.rect_checks) {
    out << row.code_index << "," << row.width << "," << row.height << ",";
    if (row.count) out << *row.count;
    out << ",";
    if (row.seed_bound) out << *row.seed_bound;
    out << ",";
    if (!row.error.empty())
      out << "error";
    else
      out << (row.threshold_triggered ? "triggered" : "not_triggered");
    out << "\n";
  }
  return out.str();
}

std::vector<std::string> emit_report(const PeriodicityReport& report,
                                     const std::set<std::string>& formats,
                                     const std::string& out_dir) {
  for (const std::string& f : formats)
    if (f != "json" && f != "text" && f != "csv")
      raise(ErrorKind::ConfigError, "unknown report format: " + f);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) raise(ErrorKind::IoFailure, "cannot create output directory: " + out_dir);

  auto write_file = [&](const std::string& name, const std::string& content) {
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) raise(ErrorKind::IoFailure, "cannot write " + path);
    return path;
  };

  std::vector<std::string> written;
  if (formats.count("json")) written.push_back(write_file("report.json", report_to_json(report)));
  if (formats.count("text")) written.push_back(write_file("report.txt", report_to_text(report)));
  if (formats.count("csv")) {
    for (const SpecRunReport& sr : report.specs) {
      if (sr.growth)
        written.push_back(
            write_file(sr.name + "_complexity.csv", complexity_csv(sr.growth->table)));
      if (!sr.rect_checks.empty())
        written.push_back(write_file(sr.name + "_windows.csv", rect_csv(sr)));
    }
  }
  return written;
}

}  // namespace shiftlab
