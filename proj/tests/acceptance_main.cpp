// Acceptance gate: eleven end-to-end criteria, one verdict line each.
// Exits nonzero when any criterion fails. Criteria are exact unless a
// tolerance is stated inline.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shiftlab/automorphisms.hpp"
#include "shiftlab/block_code.hpp"
#include "shiftlab/config.hpp"
#include "shiftlab/growth.hpp"
#include "shiftlab/language.hpp"
#include "shiftlab/rectangle.hpp"
#include "shiftlab/report.hpp"
#include "shiftlab/serialize.hpp"
#include "shiftlab/spec.hpp"

#ifndef SHIFTLAB_BUNDLED_CONFIG
#define SHIFTLAB_BUNDLED_CONFIG "config/experiments.toml"
#endif

using namespace shiftlab;

namespace {

std::string g_config_path = SHIFTLAB_BUNDLED_CONFIG;

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

template <typename T, typename U>
void expect_eq(const T& got, const U& want, const std::string& what) {
  if (!(got == static_cast<T>(want))) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    throw std::runtime_error(msg.str());
  }
}

Language bundled_language(const ExperimentConfig& cfg, const std::string& name) {
  for (const SpecEntry& e : cfg.specs)
    if (e.name == name) return Language(e.spec, cfg.limits);
  throw std::runtime_error("bundled config is missing spec " + name);
}

SlidingBlockCode xor_right_code(Language& lang) {
  std::vector<std::pair<Word, Symbol>> rule;
  for (const Word& w : lang.words(3).words)
    rule.push_back({w, static_cast<char>('0' + ((w[1] - '0') ^ (w[2] - '0')))});
  return SlidingBlockCode(lang.spec(), 1, std::move(rule));
}

// --- criteria ---------------------------------------------------------------

void sturmian_complexity() {
  Language fib(make_substitution({{'0', "01"}, {'1', "0"}}, '0'));
  for (int n = 1; n <= 40; ++n)
    expect_eq(fib.complexity(n), static_cast<std::uint64_t>(n) + 1,
              "P(" + std::to_string(n) + ")");
  for (int n = 1; n <= 10; ++n) {
    std::set<std::string> got(fib.words(n).words.begin(), fib.words(n).words.end());
    expect(got == oracle::substitution_factors({{'0', "01"}, {'1', "0"}}, '0', n),
           "factor set mismatch against the prefix oracle at n=" + std::to_string(n));
  }
}

void full_shift_complexity() {
  Language full(make_full_shift("01"));
  for (int n = 1; n <= 20; ++n)
    expect_eq(full.complexity(n), std::uint64_t{1} << n, "P(" + std::to_string(n) + ")");
  const GrowthReport g = growth_report(full.complexity_table(20));
  const double rel = std::fabs(g.entropy_estimate - std::log(2.0)) / std::log(2.0);
  expect(rel <= 0.01, "entropy " + std::to_string(g.entropy_estimate) +
                          " deviates from log 2 by more than 1%");
}

void morse_hedlund_orbits() {
  const std::vector<std::string> words = {"0", "01", "001", "0011", "00101", "001011"};
  for (int p = 1; p <= 6; ++p) {
    const std::string& w = words[p - 1];
    expect_eq(least_period(w), p, "least period of " + w);
    Language orbit(make_periodic_orbit(w));
    for (int n = p; n <= p + 4; ++n)
      expect_eq(orbit.complexity(n), static_cast<std::uint64_t>(p),
                w + ": P(" + std::to_string(n) + ")");
    const auto table = orbit.complexity_table(p + 4);
    int first = 0;
    for (int n = 1; n <= p + 4 && first == 0; ++n)
      if (table[n - 1] <= static_cast<std::uint64_t>(n)) first = n;
    const MorseHedlundResult r = morse_hedlund_classify(table);
    expect(r.forced_periodic, w + ": classifier missed forced periodicity");
    expect_eq(r.n_star, first, w + ": threshold length");
  }
}

void submultiplicativity() {
  const ExperimentConfig cfg = parse_config_file(g_config_path);
  for (const SpecEntry& entry : cfg.specs) {
    Language lang(entry.spec, cfg.limits);
    const auto table = lang.complexity_table(30);
    for (int m = 1; m < 30; ++m)
      for (int n = 1; m + n <= 30; ++n)
        expect(table[m + n - 1] <= table[m - 1] * table[n - 1],
               entry.name + ": P(" + std::to_string(m + n) + ") > P(" + std::to_string(m) +
                   ")*P(" + std::to_string(n) + ")");
  }
}

void window_bound_and_reduction() {
  const ExperimentConfig cfg = parse_config_file(g_config_path);
  for (const SpecEntry& entry : cfg.specs) {
    Language lang(entry.spec, cfg.limits);
    const int range = resolve_aut_range(entry.horizons, entry.spec);
    const int depth = resolve_depth(entry.horizons, entry.spec, range);
    const AutomorphismSearch found = enumerate_automorphisms(
        lang, range, resolve_inverse_range(entry.horizons, entry.spec), depth);
    expect(!found.certificates.empty(), entry.name + ": no automorphisms found");
    for (const AutomorphismCertificate& cert : found.certificates) {
      const int N = cert.code.range();
      for (int n : {2, 4, 8, 16}) {
        expect_eq(rect_complexity(lang, cert.code, n, 1), lang.complexity(n),
                  entry.name + ": k=1 reduction at n=" + std::to_string(n));
        for (int k : {2, 4, 8, 16}) {
          const std::uint64_t count = rect_complexity(lang, cert.code, n, k);
          const std::uint64_t bound = lang.complexity(2 * N * k - 2 * N + n);
          expect(count <= bound, entry.name + ": window count " + std::to_string(count) +
                                     " exceeds the one-row bound " + std::to_string(bound) +
                                     " at " + std::to_string(n) + "x" + std::to_string(k));
        }
      }
    }
  }
}

void enumeration_exactness() {
  Language full(make_full_shift("01"));
  const AutomorphismSearch at0 = enumerate_automorphisms(full, 0, 2, 4);
  expect_eq(at0.certificates.size(), std::size_t{2}, "full shift radius-0 certificate count");
  std::set<std::string> profiles;
  for (const auto& c : at0.certificates) profiles.insert(c.code.output_profile());
  expect(profiles == std::set<std::string>{"01", "10"},
         "full shift radius-0 set is not {identity, flip}");

  Language fib(make_substitution({{'0', "01"}, {'1', "0"}}, '0'));
  for (int N : {1, 2}) {
    const AutomorphismSearch found =
        enumerate_automorphisms(fib, N, N + 2, default_verification_depth(fib.spec(), N));
    expect_eq(found.certificates.size(), static_cast<std::size_t>(2 * N + 1),
              "certificate count at radius " + std::to_string(N));
    std::set<int> exponents;
    for (const AutomorphismCertificate& cert : found.certificates) {
      bool matched = false;
      for (int s = -N; s <= N && !matched; ++s) {
        if (codes_equal_on(fib, cert.code, shift_power_code(fib, s))) {
          exponents.insert(s);
          matched = true;
        }
      }
      expect(matched, "a certificate at radius " + std::to_string(N) + " is not a shift power");
    }
    expect_eq(exponents.size(), static_cast<std::size_t>(2 * N + 1),
              "distinct shift powers at radius " + std::to_string(N));
  }
}

void theorem_witness() {
  Language fib(make_substitution({{'0', "01"}, {'1', "0"}}, '0'));
  for (int N : {1, 2}) {
    const AutomorphismSearch found =
        enumerate_automorphisms(fib, N, N + 2, default_verification_depth(fib.spec(), N));
    for (const AutomorphismCertificate& cert : found.certificates) {
      const OrderModShiftResult r = order_mod_shift(fib, cert, 8, 24);
      expect(r.outcome == OrderModShiftResult::Outcome::Found,
             "an order search came back exhausted at radius " + std::to_string(N));
      expect_eq(r.power, 1, "power of a shift-power certificate");
    }
  }
  Language golden(make_sft("01", {"11"}));
  const AutomorphismSearch g =
      enumerate_automorphisms(golden, 1, 3, default_verification_depth(golden.spec(), 1));
  expect(!g.certificates.empty(), "golden mean search came back empty");
  for (const AutomorphismCertificate& cert : g.certificates) {
    const OrderModShiftResult r = order_mod_shift(golden, cert, 8, 24);
    expect(r.outcome == OrderModShiftResult::Outcome::Found, "golden mean order exhausted");
  }
  const PeriodicityReport report = run_experiment(parse_config_file(g_config_path));
  expect(report.verdict.all_periodic_mod_shift,
         "bundled run verdict is not fully periodic mod shift");
}

void order_sanity() {
  const ExperimentConfig cfg = parse_config_file(g_config_path);
  for (const SpecEntry& entry : cfg.specs) {
    Language lang(entry.spec, cfg.limits);
    for (int k = -3; k <= 3; ++k) {
      AutomorphismCertificate cert{shift_power_code(lang, k), shift_power_code(lang, -k),
                                   default_verification_depth(lang.spec(), std::abs(k)), false};
      const OrderModShiftResult r = order_mod_shift(lang, cert, 8, 24);
      expect(r.outcome == OrderModShiftResult::Outcome::Found,
             entry.name + ": shift power " + std::to_string(k) + " not resolved");
      expect_eq(r.power, 1, entry.name + ": power of shift " + std::to_string(k));
      expect_eq(r.shift, static_cast<long long>(-k),
                entry.name + ": matching shift for power " + std::to_string(k));
    }
  }

  Language full(make_full_shift("01"));
  SlidingBlockCode flip(full.spec(), 0, {{"0", '1'}, {"1", '0'}});
  AutomorphismCertificate flip_cert{flip, flip, 4, true};
  const OrderModShiftResult fr = order_mod_shift(full, flip_cert, 8, 24);
  expect(fr.outcome == OrderModShiftResult::Outcome::Found && fr.power == 2 && fr.shift == 0,
         "flip should have order two with no shift");

  // conjugation leaves the order untouched
  for (const char* name : {"golden_mean", "periodic8"}) {
    Language lang = bundled_language(cfg, name);
    const int depth = default_verification_depth(lang.spec(), 1);
    const AutomorphismSearch found = enumerate_automorphisms(lang, 1, 3, depth);
    for (const AutomorphismCertificate& phi : found.certificates) {
      const OrderModShiftResult base = order_mod_shift(lang, phi, 8, 24);
      expect(base.outcome == OrderModShiftResult::Outcome::Found, "base order exhausted");
      for (const AutomorphismCertificate& psi : found.certificates) {
        SlidingBlockCode conj = compose(lang, compose(lang, psi.code, phi.code), psi.inverse);
        SlidingBlockCode conj_inv =
            compose(lang, compose(lang, psi.code, phi.inverse), psi.inverse);
        AutomorphismCertificate cc{conj, conj_inv,
                                   default_verification_depth(lang.spec(), conj.range()), false};
        const OrderModShiftResult r = order_mod_shift(lang, cc, 8, 24);
        expect(r.outcome == OrderModShiftResult::Outcome::Found,
               std::string(name) + ": conjugate order exhausted");
        expect_eq(r.power, base.power, std::string(name) + ": conjugation changed the order");
      }
    }
  }
}

void window_pipeline() {
  Language fib(make_substitution({{'0', "01"}, {'1', "0"}}, '0'));
  SlidingBlockCode sigma = shift_power_code(fib, 1);
  expect_eq(rect_complexity(fib, sigma, 64, 64), std::uint64_t{128}, "64x64 window count");
  expect_eq(seed_word_bound(fib, sigma, 64, 64), std::uint64_t{191}, "64x64 seed bound");
  expect(periodicity_threshold_check(fib, sigma, 64, 64) == ThresholdVerdict::Triggered,
         "threshold untriggered at 64x64 despite count 128 <= 256");

  AutomorphismCertificate cert{sigma, shift_power_code(fib, -1),
                               default_verification_depth(fib.spec(), 1), false};
  const PeriodCertificate pc = certify_period(fib, cert, 8, 24);
  expect(pc.outcome == PeriodCertificate::Outcome::Found, "period certification exhausted");
  expect(pc.vector == PeriodVector{-1, 1}, "shift code should certify the vector (-1, 1)");

  for (int size : {16, 64}) {
    const int need = iterate_seed_length(sigma, size, size);
    int checked = 0;
    for (const Word& seed : fib.words(need).words) {
      const RectPattern w = build_iterate_window(fib, sigma, seed, size, size);
      expect(verify_window_periodicity(w, pc.vector),
             "certified vector fails on a " + std::to_string(size) + "-window");
      if (++checked == 3) break;
    }
  }
}

void non_invertibility() {
  Language full(make_full_shift("01"));
  SlidingBlockCode xorc = xor_right_code(full);
  expect(is_endomorphism(full, xorc, 12), "xor rule should be an endomorphism at depth 12");
  const InverseSearchResult r = find_inverse(full, xorc, 3, 12);
  expect(!r.certificate.has_value(), "xor rule must not acquire an inverse");
  expect(r.failure.has_value() &&
             r.failure->kind == NonInvertibility::Kind::NonInjectiveEvidence,
         "xor rule should fail with persistent collision evidence");
  expect(r.failure->collision.has_value(), "collision evidence must carry a witness pair");
  const auto& [w1, w2] = *r.failure->collision;
  expect(w1 != w2 && full.contains(w1) && full.contains(w2),
         "witness words must be distinct and admissible");
  expect(apply_code(xorc, w1) == apply_code(xorc, w2), "witness images must collide");
}

void determinism() {
  const ExperimentConfig cfg = parse_config_file(g_config_path);
  const std::string first = report_to_json(run_experiment(cfg));
  const std::string second = report_to_json(run_experiment(parse_config_file(g_config_path)));
  expect(first == second, "two runs of the bundled experiment differ");
  expect(!first.empty(), "empty report");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_config_path = argv[1];
  struct Criterion {
    int id;
    const char* title;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "sturmian complexity equals n+1 with oracle cross-check", sturmian_complexity},
      {2, "full-shift complexity is 2^n and entropy is log 2 (1% tolerance)",
       full_shift_complexity},
      {3, "periodic orbits hit the forced-periodicity threshold", morse_hedlund_orbits},
      {4, "complexity is submultiplicative across the bundle", submultiplicativity},
      {5, "window counts obey the one-row bound and the k=1 reduction",
       window_bound_and_reduction},
      {6, "automorphism searches return exactly the known groups", enumeration_exactness},
      {7, "every bundled automorphism is periodic mod shift", theorem_witness},
      {8, "orders of shift powers, the flip, and conjugates check out", order_sanity},
      {9, "the 64x64 window pipeline triggers and certifies a period", window_pipeline},
      {10, "the xor rule is a non-invertible endomorphism with a witness", non_invertibility},
      {11, "bundled runs are byte-for-byte deterministic", determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      c.run();
      std::cout << "PASS  " << c.id << "  " << c.title << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL  " << c.id << "  " << c.title << "  [" << e.what() << "]\n";
    }
  }
  std::cout << (failures == 0 ? "acceptance: all criteria hold"
                              : "acceptance: " + std::to_string(failures) + " criteria failing")
            << "\n";
  return failures == 0 ? 0 : 1;
}
