#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "shiftlab/growth.hpp"
#include "shiftlab/language.hpp"
#include "shiftlab/spec.hpp"

using namespace shiftlab;

namespace {

std::vector<std::uint64_t> table_of(int n_max, std::uint64_t (*f)(int)) {
  std::vector<std::uint64_t> t;
  for (int n = 1; n <= n_max; ++n) t.push_back(f(n));
  return t;
}

}  // namespace

TEST_CASE("morse hedlund threshold") {
  auto r = morse_hedlund_classify({2, 3, 4, 4});
  CHECK(r.forced_periodic);
  CHECK(r.n_star == 4);
  r = morse_hedlund_classify({2, 3, 5, 8});
  CHECK_FALSE(r.forced_periodic);
  r = morse_hedlund_classify({1, 1});
  CHECK(r.forced_periodic);
  CHECK(r.n_star == 1);
  r = morse_hedlund_classify({2, 2, 2});
  CHECK(r.forced_periodic);
  CHECK(r.n_star == 2);
}

TEST_CASE("table validation") {
  CHECK(oracle::error_kind_of([] { morse_hedlund_classify({}); }) == ErrorKind::MalformedTable);
  CHECK(oracle::error_kind_of([] { morse_hedlund_classify({2, 0, 3}); }) ==
        ErrorKind::MalformedTable);
  CHECK(oracle::error_kind_of([] { morse_hedlund_classify({2, 5, 3}); }) ==
        ErrorKind::MalformedTable);
  CHECK(oracle::error_kind_of([] { growth_report({2, 3, 4, 5, 6, 7, 8}); }) ==
        ErrorKind::TableTooShort);
}

TEST_CASE("growth class names round trip") {
  for (GrowthClass c : {GrowthClass::Const, GrowthClass::Linear, GrowthClass::NLogLogN,
                        GrowthClass::NLogN, GrowthClass::Quadratic, GrowthClass::Exponential,
                        GrowthClass::Unclassified})
    CHECK(growth_class_from_string(to_string(c)) == c);
  CHECK(oracle::error_kind_of([] { growth_class_from_string("cubic"); }) ==
        ErrorKind::ConfigError);
}

TEST_CASE("constant tables classify as const") {
  std::vector<std::uint64_t> t = {2, 4, 6, 8};
  while (t.size() < 16) t.push_back(8);
  auto r = growth_report(t);
  CHECK(r.growth_class == GrowthClass::Const);
}

TEST_CASE("linear tables classify as linear") {
  auto r = growth_report(table_of(40, +[](int n) { return static_cast<std::uint64_t>(n) + 1; }));
  CHECK(r.growth_class == GrowthClass::Linear);
  CHECK(r.entropy_estimate == doctest::Approx(std::log(41.0) / 40.0));
  CHECK(r.subquadratic_proxy <= 0.5);
}

TEST_CASE("quadratic tables classify as quadratic") {
  auto r = growth_report(table_of(
      40, +[](int n) { return static_cast<std::uint64_t>(n) * (n + 1) / 2 + 1; }));
  CHECK(r.growth_class == GrowthClass::Quadratic);
  CHECK(r.subquadratic_proxy > 0.3);
}

TEST_CASE("exponential tables classify as exponential") {
  auto r = growth_report(table_of(24, +[](int n) { return std::uint64_t{1} << n; }));
  CHECK(r.growth_class == GrowthClass::Exponential);
  CHECK(r.entropy_estimate == doctest::Approx(std::log(2.0)));
  CHECK(r.upper_poly_estimate > 4.0);
}

TEST_CASE("n log n tables classify as n log n") {
  auto r = growth_report(table_of(60, +[](int n) {
    return static_cast<std::uint64_t>(std::llround(n * std::log(n + 1.0))) + 2;
  }));
  CHECK(r.growth_class == GrowthClass::NLogN);
}

TEST_CASE("between-class tables come back unclassified") {
  // n^1.5 sits exactly between the linear and quadratic shapes in log space.
  auto r = growth_report(table_of(40, +[](int n) {
    return static_cast<std::uint64_t>(std::llround(std::pow(n, 1.5)));
  }));
  CHECK(r.growth_class == GrowthClass::Unclassified);
}

TEST_CASE("poly degree estimates bracket the true degree") {
  auto r = growth_report(table_of(
      40, +[](int n) { return static_cast<std::uint64_t>(n) * n + 1; }));
  CHECK(r.lower_poly_estimate > 1.5);
  CHECK(r.upper_poly_estimate < 2.5);
}

TEST_CASE("language tables feed the classifier end to end") {
  Language fib(make_substitution({{'0', "01"}, {'1', "0"}}, '0'));
  auto r = growth_report(fib.complexity_table(40));
  CHECK(r.growth_class == GrowthClass::Linear);
  Language full(make_full_shift("01"));
  r = growth_report(full.complexity_table(20));
  CHECK(r.growth_class == GrowthClass::Exponential);
  CHECK(r.entropy_estimate == doctest::Approx(std::log(2.0)));
  Language orbit(make_periodic_orbit("00010011"));
  r = growth_report(orbit.complexity_table(16));
  CHECK(r.growth_class == GrowthClass::Const);
  auto mh = morse_hedlund_classify(orbit.complexity_table(16));
  CHECK(mh.forced_periodic);
  CHECK(mh.n_star == 8);
  Language golden(make_sft("01", {"11"}));
  r = growth_report(golden.complexity_table(24));
  CHECK(r.growth_class == GrowthClass::Exponential);
  CHECK(r.entropy_estimate == doctest::Approx(std::log((1.0 + std::sqrt(5.0)) / 2.0)).epsilon(0.02));
}
