#include "shiftlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

void validate_table(const std::vector<std::uint64_t>& table) {
  if (table.empty()) raise(ErrorKind::MalformedTable, "complexity table is empty");
  if (table.front() == 0)
    raise(ErrorKind::MalformedTable, "complexity values must be positive");
  for (size_t i = 1; i < table.size(); ++i)
    if (table[i] < table[i - 1])
      raise(ErrorKind::MalformedTable, "complexity table must be nondecreasing");
}

// log of the model shape at n, up to the fitted constant.
double shape_log(GrowthClass c, double n) {
  switch (c) {
    case GrowthClass::Const:
      return 0.0;
    case GrowthClass::Linear:
      return std::log(n);
    case GrowthClass::NLogLogN:
      return std::log(n) + std::log(std::log(std::log(n)));
    case GrowthClass::NLogN:
      return std::log(n) + std::log(std::log(n));
    case GrowthClass::Quadratic:
      return 2.0 * std::log(n);
    default:
      return 0.0;
  }
}

}  // namespace

const char* to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::Const:
      return "const";
    case GrowthClass::Linear:
      return "linear";
    case GrowthClass::NLogLogN:
      return "n_log_log_n";
    case GrowthClass::NLogN:
      return "n_log_n";
    case GrowthClass::Quadratic:
      return "quadratic";
    case GrowthClass::Exponential:
      return "exponential";
    case GrowthClass::Unclassified:
      return "unclassified";
  }
  return "unclassified";
}

GrowthClass growth_class_from_string(const std::string& s) {
  for (GrowthClass c : {GrowthClass::Const, GrowthClass::Linear, GrowthClass::NLogLogN,
                        GrowthClass::NLogN, GrowthClass::Quadratic, GrowthClass::Exponential,
                        GrowthClass::Unclassified})
    if (s == to_string(c)) return c;
  raise(ErrorKind::ConfigError, "unknown growth class: " + s);
}

MorseHedlundResult morse_hedlund_classify(const std::vector<std::uint64_t>& table) {
  validate_table(table);
  for (size_t i = 0; i < table.size(); ++i) {
    const auto n = static_cast<std::uint64_t>(i + 1);
    if (table[i] <= n) return {true, static_cast<int>(n)};
  }
  return {false, 0};
}

GrowthReport growth_report(const std::vector<std::uint64_t>& table) {
  if (table.size() < 8)
    raise(ErrorKind::TableTooShort, "growth fitting needs at least 8 table entries");
  validate_table(table);

  GrowthReport rep;
  rep.table = table;
  const int n_max = static_cast<int>(table.size());
  const int lo = n_max / 2;

  std::vector<double> xs, ys;
  for (int n = lo; n <= n_max; ++n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::log(static_cast<double>(table[static_cast<size_t>(n - 1)])));
  }
  const size_t m = xs.size();

  rep.entropy_estimate = std::log(static_cast<double>(table.back())) / n_max;
  rep.upper_poly_estimate = ys.front() / std::log(xs.front());
  rep.lower_poly_estimate = rep.upper_poly_estimate;
  for (size_t i = 0; i < m; ++i) {
    double e = ys[i] / std::log(xs[i]);
    rep.upper_poly_estimate = std::max(rep.upper_poly_estimate, e);
    rep.lower_poly_estimate = std::min(rep.lower_poly_estimate, e);
  }
  rep.subquadratic_proxy = static_cast<double>(table[0]);
  for (int n = 1; n <= n_max; ++n)
    rep.subquadratic_proxy = std::min(
        rep.subquadratic_proxy,
        static_cast<double>(table[static_cast<size_t>(n - 1)]) / (static_cast<double>(n) * n));

  std::vector<std::pair<double, GrowthClass>> fits;
  for (GrowthClass c : {GrowthClass::Const, GrowthClass::Linear, GrowthClass::NLogLogN,
                        GrowthClass::NLogN, GrowthClass::Quadratic}) {
    double mean = 0.0;
    for (size_t i = 0; i < m; ++i) mean += ys[i] - shape_log(c, xs[i]);
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (size_t i = 0; i < m; ++i) {
      double r = ys[i] - shape_log(c, xs[i]) - mean;
      ss += r * r;
    }
    fits.push_back({ss, c});
  }

  // Free-rate exponential: least squares line through (n, log P). The line
  // has an extra degree of freedom over the shape fits, so it only competes
  // when the data behaves exponentially: the per-step rate must be material
  // (>= 1%) and must not decay across the window. Polynomial data of any
  // degree loses roughly a third of its log-slope between window halves,
  // while genuine exponential growth keeps pace.
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double dm = static_cast<double>(m);
    const double denom = dm * sxx - sx * sx;
    const double b = (dm * sxy - sx * sy) / denom;
    const double a = (sy - b * sx) / dm;
    const size_t mid = m / 2;
    const double head = (ys[mid] - ys[0]) / (xs[mid] - xs[0]);
    const double tail = (ys[m - 1] - ys[mid]) / (xs[m - 1] - xs[mid]);
    if (b >= 0.01 && head > 0.0 && tail >= 0.75 * head) {
      double ss = 0.0;
      for (size_t i = 0; i < m; ++i) {
        double r = ys[i] - a - b * xs[i];
        ss += r * r;
      }
      fits.push_back({ss, GrowthClass::Exponential});
    }
  }

  std::sort(fits.begin(), fits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const double best = fits[0].first;
  const double runner_up = fits[1].first;
  // Refuse a label when the ranking is a coin toss or when even the winner
  // misses the data by more than ~2% per entry in log space.
  if (runner_up - best < 0.1 * std::max(best, 1e-12) ||
      std::sqrt(best / static_cast<double>(m)) > 0.02)
    rep.growth_class = GrowthClass::Unclassified;
  else
    rep.growth_class = fits[0].second;
  return rep;
}

}  // namespace shiftlab
