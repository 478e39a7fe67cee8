#include "typewriter/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/core.h>

#include "typewriter/scalar_math.hpp"

namespace typewriter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt5 = std::sqrt(5.0);

void require_rate(double rate, double lo, double hi, const char* what) {
  if (!(rate >= lo && rate <= hi)) {
    throw std::domain_error(
        fmt::format("{}: rate {} outside [{}, {}]", what, rate, lo, hi));
  }
}

// Left side of the delta(R) relation.
double gv_rate_of_delta(double delta) {
  return std::log2(5.0) - 2.0 * delta - 0.5 * entropy2(2.0 * delta);
}

}  // namespace

const BoundConstants& bound_constants() {
  static const BoundConstants constants = [] {
    BoundConstants c{};
    const double log5 = std::log2(5.0);
    c.zero_error_capacity = 0.5 * log5;
    c.capacity = log5 - 1.0;
    c.gv_slope = 4.0 / 3.0 - entropy2(1.0 / 3.0);
    c.r_star = log5 - 0.5 * entropy2(0.25) - 0.75;
    return c;
  }();
  return constants;
}

double e_rex(double rate) {
  const auto& c = bound_constants();
  require_rate(rate, c.zero_error_capacity, c.capacity, "e_rex");
  return c.capacity - rate;
}

double e_sl(double rate) {
  const auto& c = bound_constants();
  require_rate(rate, c.zero_error_capacity, c.capacity, "e_sl");
  return (c.capacity - rate) / (c.capacity - c.zero_error_capacity);
}

double e_sl_star(double rate) { return (1.0 - 1.0 / kSqrt5) * e_sl(rate); }

double r_star() { return bound_constants().r_star; }

double delta_of_R(double rate) {
  const auto& c = bound_constants();
  require_rate(rate, c.zero_error_capacity, c.r_star, "delta_of_R");
  constexpr double lo = 3.0 / 8.0;
  constexpr double hi = 2.0 / 5.0;
  // Decreasing in delta on the bracket; the endpoints map to R* and C0.
  auto f = [rate](double d) { return gv_rate_of_delta(d) - rate; };
  if (f(hi) >= 0.0) return hi;
  if (f(lo) <= 0.0) return lo;
  return bisect(f, lo, hi);
}

double e_gv_star(double rate) {
  const auto& c = bound_constants();
  require_rate(rate, c.zero_error_capacity, c.capacity, "e_gv_star");
  if (rate <= c.r_star) return c.gv_slope * delta_of_R(rate);
  return e_rex(rate);
}

double r_lp1(double q, double delta) {
  if (!(q > 1.0)) throw std::domain_error("r_lp1: q must exceed 1");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::domain_error(fmt::format("r_lp1: delta {} outside [0,1]", delta));
  }
  double arg = ((q - 1.0) - (q - 2.0) * delta -
                2.0 * std::sqrt((q - 1.0) * delta * (1.0 - delta))) /
               q;
  constexpr double slack = 1e-12;
  if (arg < -slack || arg > 1.0 + slack) {
    throw std::domain_error(fmt::format(
        "r_lp1: delta {} outside the meaningful range for q = {}", delta, q));
  }
  arg = std::clamp(arg, 0.0, 1.0);
  return entropy_q(arg, q);
}

double e_lp1(double rate) {
  const auto& c = bound_constants();
  require_rate(rate, c.zero_error_capacity, std::log2(5.0), "e_lp1");
  const double hi = 1.0 - 1.0 / kSqrt5;
  auto f = [rate, &c](double e) {
    return c.zero_error_capacity + r_lp1(kSqrt5, e) - rate;
  };
  if (f(hi) >= 0.0) return hi;
  if (f(0.0) <= 0.0) return 0.0;
  return bisect(f, 0.0, hi);
}

std::vector<BoundCurve> sample_curves(double rmin, double rmax, int m) {
  const auto& c = bound_constants();
  if (m < 2) throw std::invalid_argument("sample_curves: need at least 2 samples");
  if (!(rmin < rmax)) throw std::invalid_argument("sample_curves: need rmin < rmax");
  // a few ulps of slack: log(5/2) and log 5 - 1 round differently
  if (rmax > c.capacity + 1e-12) {
    throw std::domain_error(
        fmt::format("sample_curves: rmax {} exceeds capacity {}", rmax, c.capacity));
  }
  rmax = std::min(rmax, c.capacity);

  std::vector<BoundCurve> curves{{"E_rex", {}},
                                 {"E_sl", {}},
                                 {"E_sl_star", {}},
                                 {"E_gv_star", {}},
                                 {"E_lp1", {}}};
  for (auto& curve : curves) curve.points.reserve(m);

  for (int i = 0; i < m; ++i) {
    const double rate =
        i == m - 1 ? rmax : rmin + (rmax - rmin) * i / static_cast<double>(m - 1);
    if (rate < c.zero_error_capacity) {
      for (auto& curve : curves) curve.points.emplace_back(rate, kInf);
      continue;
    }
    curves[0].points.emplace_back(rate, e_rex(rate));
    curves[1].points.emplace_back(rate, e_sl(rate));
    curves[2].points.emplace_back(rate, e_sl_star(rate));
    curves[3].points.emplace_back(rate, e_gv_star(rate));
    curves[4].points.emplace_back(rate, e_lp1(rate));
  }
  return curves;
}

void write_curves_csv(std::ostream& out, const std::vector<BoundCurve>& curves) {
  auto number = [](double v) {
    return std::isinf(v) ? std::string("inf") : fmt::format("{:.17g}", v);
  };
  out << "R";
  for (const auto& curve : curves) out << ',' << curve.name;
  out << '\n';
  if (curves.empty()) return;
  const std::size_t rows = curves.front().points.size();
  for (std::size_t i = 0; i < rows; ++i) {
    out << number(curves.front().points[i].first);
    for (const auto& curve : curves) out << ',' << number(curve.points.at(i).second);
    out << '\n';
  }
}

std::string figure1_plot_script(const std::string& csv_filename) {
  return fmt::format(R"py(#!/usr/bin/env python3
# Plots the bound curves for the 5-input typewriter channel.
import csv
import matplotlib.pyplot as plt

rows = [r for r in csv.reader(open("{0}")) if r and not r[0].startswith("#")]
header, data = rows[0], rows[1:]
cols = list(zip(*[[float(v) for v in r] for r in data]))
labels = {{
    "E_rex": "$E_{{r/ex}}$",
    "E_sl": "$E_{{sl}}$",
    "E_sl_star": "$E_{{sl}}^*$",
    "E_gv_star": "$E_{{GV}}^*$",
    "E_lp1": "$E_{{LP1}}$",
}}
for name, values in zip(header[1:], cols[1:]):
    plt.plot(cols[0], values, label=labels.get(name, name))
plt.xlabel("R (bits)")
plt.ylabel("E(R)")
plt.legend()
plt.grid(True, alpha=0.3)
plt.savefig("figure1.pdf")
)py",
                     csv_filename);
}

}  // namespace typewriter
