#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace typewriter {

// Rates in bits per channel use for the 5-input typewriter channel with
// crossover 1/2.
struct BoundConstants {
  double zero_error_capacity;  // C0 = log sqrt(5)
  double capacity;             // C = log(5/2)
  double gv_slope;             // 4/3 - H2(1/3)
  double r_star;               // log 5 - H2(1/4)/2 - 3/4
};

const BoundConstants& bound_constants();

// Random coding / expurgated lower bound, log(5/2) - R on [C0, C].
double e_rex(double rate);

// Straight line upper bound through (C0, 1) and (C, 0).
double e_sl(double rate);

// Straight line anchored at E_LP1(C0) = 1 - 1/sqrt(5).
double e_sl_star(double rate);

double r_star();

// Solves log 5 - 2 delta - H2(2 delta)/2 = R for delta in [3/8, 2/5].
// Domain: C0 <= R <= R*.
double delta_of_R(double rate);

// Structured-GV lower bound: gv_slope * delta(R) up to R*, E_r/ex above.
double e_gv_star(double rate);

// First linear programming bound for a q-ary Hamming space, q real > 1.
double r_lp1(double q, double delta);

// Inverse of E -> log sqrt(5) + R_LP1(sqrt(5), E). Domain [C0, log 5].
double e_lp1(double rate);

struct BoundCurve {
  std::string name;
  // (R, E) samples; E is +infinity below C0.
  std::vector<std::pair<double, double>> points;
};

// m equally spaced rates on [rmin, rmax], all five curves in the order
// E_rex, E_sl, E_sl_star, E_gv_star, E_lp1. Rates below C0 yield +inf.
std::vector<BoundCurve> sample_curves(double rmin, double rmax, int m);

// CSV with header R,E_rex,E_sl,E_sl_star,E_gv_star,E_lp1 and 17 significant
// digits per value; "inf" for the infinite sentinel.
void write_curves_csv(std::ostream& out, const std::vector<BoundCurve>& curves);

// Matplotlib script that plots the CSV produced by write_curves_csv.
std::string figure1_plot_script(const std::string& csv_filename);

}  // namespace typewriter
