#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "typewriter/construction.hpp"
#include "typewriter/fourier.hpp"
#include "typewriter/simplex.hpp"

namespace typewriter {

// q' = 1 + 1 / cos(pi / q); sqrt(5) for q = 5.
double krawtchouk_parameter(int q);

// Typewriter weight on Z_q: number of +-1 entries, infinite if any entry is
// outside {0, +1, -1}.
ExtendedWeight typewriter_weight_q(const Word& x, int q);

// g(x) = prod_j g1(x_j), g1 = 1 at 0, phi = 1/(2 cos(pi/q)) at +-1, else 0.
GroupFunction lovasz_assignment(int n, int q);

// q^n (cos(pi/q) / (1 + cos(pi/q)))^n.
double lovasz_bound(int n, int q);

enum class SphereKind { kFrequency, kInput };

// S_ell^c (frequency sphere: ell entries equal to +-c, the rest 0) or
// S_u^1 (input sphere: u entries equal to +-1, the rest 0).
struct SphereSpec {
  int n = 1;
  int q = 5;
  SphereKind kind = SphereKind::kFrequency;
  int index = 0;

  int c() const { return (q - 1) / 2; }
};

bool in_sphere(const SphereSpec& sphere, const Word& x);
GroupFunction sphere_indicator(const SphereSpec& sphere);

struct SphereTransform {
  double direct;       // sum over w in S_ell^c of exp(2 pi i <w, x> / q)
  double closed_form;  // (2 cos(pi/q))^ell K_ell(u; q')
};

// Transform of the frequency sphere evaluated at x in an input sphere S_u^1.
SphereTransform sphere_transform(const SphereSpec& frequency_sphere, const Word& x);

struct LPSolution {
  int n = 0;
  int d = 0;
  double qprime = 0;
  std::vector<double> lambda;         // lambda_0..lambda_n, lambda_0 = 1
  std::vector<double> lambda_values;  // Lambda(u), u = 0..n
  double objective = 0;               // Lambda(0) / lambda_0
  LpStatus status = LpStatus::kOptimal;
};

// Minimises Lambda(0)/lambda_0 over lambda >= 0 with Lambda(u) <= 0 for
// integer u in [d, n] and lambda_0 = 1.
LPSolution lp_solve_lambda(int n, int d, double qprime);

// Lambda(u) = sum_ell lambda_ell K_ell(u; q') recomputed from lambda.
std::vector<double> lambda_values(int n, double qprime, const std::vector<double>& lambda);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

// Independent re-verification of a (possibly re-loaded) solution.
CertificateCheck check_lp_solution(const LPSolution& s, double slack = 1e-7);

void write_certificate(std::ostream& out, const LPSolution& s);
LPSolution read_certificate(std::istream& in);

// Upper bound on codes over Z_5^n with typewriter distance >= d. Distances
// above n are only attained as infinity, so d > n reduces to the Lovász term.
double composite_bound(int n, ExtendedWeight d);

struct CertificateReport {
  bool pass = true;
  double bound = 0;  // q^n f(0) / f^(0)
  std::vector<std::string> violations;
  std::optional<std::size_t> first_violation;  // word index
};

// Checks f(x) <= tol where w(x) >= d and f^ >= -tol, and reports the bound.
CertificateReport verify_certificate(const GroupFunction& f, ExtendedWeight d, double tol = 1e-9);

// f = g h with h^ = sum_ell h_ell 1_{S_ell^c}, h_ell = q^n lambda_ell (2 cos(pi/q))^{-ell}.
GroupFunction composite_function(int q, const LPSolution& s);

struct MrrwResult {
  bool valid = false;
  LPSolution solution;
  std::string failure;
  int offending_index = -1;
  int t = 0;
  double a = 0;
  bool from_lp_fallback = false;
};

// Builds Lambda(u) = (K_t(a) K_{t+1}(u) - K_{t+1}(a) K_t(u))^2 / (a - u),
// expands it in the Krawtchouk basis and checks feasibility.
MrrwResult mrrw_certificate(int n, int d, double qprime, int t, double a);

// Smallest root of K_t(.; q') on [0, n], if any.
std::optional<double> first_krawtchouk_root(int n, double qprime, int t);

// Sweeps t and a over the admissible window and keeps the best valid
// certificate; falls back to lp_solve_lambda when none is valid.
MrrwResult mrrw_search(int n, int d, double qprime);

struct MaxCode {
  std::size_t size = 0;
  Code code;
};

// Exact maximum code in Z_5^n with pairwise typewriter distance >= d.
MaxCode brute_force_max_code(int n, ExtendedWeight d);

}  // namespace typewriter
