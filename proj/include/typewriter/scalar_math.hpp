#pragma once

#include <functional>
#include <stdexcept>

namespace typewriter {

// Thrown by bisect() when the bracket does not straddle a root.
class NoSignChange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// q-ary entropy in bits: t log(q-1) - t log t - (1-t) log(1-t), with
// 0 log 0 = 0. q may be any real > 1.
double entropy_q(double t, double q);

// Binary entropy shorthand.
inline double entropy2(double t) { return entropy_q(t, 2.0); }

// log2 C(n, k). Exact integer arithmetic for n <= 60, lgamma beyond.
double log_binomial(long n, long k);

// Generalised binomial coefficient C(x, j) = x (x-1) ... (x-j+1) / j! for
// real x and integer j >= 0.
double binomial_real(double x, int j);

inline constexpr double kBisectTolerance = 1e-12;
inline constexpr int kBisectMaxIterations = 200;

// Root of a monotone function on [lo, hi] by bisection. The returned point
// lies within tol of the sign change. Throws NoSignChange if
// f(lo) * f(hi) > 0.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = kBisectTolerance);

// Largest length accepted by krawtchouk().
inline constexpr int kKrawtchoukMaxLength = 64;

struct KrawtchoukParams {
  int n = 0;          // length
  double qprime = 2;  // alphabet parameter, real > 1
  int ell = 0;        // degree, 0 <= ell <= n
  double u = 0;       // evaluation point
};

// K_ell(u; q') = sum_j (-1)^j (q'-1)^(ell-j) C(u, j) C(n-u, ell-j), summed
// with Neumaier compensation.
double krawtchouk(const KrawtchoukParams& params);

inline double krawtchouk(int n, double qprime, int ell, double u) {
  return krawtchouk(KrawtchoukParams{n, qprime, ell, u});
}

// Extended-precision evaluation of the same sum.
long double krawtchouk_extended(int n, long double qprime, int ell, long double u);

}  // namespace typewriter
