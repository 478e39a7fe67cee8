#include "typewriter/scalar_math.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include <fmt/core.h>

namespace typewriter {

namespace {

double xlog2x(double x) { return x == 0.0 ? 0.0 : x * std::log2(x); }

// Neumaier's variant of Kahan summation.
template <typename Real>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + comp_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
};

template <typename Real>
Real binomial_generic(Real x, int j) {
  Real r = 1;
  for (int i = 0; i < j; ++i) r *= (x - i) / (i + 1);
  return r;
}

template <typename Real>
Real krawtchouk_impl(int n, Real qprime, int ell, Real u) {
  if (n < 0 || ell < 0 || ell > n) {
    throw std::domain_error(fmt::format(
        "krawtchouk: need 0 <= ell <= n, got n={}, ell={}", n, ell));
  }
  if (n > kKrawtchoukMaxLength) {
    throw std::domain_error(fmt::format(
        "krawtchouk: n={} exceeds supported length {}", n, kKrawtchoukMaxLength));
  }
  if (!(qprime > 1)) throw std::domain_error("krawtchouk: q' must exceed 1");
  const Real base = qprime - 1;
  // Running products C(u, j) and C(n - u, m), same factor order as
  // binomial_generic.
  std::array<Real, kKrawtchoukMaxLength + 1> upper{};
  upper[0] = 1;
  for (int m = 1; m <= ell; ++m) upper[m] = upper[m - 1] * ((n - u) - (m - 1)) / m;
  CompensatedSum<Real> sum;
  Real lower = 1;
  for (int j = 0; j <= ell; ++j) {
    if (j > 0) lower *= (u - (j - 1)) / j;
    const Real term = std::pow(base, ell - j) * lower * upper[ell - j];
    sum.add(j % 2 == 0 ? term : -term);
  }
  return sum.value();
}

}  // namespace

double entropy_q(double t, double q) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error(fmt::format("entropy_q: t = {} outside [0,1]", t));
  }
  if (!(q > 1.0)) {
    throw std::domain_error(fmt::format("entropy_q: q = {} must exceed 1", q));
  }
  const double linear = t == 0.0 ? 0.0 : t * std::log2(q - 1.0);
  return linear - xlog2x(t) - xlog2x(1.0 - t);
}

double log_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::domain_error(
        fmt::format("log_binomial: need 0 <= k <= n, got n={}, k={}", n, k));
  }
  if (n <= 60) {
    const long kk = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (long i = 1; i <= kk; ++i) {
      c = c * static_cast<unsigned __int128>(n - kk + i) / i;
    }
    return std::log2(static_cast<long double>(c));
  }
  const double ln = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0);
  return ln / std::log(2.0);
}

double binomial_real(double x, int j) { return binomial_generic<double>(x, j); }

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw NoSignChange(fmt::format(
        "bisect: no sign change on [{}, {}] (f = {}, {})", lo, hi, flo, fhi));
  }
  for (int it = 0; it < kBisectMaxIterations && hi - lo > tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

double krawtchouk(const KrawtchoukParams& p) {
  return krawtchouk_impl<double>(p.n, p.qprime, p.ell, p.u);
}

long double krawtchouk_extended(int n, long double qprime, int ell, long double u) {
  return krawtchouk_impl<long double>(n, qprime, ell, u);
}

}  // namespace typewriter
