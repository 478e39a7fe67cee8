#include "typewriter/lp_certificate.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/core.h>

#include "typewriter/clique.hpp"
#include "typewriter/scalar_math.hpp"

namespace typewriter {

namespace {

void require_odd_q(int q) {
  if (q < 5 || q % 2 == 0) throw std::domain_error(fmt::format("q = {} must be odd and >= 5", q));
}

double two_cos(int q) { return 2.0 * std::cos(std::numbers::pi / q); }

int symbol_offset(Symbol s, int q) {
  // Returns the representative of s in (-q/2, q/2].
  const int v = s % q;
  return v > q / 2 ? v - q : v;
}

double krawtchouk_at_zero(int n, double qprime, int ell) {
  return std::pow(qprime - 1.0, ell) * std::exp2(log_binomial(n, ell));
}

}  // namespace

double krawtchouk_parameter(int q) {
  require_odd_q(q);
  return 1.0 + 1.0 / std::cos(std::numbers::pi / q);
}

ExtendedWeight typewriter_weight_q(const Word& x, int q) {
  std::uint32_t w = 0;
  for (Symbol s : x) {
    const int v = symbol_offset(s, q);
    if (v == 1 || v == -1) {
      ++w;
    } else if (v != 0) {
      return ExtendedWeight::infinity();
    }
  }
  return ExtendedWeight(w);
}

GroupFunction lovasz_assignment(int n, int q) {
  require_odd_q(q);
  const double phi = 1.0 / two_cos(q);
  GroupFunction g(n, q);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Word x = word_from_index(i, n, q);
    double v = 1.0;
    for (Symbol s : x) {
      const int off = symbol_offset(s, q);
      v *= off == 0 ? 1.0 : (off == 1 || off == -1) ? phi : 0.0;
    }
    g[i] = v;
  }
  return g;
}

double lovasz_bound(int n, int q) {
  require_odd_q(q);
  const double c = std::cos(std::numbers::pi / q);
  return std::pow(q * c / (1.0 + c), n);
}

bool in_sphere(const SphereSpec& sphere, const Word& x) {
  if (static_cast<int>(x.size()) != sphere.n) return false;
  const int target = sphere.kind == SphereKind::kFrequency ? sphere.c() : 1;
  int count = 0;
  for (Symbol s : x) {
    const int off = symbol_offset(s, sphere.q);
    if (off == target || off == -target) {
      ++count;
    } else if (off != 0) {
      return false;
    }
  }
  return count == sphere.index;
}

GroupFunction sphere_indicator(const SphereSpec& sphere) {
  GroupFunction f(sphere.n, sphere.q);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (in_sphere(sphere, word_from_index(i, sphere.n, sphere.q))) f[i] = 1.0;
  }
  return f;
}

SphereTransform sphere_transform(const SphereSpec& freq, const Word& x) {
  require_odd_q(freq.q);
  if (freq.kind != SphereKind::kFrequency) {
    throw std::invalid_argument("sphere_transform: expected a frequency sphere S_l^c");
  }
  if (freq.index < 0 || freq.index > freq.n) {
    throw std::invalid_argument("sphere_transform: sphere index outside [0, n]");
  }
  int u = 0;
  for (int r = 0; r <= freq.n; ++r) {
    if (in_sphere({freq.n, freq.q, SphereKind::kInput, r}, x)) u = r + 1;
  }
  if (u == 0) throw std::invalid_argument("sphere_transform: x is not in any input sphere S_u^1");
  --u;

  const int n = freq.n;
  const int q = freq.q;
  const int c = freq.c();
  // Enumerate every pattern in {0, +c, -c}^n with exactly ell nonzero entries.
  std::size_t patterns = 1;
  for (int i = 0; i < n; ++i) patterns *= 3;
  std::complex<double> direct = 0.0;
  for (std::size_t p = 0; p < patterns; ++p) {
    std::size_t rest = p;
    int nonzero = 0;
    long inner = 0;
    for (int i = 0; i < n; ++i) {
      const int digit = static_cast<int>(rest % 3);
      rest /= 3;
      if (digit == 0) continue;
      ++nonzero;
      const int w = digit == 1 ? c : q - c;
      inner += static_cast<long>(w) * x[i];
    }
    if (nonzero != freq.index) continue;
    direct += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(inner % q) / q);
  }

  SphereTransform result{};
  result.direct = direct.real();
  result.closed_form = std::pow(two_cos(q), freq.index) *
                       krawtchouk(n, krawtchouk_parameter(q), freq.index, u);
  return result;
}

std::vector<double> lambda_values(int n, double qprime, const std::vector<double>& lambda) {
  if (static_cast<int>(lambda.size()) != n + 1) throw std::invalid_argument("lambda_values: need n+1 coefficients");
  std::vector<double> values(n + 1);
  for (int u = 0; u <= n; ++u) {
    long double acc = 0.0L;
    for (int ell = 0; ell <= n; ++ell) {
      if (lambda[ell] == 0.0) continue;
      acc += static_cast<long double>(lambda[ell]) * krawtchouk_extended(n, qprime, ell, u);
    }
    values[u] = static_cast<double>(acc);
  }
  return values;
}

LPSolution lp_solve_lambda(int n, int d, double qprime) {
  if (n < 1 || d < 1 || d > n) {
    throw std::domain_error(fmt::format("lp_solve_lambda: need 1 <= d <= n, got n={}, d={}", n, d));
  }
  if (!(qprime > 1.0)) throw std::domain_error("lp_solve_lambda: q' must exceed 1");

  // Variables mu_ell = lambda_ell K_ell(0), ell = 1..n, so that the objective
  // is 1 + sum mu and every constraint coefficient lies in [-1, 1] for q' >= 2.
  std::vector<double> k0(n + 1);
  for (int ell = 0; ell <= n; ++ell) k0[ell] = krawtchouk_at_zero(n, qprime, ell);

  LinearProgram lp;
  lp.c.assign(n, 1.0);
  for (int u = d; u <= n; ++u) {
    std::vector<double> row(n);
    for (int ell = 1; ell <= n; ++ell) {
      row[ell - 1] = static_cast<double>(krawtchouk_extended(n, qprime, ell, u) / k0[ell]);
    }
    lp.a.push_back(std::move(row));
    lp.b.push_back(-1.0);
  }
  const LpResult r = solve_lp(lp);

  LPSolution s;
  s.n = n;
  s.d = d;
  s.qprime = qprime;
  s.lambda.assign(n + 1, 0.0);
  s.lambda[0] = 1.0;
  s.status = r.status;
  if (r.status == LpStatus::kOptimal) {
    for (int ell = 1; ell <= n; ++ell) s.lambda[ell] = std::max(0.0, r.x[ell - 1]) / k0[ell];
  }
  s.lambda_values = lambda_values(n, qprime, s.lambda);
  s.objective = s.lambda_values[0] / s.lambda[0];
  if (s.status == LpStatus::kOptimal && !check_lp_solution(s).ok) s.status = LpStatus::kNumericFailure;
  return s;
}

CertificateCheck check_lp_solution(const LPSolution& s, double slack) {
  CertificateCheck check;
  auto fail = [&check](std::string msg) {
    check.ok = false;
    check.problems.push_back(std::move(msg));
  };
  if (s.n < 1 || static_cast<int>(s.lambda.size()) != s.n + 1) {
    fail("lambda has the wrong length");
    return check;
  }
  if (!(s.lambda[0] > 0.0)) fail("lambda_0 must be positive");
  double scale = 1.0;
  for (int ell = 0; ell <= s.n; ++ell) {
    scale = std::max(scale, std::fabs(s.lambda[ell]) * krawtchouk_at_zero(s.n, s.qprime, ell));
  }
  for (int ell = 0; ell <= s.n; ++ell) {
    if (s.lambda[ell] * krawtchouk_at_zero(s.n, s.qprime, ell) < -slack * scale) {
      fail(fmt::format("lambda_{} = {} is negative", ell, s.lambda[ell]));
    }
  }
  const auto values = lambda_values(s.n, s.qprime, s.lambda);
  for (int u = std::max(s.d, 0); u <= s.n; ++u) {
    if (values[u] > slack * scale) fail(fmt::format("Lambda({}) = {} is positive", u, values[u]));
  }
  if (s.lambda_values.size() == values.size()) {
    for (int u = 0; u <= s.n; ++u) {
      if (std::fabs(values[u] - s.lambda_values[u]) > 1e-9 * scale) {
        fail(fmt::format("stored Lambda({}) = {} disagrees with recomputed {}", u, s.lambda_values[u],
                         values[u]));
      }
    }
  }
  if (s.lambda[0] > 0.0) {
    const double objective = values[0] / s.lambda[0];
    if (std::fabs(objective - s.objective) > 1e-9 * std::max(1.0, std::fabs(objective))) {
      fail(fmt::format("objective {} disagrees with recomputed {}", s.objective, objective));
    }
  }
  return check;
}

void write_certificate(std::ostream& out, const LPSolution& s) {
  auto list = [&out](const char* key, const std::vector<double>& v) {
    out << key;
    for (double x : v) out << ' ' << fmt::format("{:.17g}", x);
    out << '\n';
  };
  out << "n " << s.n << '\n';
  out << "d " << s.d << '\n';
  out << "qprime " << fmt::format("{:.17g}", s.qprime) << '\n';
  out << "status " << to_string(s.status) << '\n';
  list("lambda", s.lambda);
  list("Lambda", s.lambda_values);
  out << "objective " << fmt::format("{:.17g}", s.objective) << '\n';
}

LPSolution read_certificate(std::istream& in) {
  LPSolution s;
  bool seen_n = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    auto read_list = [&fields]() {
      std::vector<double> v;
      double x;
      while (fields >> x) v.push_back(x);
      return v;
    };
    if (key == "n") {
      fields >> s.n;
      seen_n = true;
    } else if (key == "d") {
      fields >> s.d;
    } else if (key == "qprime") {
      fields >> s.qprime;
    } else if (key == "status") {
      std::string status;
      fields >> status;
      s.status = lp_status_from_string(status);
    } else if (key == "lambda") {
      s.lambda = read_list();
    } else if (key == "Lambda") {
      s.lambda_values = read_list();
    } else if (key == "objective") {
      fields >> s.objective;
    } else {
      throw std::runtime_error(fmt::format("certificate: unknown key '{}'", key));
    }
    if (fields.fail() && !fields.eof()) throw std::runtime_error(fmt::format("certificate: bad line '{}'", line));
  }
  if (!seen_n || static_cast<int>(s.lambda.size()) != s.n + 1 ||
      static_cast<int>(s.lambda_values.size()) != s.n + 1) {
    throw std::runtime_error("certificate: missing or inconsistent fields");
  }
  return s;
}

double composite_bound(int n, ExtendedWeight d) {
  if (n < 1) throw std::domain_error("composite_bound: n must be positive");
  if (d.is_infinite() || static_cast<int>(d.value()) > n) return lovasz_bound(n, 5);
  if (d.value() == 0) return std::pow(5.0, n);
  const LPSolution s = lp_solve_lambda(n, static_cast<int>(d.value()), krawtchouk_parameter(5));
  if (s.status != LpStatus::kOptimal) {
    throw std::runtime_error(fmt::format("composite_bound: LP {} for n={}, d={}", to_string(s.status), n,
                                         d.value()));
  }
  return lovasz_bound(n, 5) * s.objective;
}

CertificateReport verify_certificate(const GroupFunction& f, ExtendedWeight d, double tol) {
  CertificateReport report;
  auto violation = [&report](std::size_t index, std::string msg) {
    report.pass = false;
    if (!report.first_violation) report.first_violation = index;
    if (report.violations.size() < 16) report.violations.push_back(std::move(msg));
  };
  const int n = f.n();
  const int q = f.q();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Word x = word_from_index(i, n, q);
    if (typewriter_weight_q(x, q) >= d && f[i].real() > tol) {
      violation(i, fmt::format("f(x) = {} > 0 at word index {} of weight {}", f[i].real(), i,
                               typewriter_weight_q(x, q).to_string()));
    }
  }
  const GroupFunction fhat = dft(f);
  for (std::size_t i = 0; i < fhat.size(); ++i) {
    if (fhat[i].real() < -tol || std::fabs(fhat[i].imag()) > tol * std::max(1.0, std::abs(fhat[i]))) {
      violation(i, fmt::format("transform {} + {}i is not nonnegative at index {}", fhat[i].real(),
                               fhat[i].imag(), i));
    }
  }
  if (!(fhat[0].real() > 0.0)) {
    violation(0, "transform at zero is not positive");
    return report;
  }
  report.bound = static_cast<double>(f.size()) * f[0].real() / fhat[0].real();
  return report;
}

GroupFunction composite_function(int q, const LPSolution& s) {
  require_odd_q(q);
  const int n = s.n;
  GroupFunction hhat(n, q);
  const double qn = static_cast<double>(hhat.size());
  const int c = (q - 1) / 2;
  for (std::size_t i = 0; i < hhat.size(); ++i) {
    const Word w = word_from_index(i, n, q);
    int ell = 0;
    bool on_sphere = true;
    for (Symbol sym : w) {
      const int off = symbol_offset(sym, q);
      if (off == c || off == -c) {
        ++ell;
      } else if (off != 0) {
        on_sphere = false;
        break;
      }
    }
    if (on_sphere) hhat[i] = qn * s.lambda[ell] * std::pow(two_cos(q), -ell);
  }
  return pointwise_product(lovasz_assignment(n, q), inverse_dft(hhat));
}

namespace {

// K_ell(u; q') at integer u together with the orthogonality weights and norms.
struct IntegerKrawtchouk {
  int n;
  long double qp;
  std::vector<long double> values;  // values[ell * (n + 1) + u]
  std::vector<long double> weight;  // (q'-1)^u C(n, u)
  std::vector<long double> norm;    // q'^n (q'-1)^ell C(n, ell)

  IntegerKrawtchouk(int n_, long double qp_) : n(n_), qp(qp_), values((n_ + 1) * (n_ + 1)), weight(n_ + 1), norm(n_ + 1) {
    for (int ell = 0; ell <= n; ++ell) {
      for (int u = 0; u <= n; ++u) values[ell * (n + 1) + u] = krawtchouk_extended(n, qp, ell, u);
    }
    for (int u = 0; u <= n; ++u) {
      weight[u] = std::pow(qp - 1, u) * std::exp2(static_cast<long double>(log_binomial(n, u)));
      norm[u] = std::pow(qp, n) * weight[u];
    }
  }
  long double at(int ell, int u) const { return values[ell * (n + 1) + u]; }
};

// Expansion and coefficient checks; the caller decides whether to run the
// full re-verification.
MrrwResult expand_mrrw(const IntegerKrawtchouk& table, int d, double qprime, int t, double a) {
  using Real = long double;
  const int n = table.n;
  const Real qp = table.qp;
  const Real kt_a = krawtchouk_extended(n, qp, t, a);
  const Real kt1_a = krawtchouk_extended(n, qp, t + 1, a);

  std::vector<Real> poly(n + 1);
  for (int u = 0; u <= n; ++u) {
    const Real gap = static_cast<Real>(a) - u;
    if (std::fabs(gap) < 1e-15L) {
      poly[u] = 0.0L;
      continue;
    }
    const Real core = kt_a * table.at(t + 1, u) - kt1_a * table.at(t, u);
    poly[u] = core * core / gap;
  }

  // Discrete orthogonality: sum_u (q'-1)^u C(n,u) K_l(u) K_m(u) = delta q'^n (q'-1)^l C(n,l).
  std::vector<Real> coeff(n + 1);
  for (int ell = 0; ell <= n; ++ell) {
    Real acc = 0.0L;
    for (int u = 0; u <= n; ++u) acc += table.weight[u] * poly[u] * table.at(ell, u);
    coeff[ell] = acc / table.norm[ell];
  }

  MrrwResult result;
  result.t = t;
  result.a = a;
  LPSolution& s = result.solution;
  s.n = n;
  s.d = d;
  s.qprime = qprime;
  if (!(coeff[0] > 0.0L)) {
    result.failure = "lambda_0 is not positive";
    result.offending_index = 0;
    return result;
  }
  s.lambda.resize(n + 1);
  s.lambda_values.resize(n + 1);
  for (int ell = 0; ell <= n; ++ell) s.lambda[ell] = static_cast<double>(coeff[ell] / coeff[0]);
  for (int u = 0; u <= n; ++u) s.lambda_values[u] = static_cast<double>(poly[u] / coeff[0]);
  s.objective = s.lambda_values[0];
  s.status = LpStatus::kOptimal;

  const double scale = std::max(1.0, std::fabs(s.objective));
  for (int ell = 0; ell <= n; ++ell) {
    if (s.lambda[ell] * static_cast<double>(table.at(ell, 0)) < -1e-9 * scale) {
      result.failure = fmt::format("coefficient lambda_{} = {} is negative", ell, s.lambda[ell]);
      result.offending_index = ell;
      return result;
    }
  }
  for (int u = d; u <= n; ++u) {
    if (s.lambda_values[u] > 1e-9 * scale) {
      result.failure = fmt::format("Lambda({}) = {} is positive", u, s.lambda_values[u]);
      result.offending_index = u;
      return result;
    }
  }
  // Clamp round-off negatives so the stored certificate re-verifies exactly.
  for (auto& l : s.lambda) l = std::max(l, 0.0);
  result.valid = true;
  return result;
}

void reverify(MrrwResult& r) {
  LPSolution& s = r.solution;
  s.lambda_values = lambda_values(s.n, s.qprime, s.lambda);
  s.objective = s.lambda_values[0];
  r.valid = check_lp_solution(s).ok;
  if (!r.valid) r.failure = "re-verification of the expanded certificate failed";
}

}  // namespace

MrrwResult mrrw_certificate(int n, int d, double qprime, int t, double a) {
  if (n < 2 || t < 1 || t >= n) throw std::domain_error("mrrw_certificate: need 1 <= t < n");
  if (d < 1 || d > n) throw std::domain_error("mrrw_certificate: need 1 <= d <= n");
  if (!(a > 0.0 && a < d)) throw std::domain_error("mrrw_certificate: need 0 < a < d");
  MrrwResult r = expand_mrrw(IntegerKrawtchouk(n, qprime), d, qprime, t, a);
  if (r.valid) reverify(r);
  return r;
}

std::optional<double> first_krawtchouk_root(int n, double qprime, int t) {
  if (t < 1 || t > n) return std::nullopt;
  constexpr double step = 1.0 / 64.0;
  auto f = [&](double u) { return krawtchouk(n, qprime, t, u); };
  double prev_u = 0.0;
  double prev = f(0.0);
  for (double u = step; u <= n + 1e-12; u += step) {
    const double cur = f(u);
    if (cur == 0.0) return u;
    if (std::signbit(cur) != std::signbit(prev)) return bisect(f, prev_u, u);
    prev_u = u;
    prev = cur;
  }
  return std::nullopt;
}

MrrwResult mrrw_search(int n, int d, double qprime) {
  if (n < 2) throw std::domain_error("mrrw_search: need n >= 2");
  if (d < 1 || d > n) throw std::domain_error("mrrw_search: need 1 <= d <= n");
  const IntegerKrawtchouk table(n, qprime);
  std::vector<std::optional<double>> roots(n + 1);
  for (int t = 1; t <= n; ++t) roots[t] = first_krawtchouk_root(n, qprime, t);

  constexpr int kGrid = 16;
  std::vector<MrrwResult> passing;
  for (int t = 1; t < n; ++t) {
    const auto& root_t = roots[t];
    const auto& root_t1 = roots[t + 1];
    if (!root_t || !root_t1) continue;
    const double lo = *root_t1;
    const double hi = std::min(*root_t, static_cast<double>(d));
    if (!(lo < hi)) continue;

    std::vector<double> candidates;
    for (int j = 1; j < kGrid; ++j) candidates.push_back(lo + (hi - lo) * j / kGrid);
    auto balance = [&](double a) { return krawtchouk(n, qprime, t, a) + krawtchouk(n, qprime, t + 1, a); };
    if (std::signbit(balance(lo)) != std::signbit(balance(hi))) candidates.push_back(bisect(balance, lo, hi));

    for (double a : candidates) {
      if (!(a > 0.0 && a < d)) continue;
      MrrwResult r = expand_mrrw(table, d, qprime, t, a);
      if (r.valid) passing.push_back(std::move(r));
    }
  }
  std::stable_sort(passing.begin(), passing.end(), [](const MrrwResult& x, const MrrwResult& y) {
    return x.solution.objective < y.solution.objective;
  });
  for (auto& r : passing) {
    reverify(r);
    if (r.valid) return r;
  }

  MrrwResult best;
  best.failure = "no valid certificate in the (t, a) window; using the LP optimum";
  best.solution = lp_solve_lambda(n, d, qprime);
  best.from_lp_fallback = true;
  return best;
}

MaxCode brute_force_max_code(int n, ExtendedWeight d) {
  const std::size_t size = checked_power(5, n, 500);
  if (n < 1 || size == 0) throw std::length_error("brute_force_max_code: need 1 <= n and 5^n <= 500");
  std::vector<Word> words(size);
  for (std::size_t i = 0; i < size; ++i) words[i] = word_from_index(i, n, 5);
  Graph g(static_cast<int>(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (seq_distance(words[a], words[b]) >= d) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  MaxCode result;
  result.code.q = 5;
  for (int v : max_clique(g)) result.code.words.push_back(words[v]);
  result.size = result.code.size();
  return result;
}

}  // namespace typewriter
