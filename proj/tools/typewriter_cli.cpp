// Command-line front end for the typewriter-channel bound toolkit.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "typewriter/bounds.hpp"
#include "typewriter/channel.hpp"
#include "typewriter/construction.hpp"
#include "typewriter/expurgated.hpp"
#include "typewriter/io.hpp"
#include "typewriter/lp_certificate.hpp"
#include "typewriter/verify.hpp"

namespace tw = typewriter;

namespace {

// Ordered key=value record of every resolved option.
class ResolvedConfig {
 public:
  explicit ResolvedConfig(std::string subcommand) { add("subcommand", std::move(subcommand)); }

  template <typename T>
  void add(const std::string& key, const T& value) {
    if constexpr (std::is_floating_point_v<T>) {
      entries_.emplace_back(key, fmt::format("{:.17g}", value));
    } else {
      entries_.emplace_back(key, fmt::format("{}", value));
    }
  }

  std::string str() const {
    std::string s;
    for (const auto& [k, v] : entries_) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Writes to a file, or stdout when path is "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void log_config(const ResolvedConfig& config) { std::cerr << "config: " << config.str() << '\n'; }

tw::ExtendedWeight parse_distance(const std::string& text) {
  try {
    return tw::ExtendedWeight::parse(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--d", "expected a nonnegative integer or 'inf', got '" + text + "'");
  }
}

struct CurvesOptions {
  double rmin = tw::bound_constants().zero_error_capacity;
  double rmax = tw::bound_constants().capacity;
  int samples = 161;
  std::string out = "-";
};

int run_curves(const CurvesOptions& o) {
  ResolvedConfig config("curves");
  config.add("rmin", o.rmin);
  config.add("rmax", o.rmax);
  config.add("samples", o.samples);
  config.add("out", o.out);
  log_config(config);
  const auto curves = tw::sample_curves(o.rmin, o.rmax, o.samples);
  Output out(o.out);
  out.stream() << tw::provenance_line(config.str());
  tw::write_curves_csv(out.stream(), curves);
  return 0;
}

int run_figure1(const std::string& out_dir) {
  const auto& c = tw::bound_constants();
  ResolvedConfig config("figure1");
  config.add("out-dir", out_dir);
  config.add("rmin", c.zero_error_capacity);
  config.add("rmax", c.capacity);
  config.add("samples", 161);
  log_config(config);
  std::filesystem::create_directories(out_dir);
  const auto csv_path = std::filesystem::path(out_dir) / "figure1.csv";
  const auto script_path = std::filesystem::path(out_dir) / "plot_figure1.py";
  {
    Output out(csv_path.string());
    out.stream() << tw::provenance_line(config.str());
    tw::write_curves_csv(out.stream(), tw::sample_curves(c.zero_error_capacity, c.capacity, 161));
  }
  {
    Output out(script_path.string());
    out.stream() << tw::figure1_plot_script("figure1.csv");
  }
  std::cout << csv_path.string() << '\n' << script_path.string() << '\n';
  return 0;
}

int run_expurgated(std::optional<double> rho, std::optional<double> rate) {
  ResolvedConfig config("expurgated");
  if (rho) config.add("rho", *rho);
  if (rate) config.add("rate", *rate);
  log_config(config);
  auto& out = std::cout;
  out << tw::provenance_line(config.str());
  out << fmt::format("rho_bar {:.17g}\n", tw::rho_bar());
  if (rho) {
    const auto ev = tw::circulant_eigenvalues(*rho);
    out << fmt::format("alpha {:.17g}\n", tw::g1_matrix(*rho).alpha);
    out << "eigenvalues";
    for (double v : ev) out << fmt::format(" {:.17g}", v);
    out << '\n';
    out << fmt::format("ex_exponent_inf {:.17g}\n", tw::ex_exponent_inf(*rho));
    out << fmt::format("q1_uniform {:.17g}\n", tw::q_form(*rho, tw::uniform_distribution(1)));
    const tw::Code code = tw::shannon_code2();
    out << fmt::format("q2_shannon_code {:.17g}\n", tw::q_form(*rho, tw::code_indicator(code)));
    std::vector<tw::Rational> probs(25, tw::Rational(0));
    for (const auto& w : code.words) probs[tw::word_index(w, 5)] = tw::Rational(1, 5);
    const auto coeff = tw::q_form_coefficients(2, probs);
    out << "q2_shannon_code_exact";
    for (const auto& c : coeff) out << ' ' << c.numerator() << '/' << c.denominator();
    out << '\n';
  }
  if (rate) {
    const double e = tw::e_ex2(*rate);
    out << "e_ex2 " << (std::isinf(e) ? std::string("inf") : fmt::format("{:.17g}", e)) << '\n';
  }
  return 0;
}

struct GvOptions {
  int n = 2;
  int k = 1;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  std::string out = "-";
};

int run_gv(const GvOptions& o) {
  ResolvedConfig config("gv");
  config.add("n", o.n);
  config.add("k", o.k);
  config.add("seed", o.seed);
  config.add("exhaustive", o.exhaustive);
  config.add("out", o.out);
  log_config(config);
  const tw::Z5Matrix g = tw::sample_random_G(o.n, o.k, o.seed);
  const tw::GeneratorPlus gp(o.n, o.k, g);
  const tw::Spectrum spectrum = tw::enumerate_spectrum(gp);
  {
    Output out(o.out);
    out.stream() << tw::provenance_line(config.str());
    tw::write_spectrum_csv(out.stream(), spectrum);
  }
  std::cerr << "G =";
  for (int r = 0; r < g.rows(); ++r) {
    std::cerr << (r ? " /" : "");
    for (int c = 0; c < g.cols(); ++c) std::cerr << ' ' << int(g.at(r, c));
  }
  std::cerr << '\n';
  std::cerr << fmt::format("union_bound_pe {:.17g}\n", tw::union_bound_pe(spectrum));
  std::cerr << fmt::format("structured_union_bound {:.17g}\n", tw::structured_union_bound(tw::hamming_spectrum(g)));
  if (o.exhaustive) {
    // Materialise every codeword through the assembled G+ and weigh it directly.
    const tw::Z5Matrix full = gp.assembled();
    tw::Spectrum direct;
    const std::size_t messages = tw::checked_power(5, o.n + o.k, tw::kEnumerationLimit);
    for (std::size_t m = 0; m < messages; ++m) {
      direct.add(tw::typewriter_weight(full.left_multiply(tw::word_from_index(m, o.n + o.k, 5))));
    }
    const bool match = direct == spectrum;
    std::cerr << "direct_spectrum_match " << (match ? "yes" : "no") << '\n';
    if (!match) return 1;
  }
  return 0;
}

struct LpOptions {
  int n = 1;
  std::string d = "1";
  bool mrrw = false;
  std::optional<int> t;
  std::optional<double> a;
  std::string out;
};

int run_lp(const LpOptions& o) {
  const tw::ExtendedWeight d = parse_distance(o.d);
  ResolvedConfig config("lp");
  config.add("n", o.n);
  config.add("d", d.to_string());
  config.add("mrrw", o.mrrw);
  if (o.t) config.add("t", *o.t);
  if (o.a) config.add("a", *o.a);
  config.add("out", o.out.empty() ? std::string("none") : o.out);
  log_config(config);

  const double qprime = tw::krawtchouk_parameter(5);
  std::cout << tw::provenance_line(config.str());
  std::cout << fmt::format("lovasz_bound {:.17g}\n", tw::lovasz_bound(o.n, 5));
  if (d.is_infinite() || static_cast<int>(d.value()) > o.n || d.value() == 0) {
    std::cout << fmt::format("composite_bound {:.17g}\n", tw::composite_bound(o.n, d));
    return 0;
  }
  const int dist = static_cast<int>(d.value());
  tw::LPSolution solution;
  if (o.mrrw) {
    tw::MrrwResult r = (o.t && o.a) ? tw::mrrw_certificate(o.n, dist, qprime, *o.t, *o.a)
                                    : tw::mrrw_search(o.n, dist, qprime);
    if (!r.valid && !r.from_lp_fallback) {
      std::cerr << "mrrw certificate invalid: " << r.failure << " (index " << r.offending_index << ")\n";
      return 1;
    }
    if (r.from_lp_fallback) std::cerr << "mrrw: " << r.failure << '\n';
    std::cout << fmt::format("mrrw_t {}\nmrrw_a {:.17g}\n", r.t, r.a);
    solution = std::move(r.solution);
  } else {
    solution = tw::lp_solve_lambda(o.n, dist, qprime);
  }
  std::cout << "lp_status " << tw::to_string(solution.status) << '\n';
  std::cout << fmt::format("lp_objective {:.17g}\n", solution.objective);
  std::cout << fmt::format("composite_bound {:.17g}\n", tw::lovasz_bound(o.n, 5) * solution.objective);
  if (!o.out.empty()) {
    Output out(o.out);
    out.stream() << tw::provenance_line(config.str());
    tw::write_certificate(out.stream(), solution);
  }
  return solution.status == tw::LpStatus::kOptimal ? 0 : 1;
}

int run_maxcode(int n, const std::string& d_text, const std::string& out_path) {
  const tw::ExtendedWeight d = parse_distance(d_text);
  ResolvedConfig config("maxcode");
  config.add("n", n);
  config.add("d", d.to_string());
  config.add("out", out_path.empty() ? std::string("none") : out_path);
  log_config(config);
  const auto best = tw::brute_force_max_code(n, d);
  std::cout << best.size << '\n';
  if (!out_path.empty()) {
    Output out(out_path);
    out.stream() << tw::provenance_line(config.str());
    tw::write_code(out.stream(), best.code);
  }
  return 0;
}

int run_simulate(const std::string& code_path, std::uint64_t trials, std::uint64_t seed, int threads,
                 const std::string& out_path) {
  ResolvedConfig config("simulate");
  config.add("code", code_path);
  config.add("trials", trials);
  config.add("seed", seed);
  config.add("threads", threads);
  config.add("out", out_path);
  log_config(config);
  std::ifstream in(code_path);
  if (!in) throw std::runtime_error(fmt::format("cannot open code file '{}'", code_path));
  const tw::Code code = tw::read_code(in);
  const tw::SimResult result = tw::monte_carlo_pe(code, trials, seed, threads);
  Output out(out_path);
  out.stream() << tw::provenance_line(config.str());
  tw::write_sim_result_csv(out.stream(), result);
  return 0;
}

int run_verify(const std::string& suite, bool list) {
  ResolvedConfig config("verify");
  config.add("suite", suite.empty() ? std::string("all") : suite);
  log_config(config);
  if (list) {
    for (const auto& s : tw::suite_registry()) {
      std::cout << fmt::format("{:<22} {:<26} {}\n", s.module, s.name, s.description);
    }
    return 0;
  }
  int failures = 0;
  int ran = 0;
  for (const auto& s : tw::suite_registry()) {
    if (!suite.empty() && s.name != suite && s.module != suite) continue;
    ++ran;
    const tw::SuiteResult r = s.run();
    std::cout << fmt::format("[{}] {}/{}\n", r.pass ? "PASS" : "FAIL", s.module, s.name);
    for (const auto& d : r.details) std::cout << "    " << d << '\n';
    std::cout.flush();
    failures += !r.pass;
  }
  if (ran == 0) {
    std::cerr << "no suite named '" << suite << "'\n";
    return 2;
  }
  std::cout << fmt::format("{} suites, {} failed\n", ran, failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on the reliability function of the 5-input typewriter channel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tw::kToolVersion);

  CurvesOptions curves;
  auto* curves_cmd = app.add_subcommand("curves", "Sample the five bound curves as CSV");
  curves_cmd->add_option("--rmin", curves.rmin, "Smallest rate (bits)");
  curves_cmd->add_option("--rmax", curves.rmax, "Largest rate (bits)");
  curves_cmd->add_option("--samples", curves.samples, "Number of equally spaced rates")->check(CLI::Range(2, 1000000));
  curves_cmd->add_option("--out", curves.out, "Output CSV path, '-' for stdout");

  std::string out_dir = ".";
  auto* fig_cmd = app.add_subcommand("figure1", "Write the 161-sample bound-curve CSV and a plot script");
  fig_cmd->add_option("--out-dir", out_dir, "Output directory");

  std::optional<double> rho, rate;
  auto* exp_cmd = app.add_subcommand("expurgated", "Expurgated-exponent quantities");
  auto* rho_opt = exp_cmd->add_option("--rho", rho, "rho >= 1")->check(CLI::Range(1.0, 1e9));
  auto* rate_opt = exp_cmd->add_option("--rate", rate, "Rate in bits");
  rho_opt->excludes(rate_opt);
  exp_cmd->require_option(1);

  GvOptions gv;
  auto* gv_cmd = app.add_subcommand("gv", "Spectrum and union bound of a random G+ code");
  gv_cmd->add_option("--n", gv.n, "Half block length")->required()->check(CLI::Range(1, 12));
  gv_cmd->add_option("--k", gv.k, "Rows of G")->required()->check(CLI::Range(1, 12));
  gv_cmd->add_option("--seed", gv.seed, "Seed for G");
  gv_cmd->add_flag("--exhaustive", gv.exhaustive, "Cross-check against directly encoded codewords");
  gv_cmd->add_option("--out", gv.out, "Spectrum CSV path, '-' for stdout");

  LpOptions lp;
  auto* lp_cmd = app.add_subcommand("lp", "Composite Lovász / linear programming bound");
  lp_cmd->add_option("--n", lp.n, "Block length")->required()->check(CLI::Range(1, 64));
  lp_cmd->add_option("--d", lp.d, "Minimum typewriter distance or 'inf'")->required();
  lp_cmd->add_flag("--mrrw", lp.mrrw, "Use the MRRW-style polynomial certificate");
  auto* t_opt = lp_cmd->add_option("--t", lp.t, "MRRW degree parameter");
  auto* a_opt = lp_cmd->add_option("--a", lp.a, "MRRW root parameter");
  t_opt->needs(a_opt);
  a_opt->needs(t_opt);
  lp_cmd->add_option("--out", lp.out, "Certificate file path");

  int max_n = 1;
  std::string max_d = "inf";
  std::string max_out;
  auto* max_cmd = app.add_subcommand("maxcode", "Exact maximum code size by clique search");
  max_cmd->add_option("--n", max_n, "Block length")->required()->check(CLI::Range(1, 3));
  max_cmd->add_option("--d", max_d, "Minimum typewriter distance or 'inf'")->required();
  max_cmd->add_option("--out", max_out, "Code file path");

  std::string code_path;
  std::uint64_t trials = 100000;
  std::uint64_t sim_seed = 1;
  int threads = 1;
  std::string sim_out = "-";
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo block error rate of a code");
  sim_cmd->add_option("--code", code_path, "Code file (base-5 digits per line)")->required();
  sim_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim_seed, "Seed");
  sim_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  sim_cmd->add_option("--out", sim_out, "Result CSV path, '-' for stdout");

  std::string suite;
  bool list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("--suite", suite, "Suite or module name");
  verify_cmd->add_flag("--list", list, "List the suite registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*curves_cmd) return run_curves(curves);
    if (*fig_cmd) return run_figure1(out_dir);
    if (*exp_cmd) return run_expurgated(rho, rate);
    if (*gv_cmd) return run_gv(gv);
    if (*lp_cmd) return run_lp(lp);
    if (*max_cmd) return run_maxcode(max_n, max_d, max_out);
    if (*sim_cmd) return run_simulate(code_path, trials, sim_seed, threads, sim_out);
    if (*verify_cmd) return run_verify(suite, list);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
