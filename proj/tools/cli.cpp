#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "boundedcf/asymptotics.hpp"
#include "boundedcf/complex_cf.hpp"
#include "boundedcf/enumeration.hpp"
#include "boundedcf/grid.hpp"
#include "boundedcf/real_cf.hpp"
#include "boundedcf/report.hpp"
#include "boundedcf/spectral.hpp"

namespace boundedcf::cli {

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

unsigned default_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

struct Output {
  unsigned threads = default_threads();
  std::string format = "csv";
  std::string path;
};

void add_common(CLI::App* sub, Output& o, bool with_format) {
  sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  if (with_format) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }
  sub->add_option("--out", o.path, "output file");
}

// Writes through `emit` to the --out file, or to `fallback` when none is set.
void write_output(const Output& o, std::ostream& fallback, const std::function<void(std::ostream&)>& emit) {
  if (o.path.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + o.path + " for writing");
  emit(file);
  if (!file) throw std::runtime_error("write to " + o.path + " failed");
}

Json table_json(const CountTable& table, const std::vector<double>& w_grid) {
  Json rows = Json::array();
  const bool weighted = table.has_lengths();
  for (std::uint64_t n = 0; n <= table.max_key(); ++n) {
    const auto c = table.count(n);
    if (c == 0) continue;
    Json row{{"n", n}, {"count", c}};
    if (weighted) {
      Json values = Json::array();
      for (const double w : w_grid) values.push_back(table.weighted(n, w));
      row["weighted"] = values;
    }
    rows.push_back(row);
  }
  Json j;
  j["w_grid"] = weighted ? Json(w_grid) : Json::array();
  j["rows"] = rows;
  return j;
}

void emit_table(const Output& o, std::ostream& fallback, const CountTable& table,
                const std::vector<double>& w_grid, Json meta) {
  write_output(o, fallback, [&](std::ostream& s) {
    if (o.format == "json") {
      Json j = std::move(meta);
      j.update(table_json(table, w_grid));
      write_json(s, j);
    } else {
      write_csv(s, table, w_grid);
    }
  });
}

std::string join_digits(const std::vector<std::string>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ", ";
    s += parts[i];
  }
  return s + "]";
}

// ---------------------------------------------------------------- expand

struct ExpandArgs {
  std::string value;
  int d = 0;
};

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  std::vector<std::string> parts;
  bool verified = false;
  if (a.d == 0) {
    const ExactRational x = parse_rational(a.value);
    const auto digits = cf_expand(x);
    for (const auto& dgt : digits) parts.push_back(dgt.str());
    verified = reconstruct(digits) == x;
  } else {
    const QuadraticField field(a.d);
    const QuadElement z = parse_quad(field, a.value);
    const auto digits = cf_expand_complex(field, z);
    for (const auto& dgt : digits) parts.push_back(to_string(dgt));
    verified = digits.empty() ? z.is_zero() : reconstruct_complex(field, digits) == z;
  }
  out << join_digits(parts) << (verified ? " verified" : " NOT verified") << '\n';
  return verified ? kOk : kVerifyFailed;
}

// ----------------------------------------------------------------- count

struct CountArgs {
  std::uint64_t A = 2;
  std::string N = "2^16";
  double gamma = kUnset;
  std::string w_grid = "-0.2,-0.1,0,0.1,0.2";
  bool no_weights = false;
  Output o;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  if (a.A < 2) throw DomainError("counting needs A >= 2");
  const std::uint64_t N = parse_count(a.N);
  const auto w_grid = a.no_weights ? std::vector<double>{} : parse_real_list(a.w_grid);
  const CountTable table = enumerate_real(a.A, N, !a.no_weights, a.o.threads);
  out << "Omega=" << omega_count(table, N) << " Sigma_N=" << sigma_count(table, N) << '\n';
  if (!std::isnan(a.gamma)) {
    const auto window = ThickenedWindow::for_gamma(N, a.gamma);
    out << "Thickened=" << thickened_count(table, window) << " window=[" << window.n_low << ", "
        << window.N << "]\n";
  }
  if (!a.o.path.empty()) emit_table(a.o, out, table, w_grid, Json{{"A", a.A}, {"N", N}});
  return kOk;
}

// ------------------------------------------------------------- dimension

struct SpectralArgs {
  std::uint64_t A = 2;
  std::size_t m = 32;
  double tol = kDefaultBisectionTol;
  std::string w_grid = "-0.2,-0.1,0,0.1,0.2";
  double window = 0.3;
  Output o;
};

void check_spectral(const SpectralArgs& a) {
  if (a.m < 8) throw DomainError("m must be >= 8");
  if (!(a.tol > 0.0)) throw DomainError("tol must be positive");
  if (a.A == 1) throw DomainError("dimension is 0 (degenerate alphabet)");
  if (a.A < 1) throw DomainError("A must be >= 2");
}

int cmd_dimension(const SpectralArgs& a, std::ostream& out) {
  check_spectral(a);
  const auto result = solve_dimension(a.A, a.tol, a.m);
  write_output(a.o, out, [&](std::ostream& s) { write_json(s, to_json(result)); });
  return kOk;
}

int cmd_pole(const SpectralArgs& a, std::ostream& out) {
  check_spectral(a);
  Json records = Json::array();
  for (const double w : parse_real_list(a.w_grid)) {
    records.push_back(to_json(solve_pole(a.A, w, a.tol, a.m, a.window)));
  }
  write_output(a.o, out, [&](std::ostream& s) { write_json(s, records); });
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::uint64_t A = 2;
  std::string N_max = "2^16";
  double gamma = 0.5;
  bool identity_only = false;
  double inject_delta = kUnset;
  std::size_t m = 32;
  double tol = kDefaultBisectionTol;
  Output o;
};

constexpr double kIdentityTol = 1e-8;
constexpr double kExponentTol = 0.03;
constexpr double kSmoothingTol = 0.05;
constexpr double kWindowTol = 0.02;

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.A < 2) throw DomainError("verify needs A >= 2");
  if (!(a.gamma > 0.0)) throw DomainError("gamma must be positive");
  Json checks = Json::array();
  int failures = 0;
  auto report = [&](const std::string& name, bool pass, const std::string& detail, Json data) {
    out << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    data["check"] = name;
    data["pass"] = pass;
    checks.push_back(std::move(data));
    if (!pass) ++failures;
  };

  {
    double worst = 0.0;
    for (const double sigma : {0.7, 0.8}) {
      for (const double w : {0.0, 0.1}) {
        const double series = operator_series_at_zero(a.A, sigma, w, 10, a.m);
        const double orbit = truncated_orbit_sum(a.A, sigma, w, 10);
        worst = std::max(worst, std::abs(series - orbit));
      }
    }
    report("identity", worst <= kIdentityTol,
           "max |series - orbit sum| = " + shortest_decimal(worst) + " (tol " + shortest_decimal(kIdentityTol) + ")",
           Json{{"max_abs_diff", worst}, {"tol", kIdentityTol}});
  }

  if (!a.identity_only) {
    const std::uint64_t N_max = parse_count(a.N_max);
    const auto k_max = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(N_max))));
    if (k_max < 10) throw DomainError("verify needs N-max >= 2^10");
    const auto grid = dyadic_grid(std::max(4u, k_max - 8), k_max);
    const double delta = std::isnan(a.inject_delta) ? solve_dimension(a.A, a.tol, a.m).delta : a.inject_delta;
    out << "delta=" << shortest_decimal(delta) << " grid=2^" << std::max(4u, k_max - 8) << "..2^" << k_max << '\n';
    const CountTable table = enumerate_real(a.A, grid.back(), false, a.o.threads);

    const auto fit = omega_fit(table, grid);
    const double diff = std::abs(fit.slope - 2.0 * delta);
    report("exponent", diff <= kExponentTol,
           "slope " + shortest_decimal(fit.slope) + " vs 2*delta " + shortest_decimal(2.0 * delta) +
               ", |diff| " + shortest_decimal(diff) + " (tol " + shortest_decimal(kExponentTol) + ")",
           fit_report(fit, 2.0 * delta));

    const auto smooth = smoothing_experiment(table, delta, a.gamma, grid);
    const double sdiff = std::abs(smooth.fit.slope - smooth.predicted);
    const double wdiff = smooth.window_fit ? std::abs(smooth.window_fit->slope - smooth.predicted_window_slope)
                                           : std::numeric_limits<double>::infinity();
    const bool pass = sdiff <= kSmoothingTol && wdiff <= kWindowTol && smooth.inclusion_ok;
    report("smoothing", pass,
           "slope " + shortest_decimal(smooth.fit.slope) + " vs 2*delta - gamma/2 " +
               shortest_decimal(smooth.predicted) + " (tol " + shortest_decimal(kSmoothingTol) +
               "), window slope " +
               (smooth.window_fit ? shortest_decimal(smooth.window_fit->slope) : std::string("n/a")) + " vs " +
               shortest_decimal(smooth.predicted_window_slope) + " (tol " + shortest_decimal(kWindowTol) +
               "), inclusion " + (smooth.inclusion_ok ? "ok" : "violated"),
           to_json(smooth));
  }

  out << "verify: " << (checks.size() - static_cast<std::size_t>(failures)) << '/' << checks.size()
      << " PASS\n";
  if (!a.o.path.empty()) {
    write_output(a.o, out, [&](std::ostream& s) { write_json(s, Json{{"A", a.A}, {"checks", checks}}); });
  }
  return failures == 0 ? kOk : kVerifyFailed;
}

// --------------------------------------------------------- complex-count

struct ComplexArgs {
  int d = 1;
  long long alphabet_norm = 8;
  std::string alphabet;
  std::string N = "100";
  std::string w_grid = "-0.2,-0.1,0,0.1,0.2";
  std::string fit_grid;
  bool no_weights = false;
  Output o;
};

std::vector<QuadElement> parse_alphabet(const QuadraticField& field, const std::string& text) {
  std::vector<QuadElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const QuadElement a = parse_quad(field, item);
    if (!a.is_integral()) throw DomainError("digit " + item + " is not in O_d");
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_complex_count(const ComplexArgs& a, std::ostream& out) {
  const QuadraticField field(a.d);
  const std::uint64_t N = parse_count(a.N);
  if (N < 1) throw DomainError("N must be >= 1");
  const auto alphabet = a.alphabet.empty() ? default_alphabet(field, a.alphabet_norm) : parse_alphabet(field, a.alphabet);
  const auto w_grid = a.no_weights ? std::vector<double>{} : parse_real_list(a.w_grid);
  ComplexEnumerationOptions options;
  options.collect_lengths = !a.no_weights;
  options.threads = a.o.threads;
  const CountTable table = enumerate_complex(field, alphabet, N, options);
  out << "Omega=" << omega_count(table, N) << " Sigma_N=" << sigma_count(table, N) << '\n';
  if (!a.fit_grid.empty()) {
    const auto fit = complex_exponent_fit(table, parse_grid(a.fit_grid));
    out << "slope=" << shortest_decimal(fit.slope) << " stderr=" << shortest_decimal(fit.slope_se) << '\n';
  }
  if (!a.o.path.empty()) {
    Json digits = Json::array();
    for (const auto& x : alphabet) digits.push_back(to_string(x));
    emit_table(a.o, out, table, w_grid, Json{{"d", a.d}, {"N", N}, {"alphabet", digits}});
  }
  return kOk;
}

// Appends "--key value" for every config entry whose option was not given
// on the command line, so explicit flags always take precedence.
std::vector<std::string> with_config(CLI::App& app, const std::vector<std::string>& args,
                                     const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  std::map<std::string, std::string> entries;
  try {
    entries = read_config(in);
  } catch (const std::runtime_error& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  CLI::App* sub = app.get_subcommands().front();
  std::vector<std::string> merged = args;
  for (const auto& [key, value] : entries) {
    const std::string flag = "--" + key;
    if (key == "config") throw CLI::ValidationError("--config", "config files cannot nest");
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr) throw CLI::ValidationError("--config", "unknown key '" + key + "' for " + sub->get_name());
    if (opt->count() > 0) continue;
    if (opt->get_expected_max() == 0) {
      if (value == "true" || value == "1") merged.push_back(flag);
      else if (value != "false" && value != "0") throw CLI::ValidationError(flag, "expected true or false");
    } else {
      merged.push_back(flag);
      merged.push_back(value);
    }
  }
  return merged;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-digit continued fractions: expansions, counts, spectra and asymptotics", "boundedcf"};
  app.require_subcommand(1);

  ExpandArgs expand;
  auto* s_expand = app.add_subcommand("expand", "continued-fraction digits of a rational or field element");
  s_expand->add_option("value", expand.value, "a/n, or (a+bw)/(c+ew) with --d")->required();
  s_expand->add_option("--d", expand.d, "imaginary quadratic field d in {1,2,3,7,11}; 0 for real");

  CountArgs count;
  auto* s_count = app.add_subcommand("count", "count bounded-digit rationals by denominator");
  s_count->add_option("--A", count.A, "digit bound");
  s_count->add_option("--N", count.N, "largest denominator (e.g. 5000 or 2^16)");
  s_count->add_option("--gamma", count.gamma, "also report the thickened count for this gamma");
  s_count->add_option("--w-grid", count.w_grid, "comma-separated w values for weighted columns");
  s_count->add_flag("--no-weights", count.no_weights, "skip length tracking");
  add_common(s_count, count.o, true);

  SpectralArgs dim;
  auto* s_dim = app.add_subcommand("dimension", "Hausdorff dimension of E_A");
  s_dim->add_option("--A", dim.A, "digit bound");
  s_dim->add_option("--m", dim.m, "collocation nodes");
  s_dim->add_option("--tol", dim.tol, "bisection tolerance");
  add_common(s_dim, dim.o, false);

  SpectralArgs pole;
  auto* s_pole = app.add_subcommand("pole", "pole s0(w) of the weighted series");
  s_pole->add_option("--A", pole.A, "digit bound");
  s_pole->add_option("--m", pole.m, "collocation nodes");
  s_pole->add_option("--tol", pole.tol, "bisection tolerance");
  s_pole->add_option("--w-grid", pole.w_grid, "comma-separated w values");
  s_pole->add_option("--window", pole.window, "largest admissible |w|");
  add_common(s_pole, pole.o, false);

  VerifyArgs verify;
  auto* s_verify = app.add_subcommand("verify", "operator identity, counting exponent and smoothing checks");
  s_verify->add_option("--A", verify.A, "digit bound");
  s_verify->add_option("--N-max", verify.N_max, "top of the dyadic grid");
  s_verify->add_option("--gamma", verify.gamma, "window exponent");
  s_verify->add_flag("--identity-only", verify.identity_only, "run only the operator identity check");
  s_verify->add_option("--inject-delta", verify.inject_delta, "use this delta instead of solving (test hook)");
  s_verify->add_option("--m", verify.m, "collocation nodes");
  s_verify->add_option("--tol", verify.tol, "bisection tolerance");
  add_common(s_verify, verify.o, false);

  ComplexArgs cplx;
  auto* s_cplx = app.add_subcommand("complex-count", "count field rationals by squared height");
  s_cplx->add_option("--d", cplx.d, "field d in {1,2,3,7,11}");
  s_cplx->add_option("--alphabet-norm", cplx.alphabet_norm, "attainable digits up to this norm");
  s_cplx->add_option("--alphabet", cplx.alphabet, "explicit comma-separated digits, e.g. 2+1w,1+3w");
  s_cplx->add_option("--N", cplx.N, "largest squared height");
  s_cplx->add_option("--w-grid", cplx.w_grid, "comma-separated w values for weighted columns");
  s_cplx->add_option("--fit-grid", cplx.fit_grid, "also fit the exponent over this grid, e.g. 2^4..2^10");
  s_cplx->add_flag("--no-weights", cplx.no_weights, "skip length tracking");
  add_common(s_cplx, cplx.o, true);

  std::string config_path;
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->add_option("--config", config_path, "key = value file; command-line flags take precedence");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!config_path.empty()) {
      std::vector<std::string> merged = with_config(app, args, config_path);
      std::vector<std::string> again(merged.rbegin(), merged.rend());
      app.clear();
      config_path.clear();
      app.parse(again);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  try {
    if (s_expand->parsed()) return cmd_expand(expand, out);
    if (s_count->parsed()) return cmd_count(count, out);
    if (s_dim->parsed()) return cmd_dimension(dim, out);
    if (s_pole->parsed()) return cmd_pole(pole, out);
    if (s_verify->parsed()) return cmd_verify(verify, out);
    if (s_cplx->parsed()) return cmd_complex_count(cplx, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}

}  // namespace boundedcf::cli
