#include "boundedcf/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "boundedcf/spectral.hpp"

namespace boundedcf {

double PowerLawFit::predict(double N) const { return std::exp(intercept + slope * std::log(N)); }

PowerLawFit fit_exponent(std::span<const Sample> samples) {
  PowerLawFit fit;
  for (const auto& s : samples) {
    if (s.count > 0.0 && s.N > 0) fit.samples.push_back(s);
  }
  const std::size_t n = fit.samples.size();
  if (n < 3) throw DomainError("power-law fit needs at least 3 positive samples");

  double mx = 0.0;
  double my = 0.0;
  for (const auto& s : fit.samples) {
    mx += std::log(static_cast<double>(s.N));
    my += std::log(s.count);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& s : fit.samples) {
    const double dx = std::log(static_cast<double>(s.N)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(s.count) - my);
  }
  if (sxx == 0.0) throw DomainError("power-law fit needs at least two distinct N");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (const auto& s : fit.samples) {
    const double r = std::log(s.count) - (fit.intercept + fit.slope * std::log(static_cast<double>(s.N)));
    sse += r * r;
  }
  fit.residual_se = std::sqrt(sse / static_cast<double>(n - 2));
  fit.slope_se = fit.residual_se / std::sqrt(sxx);
  fit.points = n;
  const auto [lo, hi] = std::minmax_element(fit.samples.begin(), fit.samples.end(),
                                            [](const Sample& a, const Sample& b) { return a.N < b.N; });
  fit.n_min = lo->N;
  fit.n_max = hi->N;
  return fit;
}

std::vector<double> local_slopes(const PowerLawFit& fit) {
  std::vector<double> out;
  for (std::size_t i = 1; i < fit.samples.size(); ++i) {
    const auto& a = fit.samples[i - 1];
    const auto& b = fit.samples[i];
    out.push_back(std::log(b.count / a.count) /
                  std::log(static_cast<double>(b.N) / static_cast<double>(a.N)));
  }
  return out;
}

namespace {

void require_coverage(const CountTable& table, std::span<const std::uint64_t> N_grid) {
  for (const auto N : N_grid) {
    if (N > table.max_key()) {
      throw DomainError("count table stops at " + std::to_string(table.max_key()) +
                        ", grid needs " + std::to_string(N));
    }
  }
}

}  // namespace

PowerLawFit omega_fit(const CountTable& table, std::span<const std::uint64_t> N_grid) {
  require_coverage(table, N_grid);
  std::vector<Sample> samples;
  for (const auto N : N_grid) samples.push_back({N, static_cast<double>(table.cumulative(N))});
  return fit_exponent(samples);
}

std::vector<RatioPoint> estimate_B(const CountTable& table, double w, double s0,
                                   std::span<const std::uint64_t> N_grid) {
  require_coverage(table, N_grid);
  std::vector<std::uint64_t> grid(N_grid.begin(), N_grid.end());
  std::sort(grid.begin(), grid.end());
  std::vector<RatioPoint> out;
  double psi = 0.0;
  std::uint64_t n = 0;
  for (const auto N : grid) {
    for (; n <= N; ++n) psi += table.weighted(n, w);
    out.push_back({N, psi, psi / std::pow(static_cast<double>(N), 2.0 * s0)});
  }
  return out;
}

double relative_spread(std::span<const RatioPoint> points, std::uint64_t from_N) {
  double lo = 0.0;
  double hi = 0.0;
  double sum = 0.0;
  std::size_t k = 0;
  for (const auto& p : points) {
    if (p.N < from_N) continue;
    if (k == 0 || p.ratio < lo) lo = p.ratio;
    if (k == 0 || p.ratio > hi) hi = p.ratio;
    sum += p.ratio;
    ++k;
  }
  if (k == 0) throw DomainError("no ratios in range");
  return (hi - lo) / (sum / static_cast<double>(k));
}

SmoothingReport smoothing_experiment(const CountTable& table, double delta, double gamma,
                                     std::span<const std::uint64_t> N_grid) {
  if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
  require_coverage(table, N_grid);
  SmoothingReport report;
  report.gamma = gamma;
  report.delta = delta;
  report.predicted = 2.0 * delta - gamma / 2.0;
  report.predicted_window_slope = 1.0 - gamma / 2.0;
  report.inclusion_ok = true;

  std::vector<Sample> thick;
  std::vector<Sample> widths;
  for (const auto N : N_grid) {
    const auto window = ThickenedWindow::for_gamma(N, gamma);
    SmoothingRecord r;
    r.N = N;
    r.width = window.width;
    r.n_low = window.n_low;
    r.sigma = sigma_count(table, N);
    r.thickened = thickened_count(table, window);
    r.omega = omega_count(table, N);
    r.inclusion_ok = r.sigma <= r.thickened && r.thickened <= r.omega;
    if (r.width > 0) {
      r.ratio = static_cast<double>(r.thickened) /
                (2.0 * static_cast<double>(r.width) * std::pow(static_cast<double>(N), 2.0 * delta - 1.0));
    }
    report.inclusion_ok = report.inclusion_ok && r.inclusion_ok;
    thick.push_back({N, static_cast<double>(r.thickened)});
    widths.push_back({N, static_cast<double>(r.width)});
    report.records.push_back(r);
  }
  report.fit = fit_exponent(thick);
  const auto positive = std::count_if(widths.begin(), widths.end(), [](const Sample& s) { return s.count > 0; });
  if (positive >= 3) report.window_fit = fit_exponent(widths);
  return report;
}

SmoothingReport smoothing_experiment(std::uint64_t bound, double gamma,
                                     std::span<const std::uint64_t> N_grid, unsigned threads,
                                     std::size_t m) {
  if (N_grid.empty()) throw DomainError("empty N grid");
  const std::uint64_t top = *std::max_element(N_grid.begin(), N_grid.end());
  const CountTable table = enumerate_real(bound, top, false, threads);
  const double delta = solve_dimension(bound, kDefaultBisectionTol, m).delta;
  return smoothing_experiment(table, delta, gamma, N_grid);
}

PowerLawFit complex_exponent_fit(const CountTable& table, std::span<const std::uint64_t> N_grid) {
  return omega_fit(table, N_grid);
}

PowerLawFit complex_exponent_fit(const QuadraticField& field, std::span<const QuadElement> alphabet,
                                 std::span<const std::uint64_t> N_grid, unsigned threads) {
  if (alphabet.empty()) throw DomainError("empty alphabet: no data to fit");
  if (N_grid.empty()) throw DomainError("empty N grid");
  const std::uint64_t top = *std::max_element(N_grid.begin(), N_grid.end());
  ComplexEnumerationOptions options;
  options.collect_lengths = false;
  options.validate = false;
  options.threads = threads;
  return omega_fit(enumerate_complex(field, alphabet, top, options), N_grid);
}

}  // namespace boundedcf
