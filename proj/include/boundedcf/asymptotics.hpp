#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boundedcf/count_table.hpp"
#include "boundedcf/enumeration.hpp"
#include "boundedcf/quadratic.hpp"

namespace boundedcf {

struct Sample {
  std::uint64_t N = 0;
  double count = 0.0;
};

/// Least-squares line through (log N, log count).
struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_se = 0.0;  // residual standard error, 0 for exactly 2 points
  double slope_se = 0.0;
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
  std::size_t points = 0;
  std::vector<Sample> samples;  // the positive samples that were fitted

  double predict(double N) const;
};

/// Drops samples with count <= 0; throws DomainError if fewer than 3 remain.
PowerLawFit fit_exponent(std::span<const Sample> samples);

/// Slopes between consecutive fitted samples.
std::vector<double> local_slopes(const PowerLawFit& fit);

/// Fit of |Omega_N| = cumulative count over the grid.
PowerLawFit omega_fit(const CountTable& table, std::span<const std::uint64_t> N_grid);

struct RatioPoint {
  std::uint64_t N = 0;
  double psi = 0.0;    // sum_{n <= N} weighted_n(w)
  double ratio = 0.0;  // psi / N^(2 s0)
};

/// Psi_w(N) / N^(2 s0(w)) along the grid. Throws DomainError when the table
/// stops before the largest N.
std::vector<RatioPoint> estimate_B(const CountTable& table, double w, double s0,
                                   std::span<const std::uint64_t> N_grid);

/// (max - min) / mean of the ratios with N >= from_N.
double relative_spread(std::span<const RatioPoint> points, std::uint64_t from_N = 0);

struct SmoothingRecord {
  std::uint64_t N = 0;
  std::uint64_t width = 0;  // floor(N eps)
  std::uint64_t n_low = 0;
  std::uint64_t sigma = 0;  // |Sigma_N|
  std::uint64_t thickened = 0;
  std::uint64_t omega = 0;
  /// thickened / (2 width N^(2 delta - 1)); empty when width = 0.
  std::optional<double> ratio;
  bool inclusion_ok = false;  // sigma <= thickened <= omega
};

struct SmoothingReport {
  double gamma = 0.0;
  double delta = 0.0;
  std::vector<SmoothingRecord> records;
  PowerLawFit fit;            // thickened counts
  double predicted = 0.0;     // 2 delta - gamma/2
  std::optional<PowerLawFit> window_fit;  // floor(N eps) against N
  double predicted_window_slope = 0.0;    // 1 - gamma/2
  bool inclusion_ok = false;
};

/// Thickened counts from an existing table and a known delta_A.
SmoothingReport smoothing_experiment(const CountTable& table, double delta, double gamma,
                                     std::span<const std::uint64_t> N_grid);

/// Enumerates to the top of the grid and solves for delta_A first.
SmoothingReport smoothing_experiment(std::uint64_t bound, double gamma,
                                     std::span<const std::uint64_t> N_grid, unsigned threads = 1,
                                     std::size_t m = 32);

/// Fit of |Omega_{N,A_d}| (keyed by ht^2) against N; the slope estimates
/// delta_{A_d}. Throws DomainError for an empty alphabet or too few
/// positive counts.
PowerLawFit complex_exponent_fit(const QuadraticField& field, std::span<const QuadElement> alphabet,
                                 std::span<const std::uint64_t> N_grid, unsigned threads = 1);

/// Same fit on an existing complex table.
PowerLawFit complex_exponent_fit(const CountTable& table, std::span<const std::uint64_t> N_grid);

}  // namespace boundedcf
