#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "boundedcf/rational.hpp"

namespace boundedcf {

/// The eigen-iteration did not reach its residual tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root bracket for lambda(sigma) = 1 could not be established.
class BracketError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Collocation discretization of the transfer operator
///
///   (L f)(x) = sum_{min_digit <= a <= bound} (x + a)^(-2 sigma) e^u f(1/(x + a))
///
/// on m Chebyshev-Lobatto nodes of [0, 1]. Row i of `matrix` applied to the
/// node values of a polynomial of degree < m returns (L f)(x_i) exactly.
struct OperatorGrid {
  std::uint64_t bound = 0;
  std::uint64_t min_digit = 1;
  double sigma = 0.0;
  double u = 0.0;
  std::vector<double> nodes;         // strictly increasing, nodes[0] = 0, nodes[m-1] = 1
  std::vector<double> bary_weights;  // barycentric weights of the nodes
  Eigen::MatrixXd matrix;

  std::size_t size() const { return nodes.size(); }

  /// Barycentric interpolation of node values at x.
  double interpolate(std::span<const double> values, double x) const;
};

/// Chebyshev-Lobatto nodes mapped to [0, 1] with their barycentric weights.
void chebyshev_lobatto(std::size_t m, std::vector<double>& nodes, std::vector<double>& weights);

/// Requires bound >= min_digit >= 1, sigma >= 0 and m >= 8.
OperatorGrid build_operator(std::uint64_t bound, double sigma, double u, std::size_t m,
                            std::uint64_t min_digit = 1);

struct SpectralData {
  double lambda = 0.0;
  std::vector<double> eigenfunction;  // node values, max-normalized
  double residual = 0.0;              // max|M v - lambda v| / max|v|
  std::size_t m = 0;
  int iterations = 0;
};

/// Power iteration from the constant vector with a Rayleigh-quotient
/// eigenvalue estimate. Throws ConvergenceError after max_iterations.
SpectralData dominant_eig(const OperatorGrid& grid, double tol = 1e-13, int max_iterations = 20000);

/// Dominant eigenvalue lambda_{sigma,u,A} on an m-node grid.
double leading_eigenvalue(std::uint64_t bound, double sigma, double u, std::size_t m = 32);

struct DimensionResult {
  std::uint64_t bound = 0;
  double delta = 0.0;  // midpoint of the final bracket
  double lo = 0.0;
  double hi = 0.0;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  std::size_t m = 0;
  double delta_check = 0.0;  // same solve on 2m nodes
  double residual = 0.0;     // eigen-residual at the midpoint
  int iterations = 0;
};

inline constexpr double kDefaultBisectionTol = 1e-12;
inline constexpr int kBisectionCap = 200;

/// delta_A = dim_H(E_A): the root of lambda(sigma, 0) = 1 on (0, 1), found by
/// bisection and repeated on 2m nodes as a cross-check. Throws BracketError
/// when lambda(0+) <= 1 or lambda(1) >= 1 (e.g. bound = 1).
DimensionResult solve_dimension(std::uint64_t bound, double tol = kDefaultBisectionTol,
                                std::size_t m = 32);

struct PoleResult {
  std::uint64_t bound = 0;
  double w = 0.0;
  double s0 = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t m = 0;
  double s0_check = 0.0;  // same solve on 2m nodes
  int iterations = 0;
};

/// s0(w): the root of lambda(sigma, w) = 1. |w| must not exceed `window`.
PoleResult solve_pole(std::uint64_t bound, double w, double tol = kDefaultBisectionTol,
                      std::size_t m = 32, double window = 0.3);

/// L#_{s,w,A} applied to sum_{n<depth} L^n 1, evaluated at x = 0, where L#
/// keeps only the branches 2 <= a <= bound. For a finite depth this is the
/// orbit sum over digit strings of length <= depth ending in a digit >= 2.
double operator_series_at_zero(std::uint64_t bound, double sigma, double w, std::size_t depth,
                               std::size_t m = 32);

}  // namespace boundedcf
