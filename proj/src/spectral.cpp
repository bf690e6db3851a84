#include "boundedcf/spectral.hpp"

#include <cmath>
#include <numbers>

namespace boundedcf {

void chebyshev_lobatto(std::size_t m, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(m);
  weights.resize(m);
  const double n = static_cast<double>(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    // (1 - cos t)/2 = sin^2(t/2), accurate near x = 0
    const double s = std::sin(std::numbers::pi * static_cast<double>(j) / (2.0 * n));
    nodes[j] = s * s;
    weights[j] = (j % 2 == 0) ? 1.0 : -1.0;
  }
  nodes.front() = 0.0;
  nodes.back() = 1.0;
  weights.front() *= 0.5;
  weights.back() *= 0.5;
}

double OperatorGrid::interpolate(std::span<const double> values, double x) const {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double diff = x - nodes[j];
    if (diff == 0.0) return values[j];
    const double t = bary_weights[j] / diff;
    num += t * values[j];
    den += t;
  }
  return num / den;
}

OperatorGrid build_operator(std::uint64_t bound, double sigma, double u, std::size_t m,
                            std::uint64_t min_digit) {
  if (min_digit < 1 || bound < min_digit) throw DomainError("need bound >= min_digit >= 1");
  if (sigma < 0.0) throw DomainError("sigma must be nonnegative");
  if (m < 8) throw DomainError("at least 8 collocation nodes are required");

  OperatorGrid grid;
  grid.bound = bound;
  grid.min_digit = min_digit;
  grid.sigma = sigma;
  grid.u = u;
  chebyshev_lobatto(m, grid.nodes, grid.bary_weights);
  grid.matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));

  const double scale = std::exp(u);
  std::vector<double> cardinal(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = grid.nodes[i];
    for (std::uint64_t a = min_digit; a <= bound; ++a) {
      const double xa = x + static_cast<double>(a);
      const double weight = std::pow(xa, -2.0 * sigma) * scale;
      const double y = 1.0 / xa;
      // cardinal functions c_j(y) of the barycentric form
      double den = 0.0;
      std::size_t hit = m;
      for (std::size_t j = 0; j < m; ++j) {
        const double diff = y - grid.nodes[j];
        if (diff == 0.0) {
          hit = j;
          break;
        }
        cardinal[j] = grid.bary_weights[j] / diff;
        den += cardinal[j];
      }
      if (hit < m) {
        grid.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(hit)) += weight;
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        grid.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += weight * cardinal[j] / den;
      }
    }
  }
  return grid;
}

SpectralData dominant_eig(const OperatorGrid& grid, double tol, int max_iterations) {
  const auto m = static_cast<Eigen::Index>(grid.size());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd mv = grid.matrix * v;
  SpectralData out;
  out.m = grid.size();
  for (int it = 1; it <= max_iterations; ++it) {
    const double lambda = mv.dot(v) / v.dot(v);
    const double residual = (mv - lambda * v).cwiseAbs().maxCoeff() / v.cwiseAbs().maxCoeff();
    if (residual < tol) {
      out.lambda = lambda;
      out.residual = residual;
      out.iterations = it;
      out.eigenfunction.assign(v.data(), v.data() + m);
      return out;
    }
    const double norm = mv.cwiseAbs().maxCoeff();
    if (!(norm > 0.0) || !std::isfinite(norm)) break;
    v = mv / norm;
    mv = grid.matrix * v;
  }
  throw ConvergenceError("power iteration did not converge (sigma=" + std::to_string(grid.sigma) +
                         ", m=" + std::to_string(grid.size()) + ")");
}

double leading_eigenvalue(std::uint64_t bound, double sigma, double u, std::size_t m) {
  return dominant_eig(build_operator(bound, sigma, u, m)).lambda;
}

namespace {

struct Bisection {
  double lo;
  double hi;
  double lambda_lo;
  double lambda_hi;
  int iterations;
};

// Root of lambda(sigma) = 1 for the decreasing map sigma -> lambda(sigma, u).
Bisection bisect(std::uint64_t bound, double u, double lo, double hi, double tol, std::size_t m) {
  const double lambda_lo = leading_eigenvalue(bound, lo, u, m);
  const double lambda_hi = leading_eigenvalue(bound, hi, u, m);
  if (!(lambda_lo > 1.0) || !(lambda_hi < 1.0)) {
    throw BracketError("no root of lambda(sigma) = 1 in [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]: lambda = " + std::to_string(lambda_lo) + ", " +
                       std::to_string(lambda_hi));
  }
  Bisection b{lo, hi, lambda_lo, lambda_hi, 0};
  while (b.hi - b.lo > tol && b.iterations < kBisectionCap) {
    const double mid = 0.5 * (b.lo + b.hi);
    const double lambda = leading_eigenvalue(bound, mid, u, m);
    if (lambda > 1.0) {
      b.lo = mid;
      b.lambda_lo = lambda;
    } else {
      b.hi = mid;
      b.lambda_hi = lambda;
    }
    ++b.iterations;
  }
  return b;
}

constexpr double kSigmaFloor = 1e-6;

}  // namespace

DimensionResult solve_dimension(std::uint64_t bound, double tol, std::size_t m) {
  if (bound < 1) throw DomainError("digit bound must be >= 1");
  const Bisection b = bisect(bound, 0.0, kSigmaFloor, 1.0, tol, m);
  const Bisection check = bisect(bound, 0.0, kSigmaFloor, 1.0, tol, 2 * m);
  DimensionResult r;
  r.bound = bound;
  r.lo = b.lo;
  r.hi = b.hi;
  r.delta = 0.5 * (b.lo + b.hi);
  r.lambda_lo = b.lambda_lo;
  r.lambda_hi = b.lambda_hi;
  r.m = m;
  r.delta_check = 0.5 * (check.lo + check.hi);
  r.residual = dominant_eig(build_operator(bound, r.delta, 0.0, m)).residual;
  r.iterations = b.iterations;
  return r;
}

PoleResult solve_pole(std::uint64_t bound, double w, double tol, std::size_t m, double window) {
  if (std::abs(w) > window) {
    throw BracketError("w = " + std::to_string(w) + " is outside the window |w| <= " +
                       std::to_string(window));
  }
  double hi = 1.0;
  while (leading_eigenvalue(bound, hi, w, m) >= 1.0 && hi < 16.0) hi *= 2.0;
  const Bisection b = bisect(bound, w, kSigmaFloor, hi, tol, m);
  const Bisection check = bisect(bound, w, kSigmaFloor, hi, tol, 2 * m);
  PoleResult r;
  r.bound = bound;
  r.w = w;
  r.lo = b.lo;
  r.hi = b.hi;
  r.s0 = 0.5 * (b.lo + b.hi);
  r.m = m;
  r.s0_check = 0.5 * (check.lo + check.hi);
  r.iterations = b.iterations;
  return r;
}

double operator_series_at_zero(std::uint64_t bound, double sigma, double w, std::size_t depth,
                               std::size_t m) {
  if (depth < 1) throw DomainError("series depth must be >= 1");
  const OperatorGrid grid = build_operator(bound, sigma, w, m);
  const auto size = static_cast<Eigen::Index>(m);
  Eigen::VectorXd term = Eigen::VectorXd::Ones(size);
  Eigen::VectorXd partial = term;
  for (std::size_t n = 1; n < depth; ++n) {
    term = grid.matrix * term;
    partial += term;
  }
  const std::span<const double> values(partial.data(), m);
  double sum = 0.0;
  for (std::uint64_t a = 2; a <= bound; ++a) {
    const double ad = static_cast<double>(a);
    sum += std::pow(ad, -2.0 * sigma) * std::exp(w) * grid.interpolate(values, 1.0 / ad);
  }
  return sum;
}

}  // namespace boundedcf
