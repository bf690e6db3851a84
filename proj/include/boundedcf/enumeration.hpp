#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "boundedcf/count_table.hpp"
#include "boundedcf/quadratic.hpp"

namespace boundedcf {

/// Omega_{N,A}: every reduced a/n in (0,1) with n <= N and all partial
/// quotients <= bound, counted by denominator. Depth-first over digit
/// strings, pruning once the continuant denominator exceeds N. With
/// threads > 1 the search forest is split into subtrees and the per-worker
/// tables are summed; the result is identical to the sequential run.
CountTable enumerate_real(std::uint64_t bound, std::uint64_t N, bool collect_lengths = false,
                          unsigned threads = 1);

/// Reference table: scans all reduced a/n, n <= N <= 10^5, expands each
/// exactly and keeps those with digits <= bound. Always tracks lengths.
CountTable brute_force_real(std::uint64_t bound, std::uint64_t N);

/// |Sigma_{N,A}|; 0 when N is outside the table.
std::uint64_t sigma_count(const CountTable& table, std::uint64_t N);

/// |Omega_{N,A}| = number of entries with key <= N.
std::uint64_t omega_count(const CountTable& table, std::uint64_t N);

/// The denominator window [N - floor(N eps), N] with eps = N^(-gamma/2).
struct ThickenedWindow {
  std::uint64_t N = 0;
  double gamma = 0.0;
  double epsilon = 0.0;
  std::uint64_t width = 0;  // floor(N * eps)
  std::uint64_t n_low = 0;

  /// Throws DomainError unless gamma > 0 and the window stays above 0.
  static ThickenedWindow for_gamma(std::uint64_t N, double gamma);
  /// Explicit window [n_low, N].
  static ThickenedWindow range(std::uint64_t n_low, std::uint64_t N);
};

/// |Sigma_{N,A}(eps)| = sum of counts over the window. Throws DomainError if
/// the table does not reach N.
std::uint64_t thickened_count(const CountTable& table, const ThickenedWindow& window);

/// sum over digit strings of length 1..depth with digits <= bound and last
/// digit >= 2 of q^(-2 sigma) e^(w l), with q the exact continuant.
double truncated_orbit_sum(std::uint64_t bound, double sigma, double w, std::size_t depth);

struct ComplexEnumerationOptions {
  bool collect_lengths = true;
  /// Re-expand every emitted element and compare with its digit string.
  bool validate = true;
  unsigned threads = 1;
};

/// Omega_{N,A_d} keyed by ht^2: all z in I_d with ht(z)^2 <= N whose
/// expansion uses only alphabet digits. Expansions are grown by prepending
/// digits, so every visited node is itself a valid expansion and the
/// continuant norm grows strictly along each branch.
CountTable enumerate_complex(const QuadraticField& field, std::span<const QuadElement> alphabet,
                             std::uint64_t N, const ComplexEnumerationOptions& options = {});

/// Reference table by lattice scan over reduced alpha/beta with
/// N(alpha), N(beta) <= N <= 10^4, expanded with cf_expand_complex.
CountTable brute_force_complex(const QuadraticField& field, std::span<const QuadElement> alphabet,
                               std::uint64_t N);

}  // namespace boundedcf
