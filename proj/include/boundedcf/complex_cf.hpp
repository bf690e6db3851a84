#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "boundedcf/quadratic.hpp"

namespace boundedcf {

using ComplexDigitSequence = std::vector<QuadElement>;

struct ComplexGaussStep {
  QuadElement digit;
  QuadElement remainder;
};

/// T_d(z) = 1/z - alpha with alpha the nearest lattice point to 1/z.
/// Throws DomainError for z = 0 or z outside the closed domain I_d.
ComplexGaussStep complex_gauss_step(const QuadraticField& field, const QuadElement& z);

inline constexpr std::size_t kDefaultMaxExpansionLength = 100000;

/// Iterates T_d down to 0. Returns [] for z = 0. Throws std::runtime_error
/// when the expansion exceeds max_length digits.
ComplexDigitSequence cf_expand_complex(const QuadraticField& field, const QuadElement& z,
                                       std::size_t max_length = kDefaultMaxExpansionLength);

/// Exact bottom-up evaluation of [0; alpha_1, ..., alpha_l].
QuadElement reconstruct_complex(const QuadraticField& field, std::span<const QuadElement> digits);

/// True iff some z in I_d has first digit alpha, i.e. the cylinder O_alpha
/// is nonempty under the tie-breaking rule of nearest_lattice_point.
bool is_attainable(const QuadraticField& field, const QuadElement& alpha);

/// Attainable digits of norm at most norm_bound, sorted lexicographically.
std::vector<QuadElement> default_alphabet(const QuadraticField& field, long long norm_bound);

}  // namespace boundedcf
