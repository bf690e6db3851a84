#include "boundedcf/complex_cf.hpp"

#include <cmath>
#include <stdexcept>

namespace boundedcf {

ComplexGaussStep complex_gauss_step(const QuadraticField& field, const QuadElement& z) {
  if (z.is_zero()) throw DomainError("complex_gauss_step is undefined at z = 0");
  if (!field.in_closed_domain(z)) {
    throw DomainError("complex_gauss_step requires z in I_d, got " + to_string(z));
  }
  const QuadElement w = field.inverse(z);
  QuadElement digit = field.nearest_lattice_point(w);
  QuadElement remainder = w - digit;
  return {std::move(digit), std::move(remainder)};
}

ComplexDigitSequence cf_expand_complex(const QuadraticField& field, const QuadElement& z,
                                       std::size_t max_length) {
  ComplexDigitSequence digits;
  QuadElement x = z;
  while (!x.is_zero()) {
    if (digits.size() >= max_length) {
      throw std::runtime_error("complex expansion of " + to_string(z) + " exceeded " +
                               std::to_string(max_length) + " digits");
    }
    auto step = complex_gauss_step(field, x);
    digits.push_back(std::move(step.digit));
    x = std::move(step.remainder);
  }
  return digits;
}

QuadElement reconstruct_complex(const QuadraticField& field, std::span<const QuadElement> digits) {
  if (digits.empty()) throw DomainError("reconstruct_complex needs at least one digit");
  QuadElement tail;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    const QuadElement s = *it + tail;
    if (s.is_zero()) throw DomainError("inadmissible digit list: zero denominator");
    tail = field.inverse(s);
  }
  return tail;
}

bool is_attainable(const QuadraticField& field, const QuadElement& alpha) {
  if (!alpha.is_integral() || alpha.is_zero()) return false;
  const FieldShape& f = field.shape();
  using Wide = __int128;
  const Wide au = static_cast<Wide>(numerator_of(alpha.u).convert_to<long long>());
  const Wide av = static_cast<Wide>(numerator_of(alpha.v).convert_to<long long>());

  // Every point of alpha + I_d then has modulus >= 2, so its inverse has
  // modulus <= 1/2 (the inradius) and lies in I_d.
  const double r = std::sqrt(field.covering_radius_sq());
  const double norm = static_cast<double>(lattice_norm(f, au, av));
  if (norm >= (2.0 + r) * (2.0 + r) + 1e-9) return true;

  // Otherwise sample the cell alpha + I_d on an exact rational grid.
  constexpr long long kSteps = 64;
  const Wide M = kSteps;
  for (long long i = -kSteps; i <= kSteps; ++i) {
    for (long long j = -kSteps; j <= kSteps; ++j) {
      const LatticeCoords<Wide> w{au * M + i, av * M + j};
      if (!(nearest_scaled(f, w.u, w.v, M) == LatticeCoords<Wide>{au, av})) continue;
      const auto c = lattice_conj(f, w);
      if (in_closed_cell_scaled(f, Wide(c.u * M), Wide(c.v * M), lattice_norm(f, w))) return true;
    }
  }
  return false;
}

std::vector<QuadElement> default_alphabet(const QuadraticField& field, long long norm_bound) {
  std::vector<QuadElement> out;
  if (norm_bound < 1) return out;
  const FieldShape& f = field.shape();
  // N(u + v w) >= (norm - trace^2/4) v^2 and >= (u + trace*v/2)^2.
  const double v_coeff = f.norm - f.trace * f.trace / 4.0;
  const long long v_max = static_cast<long long>(std::sqrt(norm_bound / v_coeff)) + 1;
  const long long u_span = static_cast<long long>(std::sqrt(static_cast<double>(norm_bound))) + 1;
  for (long long u = -u_span - v_max; u <= u_span + v_max; ++u) {
    for (long long v = -v_max; v <= v_max; ++v) {
      const long long n = lattice_norm(f, u, v);
      if (n == 0 || n > norm_bound) continue;
      QuadElement alpha(u, v);
      if (is_attainable(field, alpha)) out.push_back(std::move(alpha));
    }
  }
  return out;
}

}  // namespace boundedcf
