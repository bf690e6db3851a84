#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boundedcf/lattice.hpp"
#include "boundedcf/rational.hpp"

namespace boundedcf {

/// Exact element u + v*w of Q(sqrt(-d)) over the module basis (1, w).
struct QuadElement {
  ExactRational u{0};
  ExactRational v{0};

  QuadElement() = default;
  QuadElement(ExactRational u_, ExactRational v_ = 0) : u(std::move(u_)), v(std::move(v_)) {}
  QuadElement(long long u_, long long v_ = 0) : u(u_), v(v_) {}

  bool is_zero() const { return u == 0 && v == 0; }
  bool is_integral() const { return denominator_of(u) == 1 && denominator_of(v) == 1; }

  friend bool operator==(const QuadElement&, const QuadElement&) = default;
  friend auto operator<=>(const QuadElement& a, const QuadElement& b) {
    if (a.u != b.u) return a.u < b.u ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.v != b.v) return a.v < b.v ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend QuadElement operator+(const QuadElement& a, const QuadElement& b) {
    return {a.u + b.u, a.v + b.v};
  }
  friend QuadElement operator-(const QuadElement& a, const QuadElement& b) {
    return {a.u - b.u, a.v - b.v};
  }
  friend QuadElement operator-(const QuadElement& a) { return {-a.u, -a.v}; }
};

/// One of the five norm-Euclidean imaginary quadratic fields Q(sqrt(-d)),
/// d in {1, 2, 3, 7, 11}, with its ring of integers O_d.
class QuadraticField {
 public:
  /// Throws DomainError for d outside {1, 2, 3, 7, 11}.
  explicit QuadraticField(int d);

  int d() const { return shape_.d; }
  bool hexagonal() const { return shape_.trace == 1; }
  const FieldShape& shape() const { return shape_; }

  ExactRational norm(const QuadElement& z) const;
  QuadElement conj(const QuadElement& z) const;
  QuadElement mul(const QuadElement& a, const QuadElement& b) const;
  /// Throws DomainError for z = 0.
  QuadElement inverse(const QuadElement& z) const;
  QuadElement div(const QuadElement& a, const QuadElement& b) const;

  std::complex<double> to_complex(const QuadElement& z) const;

  /// Lattice point minimizing |z - alpha|; exact ties resolve to the
  /// lexicographically smallest (u, v).
  QuadElement nearest_lattice_point(const QuadElement& z) const;

  /// Membership in the closed fundamental domain I_d (Voronoi cell of 0).
  bool in_closed_domain(const QuadElement& z) const;

  /// The unit group of O_d, sorted.
  std::vector<QuadElement> units() const;

  /// max |z|^2 over I_d (squared covering radius of the lattice).
  double covering_radius_sq() const;

 private:
  FieldShape shape_;
};

/// A gcd of two integral elements via norm-Euclidean division; unique up to units.
QuadElement euclid_gcd(const QuadraticField& field, QuadElement a, QuadElement b);

/// Coprime alpha, beta in O_d with z = alpha/beta; beta is the
/// lexicographically largest of its unit multiples.
std::pair<QuadElement, QuadElement> reduced_form(const QuadraticField& field, const QuadElement& z);

/// Squared height max(N(alpha), N(beta)) of the reduced form.
BigInt height_squared(const QuadraticField& field, const QuadElement& z);

/// Parses "a+bw", "-w", "3" and fractions "(a+bw)/(c+ew)"; w is the basis generator.
QuadElement parse_quad(const QuadraticField& field, std::string_view text);

/// "2+1w", "-1w", "3", with rational coefficients printed as a/b.
std::string to_string(const QuadElement& z);

}  // namespace boundedcf
