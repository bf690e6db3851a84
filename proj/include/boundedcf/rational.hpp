#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace boundedcf {

using BigInt = boost::multiprecision::cpp_int;

// Fractions are kept in lowest terms with a positive denominator by the
// underlying type, so equality is structural.
using ExactRational = boost::multiprecision::cpp_rational;

/// Raised when an input lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline BigInt numerator_of(const ExactRational& x) {
  return boost::multiprecision::numerator(x);
}
inline BigInt denominator_of(const ExactRational& x) {
  return boost::multiprecision::denominator(x);
}

ExactRational make_rational(const BigInt& num, const BigInt& den);

/// floor(x) for an exact rational.
BigInt floor_of(const ExactRational& x);

/// Nearest integer to x, halves rounded up: floor(x + 1/2).
BigInt round_half_up(const ExactRational& x);

/// Parses "a/b", "a" or "-a/b". Throws std::invalid_argument on junk.
ExactRational parse_rational(std::string_view text);

std::string to_string(const ExactRational& x);

}  // namespace boundedcf
