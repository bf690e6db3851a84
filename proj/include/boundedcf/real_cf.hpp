#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "boundedcf/rational.hpp"

namespace boundedcf {

/// Partial quotients a_1..a_l of x = 1/(a_1 + 1/(a_2 + ...)).
/// The canonical expansion of a rational ends with a_l >= 2.
using DigitSequence = std::vector<BigInt>;

struct GaussStep {
  BigInt digit;
  ExactRational remainder;
};

/// One application of the Gauss map: x = 1/(digit + remainder), remainder in [0, 1).
/// Throws DomainError unless 0 < x <= 1.
GaussStep gauss_step(const ExactRational& x);

/// Canonical expansion of x in (0, 1). Throws DomainError outside that range.
DigitSequence cf_expand(const ExactRational& x);

/// Bottom-up evaluation of [0; a_1, ..., a_l]. Throws DomainError on an
/// empty list or a digit below 1.
ExactRational reconstruct(std::span<const BigInt> digits);

/// Convergent recursion state. With p_cur/q_cur the current convergent,
/// p_cur*q_prev - p_prev*q_cur is always +-1.
struct ContinuantPair {
  BigInt p_prev = 1;
  BigInt p_cur = 0;
  BigInt q_prev = 0;
  BigInt q_cur = 1;

  static ContinuantPair identity() { return {}; }
  BigInt determinant() const { return p_cur * q_prev - p_prev * q_cur; }

  friend bool operator==(const ContinuantPair&, const ContinuantPair&) = default;
};

/// Composes one more inverse branch h_a(x) = 1/(x + a): q <- a*q + q_prev.
ContinuantPair apply_digit(const ContinuantPair& c, const BigInt& a);

ContinuantPair continuants(std::span<const BigInt> digits);

/// |h'(0)| for h = h_{a_1} o ... o h_{a_l}, which is exactly 1/q_l^2.
ExactRational branch_derivative_at_zero(std::span<const BigInt> digits);

/// True iff some a coprime to n has a/n with every partial quotient <= bound.
bool is_zaremba_denominator(std::uint64_t n, std::uint64_t bound);

}  // namespace boundedcf
