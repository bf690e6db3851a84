#include "boundedcf/real_cf.hpp"

#include <numeric>

namespace boundedcf {

GaussStep gauss_step(const ExactRational& x) {
  if (x <= 0 || x > 1) throw DomainError("gauss_step requires 0 < x <= 1, got " + to_string(x));
  // 1/x = den/num, so the quotient and remainder come from one integer division.
  const BigInt num = numerator_of(x);
  const BigInt den = denominator_of(x);
  BigInt digit;
  BigInt rest;
  boost::multiprecision::divide_qr(den, num, digit, rest);
  return {std::move(digit), ExactRational(rest, num)};
}

DigitSequence cf_expand(const ExactRational& x) {
  if (x <= 0 || x >= 1) throw DomainError("cf_expand requires 0 < x < 1, got " + to_string(x));
  DigitSequence digits;
  BigInt num = numerator_of(x);
  BigInt den = denominator_of(x);
  // Euclid on (num, den); the last quotient is >= 2 because the final
  // nonzero remainder divides the previous one strictly.
  while (num != 0) {
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(den, num, q, r);
    digits.push_back(std::move(q));
    den = std::move(num);
    num = std::move(r);
  }
  return digits;
}

ExactRational reconstruct(std::span<const BigInt> digits) {
  if (digits.empty()) throw DomainError("reconstruct needs at least one digit");
  ExactRational tail(0);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 1) throw DomainError("partial quotients must be >= 1");
    tail = 1 / (ExactRational(*it) + tail);
  }
  return tail;
}

ContinuantPair apply_digit(const ContinuantPair& c, const BigInt& a) {
  return {c.p_cur, a * c.p_cur + c.p_prev, c.q_cur, a * c.q_cur + c.q_prev};
}

ContinuantPair continuants(std::span<const BigInt> digits) {
  ContinuantPair c = ContinuantPair::identity();
  for (const auto& a : digits) c = apply_digit(c, a);
  return c;
}

ExactRational branch_derivative_at_zero(std::span<const BigInt> digits) {
  if (digits.empty()) throw DomainError("branch_derivative_at_zero needs a nonempty digit list");
  const BigInt q = continuants(digits).q_cur;
  return ExactRational(BigInt(1), q * q);
}

bool is_zaremba_denominator(std::uint64_t n, std::uint64_t bound) {
  if (n < 2) throw DomainError("is_zaremba_denominator requires n >= 2");
  if (bound < 1) return false;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::uint64_t num = a;
    std::uint64_t den = n;
    bool ok = true;
    while (num != 0) {
      const std::uint64_t q = den / num;
      if (q > bound) {
        ok = false;
        break;
      }
      const std::uint64_t r = den % num;
      den = num;
      num = r;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace boundedcf
