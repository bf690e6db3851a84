#include "boundedcf/rational.hpp"

#include <cctype>

namespace boundedcf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("expected an integer");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("invalid integer literal '" + std::string(s) + "'");
    }
  }
  const BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

ExactRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  return ExactRational(num, den);
}

BigInt floor_of(const ExactRational& x) {
  const BigInt num = numerator_of(x);
  const BigInt den = denominator_of(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt round_half_up(const ExactRational& x) {
  return floor_of(x + ExactRational(1, 2));
}

ExactRational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return ExactRational(num, den);
}

std::string to_string(const ExactRational& x) {
  if (denominator_of(x) == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

}  // namespace boundedcf
