#include "boundedcf/quadratic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace boundedcf {

namespace {

struct Scaled {
  BigInt U;
  BigInt V;
  BigInt D;
};

Scaled to_scaled(const QuadElement& z) {
  const BigInt du = denominator_of(z.u);
  const BigInt dv = denominator_of(z.v);
  const BigInt D = du / boost::multiprecision::gcd(du, dv) * dv;
  return {numerator_of(z.u) * (D / du), numerator_of(z.v) * (D / dv), D};
}

LatticeCoords<BigInt> to_coords(const QuadElement& z) {
  return {numerator_of(z.u), numerator_of(z.v)};
}

QuadElement from_coords(const LatticeCoords<BigInt>& c) {
  return {ExactRational(c.u), ExactRational(c.v)};
}

void require_integral(const QuadElement& z, const char* what) {
  if (!z.is_integral()) throw DomainError(std::string(what) + " requires an element of O_d");
}

// Exact division of lattice elements when b divides a.
LatticeCoords<BigInt> exact_quotient(const FieldShape& f, const LatticeCoords<BigInt>& a,
                                     const LatticeCoords<BigInt>& b) {
  const auto [num, den] = scaled_quotient(f, a, b);
  if (num.u % den != 0 || num.v % den != 0) throw std::logic_error("inexact lattice division");
  return {num.u / den, num.v / den};
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool wrapped_in_parens(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

QuadElement parse_linear(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty quadratic literal");
  QuadElement out;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (any) {
      throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt coeff = start == i ? BigInt(1) : BigInt(s.substr(start, i - start));
    const bool has_w = i < s.size() && s[i] == 'w';
    if (has_w) ++i;
    if (start == i) throw std::invalid_argument("malformed quadratic literal '" + s + "'");
    if (negative) coeff = -coeff;
    if (has_w) {
      out.v += ExactRational(coeff);
    } else {
      out.u += ExactRational(coeff);
    }
    any = true;
  }
  return out;
}

std::string coefficient_text(const ExactRational& x) { return to_string(x); }

}  // namespace

QuadraticField::QuadraticField(int d) {
  switch (d) {
    case 1:
    case 2:
      shape_ = {d, 0, d};
      break;
    case 3:
    case 7:
    case 11:
      shape_ = {d, 1, (1 + d) / 4};
      break;
    default:
      throw DomainError("d must be one of 1, 2, 3, 7, 11 (norm-Euclidean fields), got " +
                        std::to_string(d));
  }
}

ExactRational QuadraticField::norm(const QuadElement& z) const {
  return z.u * z.u + shape_.trace * z.u * z.v + shape_.norm * z.v * z.v;
}

QuadElement QuadraticField::conj(const QuadElement& z) const {
  return {z.u + shape_.trace * z.v, -z.v};
}

QuadElement QuadraticField::mul(const QuadElement& a, const QuadElement& b) const {
  const ExactRational vv = a.v * b.v;
  return {a.u * b.u - shape_.norm * vv, a.u * b.v + a.v * b.u + shape_.trace * vv};
}

QuadElement QuadraticField::inverse(const QuadElement& z) const {
  if (z.is_zero()) throw DomainError("inverse of zero");
  const ExactRational n = norm(z);
  const QuadElement c = conj(z);
  return {c.u / n, c.v / n};
}

QuadElement QuadraticField::div(const QuadElement& a, const QuadElement& b) const {
  return mul(a, inverse(b));
}

std::complex<double> QuadraticField::to_complex(const QuadElement& z) const {
  const double u = z.u.convert_to<double>();
  const double v = z.v.convert_to<double>();
  const double im_w = std::sqrt(shape_.norm - shape_.trace * shape_.trace / 4.0);
  return {u + v * shape_.trace / 2.0, v * im_w};
}

QuadElement QuadraticField::nearest_lattice_point(const QuadElement& z) const {
  const Scaled s = to_scaled(z);
  return from_coords(nearest_scaled(shape_, s.U, s.V, s.D));
}

bool QuadraticField::in_closed_domain(const QuadElement& z) const {
  const Scaled s = to_scaled(z);
  return in_closed_cell_scaled(shape_, s.U, s.V, s.D);
}

std::vector<QuadElement> QuadraticField::units() const {
  std::vector<QuadElement> out;
  for (int u = -2; u <= 2; ++u) {
    for (int v = -2; v <= 2; ++v) {
      if (lattice_norm(shape_, u, v) == 1) out.emplace_back(u, v);
    }
  }
  return out;
}

double QuadraticField::covering_radius_sq() const {
  if (!hexagonal()) return (1.0 + shape_.norm) / 4.0;
  const double s2 = shape_.norm - 0.25;
  const double y = (s2 - 0.25) / (2.0 * std::sqrt(s2));
  return 0.25 + y * y;
}

QuadElement euclid_gcd(const QuadraticField& field, QuadElement a, QuadElement b) {
  require_integral(a, "euclid_gcd");
  require_integral(b, "euclid_gcd");
  if (a.is_zero() && b.is_zero()) throw DomainError("euclid_gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    const QuadElement q = field.nearest_lattice_point(field.div(a, b));
    QuadElement r = a - field.mul(q, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::pair<QuadElement, QuadElement> reduced_form(const QuadraticField& field, const QuadElement& z) {
  if (z.is_zero()) return {QuadElement(0), QuadElement(1)};
  const Scaled s = to_scaled(z);
  const LatticeCoords<BigInt> alpha0{s.U, s.V};
  const LatticeCoords<BigInt> beta0{s.D, 0};
  const QuadElement g = euclid_gcd(field, from_coords(alpha0), from_coords(beta0));
  const auto alpha = exact_quotient(field.shape(), alpha0, to_coords(g));
  const auto beta = exact_quotient(field.shape(), beta0, to_coords(g));
  std::pair<QuadElement, QuadElement> best{from_coords(alpha), from_coords(beta)};
  for (const auto& unit : field.units()) {
    QuadElement b = field.mul(from_coords(beta), unit);
    if (b > best.second) best = {field.mul(from_coords(alpha), unit), std::move(b)};
  }
  return best;
}

BigInt height_squared(const QuadraticField& field, const QuadElement& z) {
  if (z.is_zero()) return 0;
  const auto [alpha, beta] = reduced_form(field, z);
  const ExactRational na = field.norm(alpha);
  const ExactRational nb = field.norm(beta);
  return numerator_of(na > nb ? na : nb);
}

QuadElement parse_quad(const QuadraticField& field, std::string_view text) {
  std::string s = strip(text);
  while (wrapped_in_parens(s)) s = s.substr(1, s.size() - 2);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      const QuadElement num = parse_quad(field, s.substr(0, i));
      const QuadElement den = parse_quad(field, s.substr(i + 1));
      if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + s + "'");
      return field.div(num, den);
    }
  }
  if (depth != 0 || s.find_first_of("()") != std::string::npos) {
    throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
  }
  return parse_linear(s);
}

std::string to_string(const QuadElement& z) {
  if (!z.is_integral()) {
    // (a+bw)/(D) over the common denominator, which parse_quad reads back
    const BigInt D = boost::multiprecision::lcm(denominator_of(z.u), denominator_of(z.v));
    const QuadElement scaled(z.u * D, z.v * D);
    return "(" + to_string(scaled) + ")/(" + D.str() + ")";
  }
  if (z.v == 0) return coefficient_text(z.u);
  if (z.u == 0) return coefficient_text(z.v) + "w";
  const std::string sign = z.v < 0 ? "-" : "+";
  return coefficient_text(z.u) + sign + coefficient_text(z.v < 0 ? ExactRational(-z.v) : z.v) + "w";
}

}  // namespace boundedcf
