#include "boundedcf/grid.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <stdexcept>

#include "boundedcf/rational.hpp"

namespace boundedcf {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("not a nonnegative integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

unsigned parse_exponent(std::string_view s) {
  s = trim(s);
  if (!s.starts_with("2^")) throw DomainError("expected 2^k, got '" + std::string(s) + "'");
  const auto k = parse_u64(s.substr(2));
  if (k > 62) throw DomainError("exponent too large: " + std::string(s));
  return static_cast<unsigned>(k);
}

}  // namespace

std::uint64_t parse_count(std::string_view text) {
  text = trim(text);
  if (text.starts_with("2^")) return std::uint64_t{1} << parse_exponent(text);
  return parse_u64(text);
}

std::vector<std::uint64_t> dyadic_grid(unsigned lo, unsigned hi) {
  if (lo > hi || hi > 62) throw DomainError("bad dyadic range");
  std::vector<std::uint64_t> out;
  for (unsigned k = lo; k <= hi; ++k) out.push_back(std::uint64_t{1} << k);
  return out;
}

std::vector<std::uint64_t> parse_grid(std::string_view text) {
  text = trim(text);
  std::vector<std::uint64_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    out = dyadic_grid(parse_exponent(text.substr(0, dots)), parse_exponent(text.substr(dots + 2)));
  } else {
    for (const auto part : split(text, ',')) out.push_back(parse_count(part));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (const auto part : split(trim(text), ',')) {
    if (part.empty()) throw DomainError("empty entry in real list");
    try {
      std::size_t used = 0;
      const std::string s(part);
      out.push_back(std::stod(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw DomainError("not a real number: '" + std::string(part) + "'");
    }
  }
  return out;
}

std::map<std::string, std::string> read_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::runtime_error("config line " + std::to_string(line_no) + ": missing '='");
    }
    const auto key = trim(view.substr(0, eq));
    if (key.empty()) throw std::runtime_error("config line " + std::to_string(line_no) + ": empty key");
    out[std::string(key)] = std::string(trim(view.substr(eq + 1)));
  }
  return out;
}

}  // namespace boundedcf
