#include "boundedcf/count_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace boundedcf {

CountTable::CountTable(std::uint64_t max_key, bool with_lengths, std::size_t length_capacity)
    : max_key_(max_key),
      with_lengths_(with_lengths),
      stride_(with_lengths ? length_capacity + 1 : 0),
      counts_(max_key + 1, 0) {
  if (with_lengths_) lengths_.assign((max_key_ + 1) * stride_, 0);
}

void CountTable::grow_lengths(std::size_t length) {
  const std::size_t new_stride = std::max(length + 1, 2 * stride_);
  std::vector<std::uint32_t> grown((max_key_ + 1) * new_stride, 0);
  for (std::uint64_t k = 0; k <= max_key_; ++k) {
    std::copy_n(lengths_.begin() + k * stride_, stride_, grown.begin() + k * new_stride);
  }
  lengths_ = std::move(grown);
  stride_ = new_stride;
}

void CountTable::add(std::uint64_t key, std::size_t length, std::uint64_t multiplicity) {
  if (key >= counts_.size()) throw std::out_of_range("CountTable key beyond max_key");
  counts_[key] += multiplicity;
  if (!with_lengths_) return;
  if (length >= stride_) grow_lengths(length);
  lengths_[key * stride_ + length] += static_cast<std::uint32_t>(multiplicity);
}

std::uint64_t CountTable::count(std::uint64_t key) const {
  return key < counts_.size() ? counts_[key] : 0;
}

std::uint64_t CountTable::length_count(std::uint64_t key, std::size_t length) const {
  if (!with_lengths_ || key > max_key_ || length >= stride_) return 0;
  return lengths_[key * stride_ + length];
}

std::size_t CountTable::longest() const {
  std::size_t best = 0;
  for (std::uint64_t k = 0; k <= max_key_; ++k) {
    for (std::size_t l = stride_; l-- > best + 1;) {
      if (lengths_[k * stride_ + l] != 0) {
        best = l;
        break;
      }
    }
  }
  return best;
}

double CountTable::weighted(std::uint64_t key, double w) const {
  if (w == 0.0) return static_cast<double>(count(key));
  if (!with_lengths_) throw std::logic_error("weighted sums need a table with length tracking");
  if (key > max_key_) return 0.0;
  double sum = 0.0;
  for (std::size_t l = 0; l < stride_; ++l) {
    const auto c = lengths_[key * stride_ + l];
    if (c != 0) sum += static_cast<double>(c) * std::exp(w * static_cast<double>(l));
  }
  return sum;
}

std::uint64_t CountTable::cumulative(std::uint64_t upto) const {
  std::uint64_t sum = 0;
  const std::uint64_t last = std::min(upto, max_key_);
  for (std::uint64_t k = 0; k <= last && !counts_.empty(); ++k) sum += counts_[k];
  return sum;
}

CountTable& CountTable::operator+=(const CountTable& other) {
  if (other.max_key_ != max_key_ || other.with_lengths_ != with_lengths_) {
    throw std::invalid_argument("cannot merge count tables of different shape");
  }
  for (std::uint64_t k = 0; k <= max_key_; ++k) counts_[k] += other.counts_[k];
  if (with_lengths_) {
    if (other.stride_ > stride_) grow_lengths(other.stride_ - 1);
    for (std::uint64_t k = 0; k <= max_key_; ++k) {
      for (std::size_t l = 0; l < other.stride_; ++l) {
        lengths_[k * stride_ + l] += other.lengths_[k * other.stride_ + l];
      }
    }
  }
  return *this;
}

bool operator==(const CountTable& a, const CountTable& b) {
  if (a.max_key_ != b.max_key_ || a.with_lengths_ != b.with_lengths_ || a.counts_ != b.counts_) {
    return false;
  }
  const std::size_t width = std::max(a.stride_, b.stride_);
  for (std::uint64_t k = 0; k <= a.max_key_; ++k) {
    for (std::size_t l = 0; l < width; ++l) {
      if (a.length_count(k, l) != b.length_count(k, l)) return false;
    }
  }
  return true;
}

std::string shortest_decimal(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const CountTable& table, std::span<const double> w_grid) {
  const bool weighted = table.has_lengths();
  out << "n,count";
  if (weighted) {
    for (double w : w_grid) out << ",w_" << shortest_decimal(w);
  }
  out << '\n';
  char buf[64];
  for (std::uint64_t n = 0; n <= table.max_key(); ++n) {
    const std::uint64_t c = table.count(n);
    if (c == 0) continue;
    out << n << ',' << c;
    if (weighted) {
      for (double w : w_grid) {
        std::snprintf(buf, sizeof(buf), "%.18g", table.weighted(n, w));
        out << ',' << buf;
      }
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(item);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <class T>
T parse_number(const std::string& text) {
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::runtime_error("malformed CSV number '" + text + "'");
  }
  return value;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV input");
  const auto header = split_fields(line);
  if (header.size() < 2 || header[0] != "n" || header[1] != "count") {
    throw std::runtime_error("CSV header must start with n,count");
  }
  for (std::size_t i = 2; i < header.size(); ++i) {
    if (header[i].rfind("w_", 0) != 0) throw std::runtime_error("bad CSV column '" + header[i] + "'");
    table.w_grid.push_back(parse_number<double>(header[i].substr(2)));
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) throw std::runtime_error("CSV row has wrong arity");
    CsvRow row;
    row.n = parse_number<std::uint64_t>(fields[0]);
    row.count = parse_number<std::uint64_t>(fields[1]);
    for (std::size_t i = 2; i < fields.size(); ++i) row.weighted.push_back(parse_number<double>(fields[i]));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace boundedcf
