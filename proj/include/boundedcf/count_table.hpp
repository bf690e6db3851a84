#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace boundedcf {

/// Counts of bounded-digit rationals by key (the denominator n in the real
/// case, the squared height in the complex case), keys 0..max_key.
///
/// With length tracking on, the table also keeps a histogram of expansion
/// lengths per key, from which weighted(n, w) = sum_x exp(w * l(x)) is
/// evaluated for any real w. Everything stored is an integer, so merging
/// tables from different workers is exact and order independent.
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::uint64_t max_key, bool with_lengths, std::size_t length_capacity = 0);

  void add(std::uint64_t key, std::size_t length, std::uint64_t multiplicity = 1);

  std::uint64_t max_key() const { return max_key_; }
  bool has_lengths() const { return with_lengths_; }

  /// 0 for keys beyond max_key.
  std::uint64_t count(std::uint64_t key) const;
  std::uint64_t length_count(std::uint64_t key, std::size_t length) const;
  /// Largest length with a nonzero entry anywhere in the table.
  std::size_t longest() const;

  /// sum over elements with this key of exp(w * length). weighted(key, 0)
  /// equals count(key); other w need length tracking.
  double weighted(std::uint64_t key, double w) const;

  /// Number of elements with key <= upto.
  std::uint64_t cumulative(std::uint64_t upto) const;
  std::uint64_t total() const { return cumulative(max_key_); }

  /// Adds another table with the same max_key and length mode.
  CountTable& operator+=(const CountTable& other);

  friend bool operator==(const CountTable& a, const CountTable& b);

 private:
  void grow_lengths(std::size_t length);

  std::uint64_t max_key_ = 0;
  bool with_lengths_ = false;
  std::size_t stride_ = 0;  // histogram row width (max length + 1)
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint32_t> lengths_;
};

inline const std::vector<double> kDefaultWGrid{-0.2, -0.1, 0.0, 0.1, 0.2};

/// Shortest decimal that round-trips the double.
std::string shortest_decimal(double x);

/// CSV with header "n,count[,w_<value>...]"; one row per key with a nonzero
/// count. Weighted columns are written only when the table tracks lengths,
/// as decimals with 18 significant digits. LF line endings.
void write_csv(std::ostream& out, const CountTable& table,
               std::span<const double> w_grid = kDefaultWGrid);

struct CsvRow {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  std::vector<double> weighted;
};

struct CsvTable {
  std::vector<double> w_grid;
  std::vector<CsvRow> rows;
};

/// Parses the format produced by write_csv. Throws std::runtime_error on
/// malformed input.
CsvTable read_csv(std::istream& in);

}  // namespace boundedcf
