#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace boundedcf {

/// "65536" or "2^16".
std::uint64_t parse_count(std::string_view text);

/// N grids: "2^a..2^b" (every power of two in range), a comma list of
/// counts, or a single count. Result is sorted and duplicate free.
std::vector<std::uint64_t> parse_grid(std::string_view text);

/// Comma-separated reals, e.g. "-0.2,-0.1,0,0.1,0.2".
std::vector<double> parse_real_list(std::string_view text);

/// Dyadic grid 2^lo..2^hi.
std::vector<std::uint64_t> dyadic_grid(unsigned lo, unsigned hi);

/// Plain key = value lines; '#' starts a comment, blank lines are ignored.
/// Throws std::runtime_error on a line without '=' or an empty key.
std::map<std::string, std::string> read_config(std::istream& in);

}  // namespace boundedcf
