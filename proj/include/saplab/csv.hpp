#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace saplab {

// RFC-4180 quoting: fields containing a comma, quote, CR, or LF are wrapped
// in quotes with embedded quotes doubled; everything else passes through.
std::string csv_field(std::string_view raw);

// Shortest round-trip decimal form (std::to_chars), locale-independent.
std::string format_double(double value);

// hits/total as a decimal string with exactly six fractional digits, rounded
// half up in integer arithmetic so no float enters the serialized output.
std::string format_hit_rate(std::uint64_t hits, std::uint64_t total);

} // namespace saplab
