#include "saplab/csv.hpp"

#include <charconv>
#include <cstdio>

namespace saplab {

std::string csv_field(std::string_view raw) {
    if (raw.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(raw);
    std::string out;
    out.reserve(raw.size() + 2);
    out.push_back('"');
    for (char c : raw) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_hit_rate(std::uint64_t hits, std::uint64_t total) {
    const std::uint64_t scaled =
        total == 0 ? 0 : (hits * 1'000'000ULL + total / 2) / total;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu.%06llu",
                  static_cast<unsigned long long>(scaled / 1'000'000ULL),
                  static_cast<unsigned long long>(scaled % 1'000'000ULL));
    return buf;
}

} // namespace saplab
