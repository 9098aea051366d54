#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace saplab {

// Equal-width histogram over integer values in [lo, hi). Bins are half-open
// with a right-closed final bin, so a value equal to hi lands in the last
// bin. Bin assignment is exact integer arithmetic; edges() is presentation.
struct Histogram {
    std::int64_t lo = 0;
    std::int64_t hi = 1;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;  // values that fell inside the range

    std::uint32_t bins() const { return static_cast<std::uint32_t>(counts.size()); }
    std::vector<double> edges() const;  // lo + i*(hi-lo)/bins, last edge pinned to hi

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

// When range is omitted it derives as [min, max+1]. Throws std::domain_error
// for bin_count == 0, an empty input without a range, or hi <= lo.
Histogram histogram(std::span<const std::int64_t> values, std::uint32_t bin_count,
                    std::optional<std::pair<std::int64_t, std::int64_t>> range = std::nullopt);

struct SideStats {
    std::uint64_t count = 0;
    std::int64_t min = 0;
    std::int64_t max = 0;
    double mean = 0.0;
    double median = 0.0;
};

// Two histograms over identical edges spanning the union range of both
// inputs, so the distributions compare bin for bin.
struct DistributionComparison {
    Histogram condition;
    Histogram all;
    SideStats condition_stats;
    SideStats all_stats;
};

// Throws std::domain_error if either list is empty or bin_count == 0.
DistributionComparison compare_distributions(std::span<const std::int64_t> condition,
                                             std::span<const std::int64_t> all_values,
                                             std::uint32_t bin_count);

} // namespace saplab
