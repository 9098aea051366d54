#include "saplab/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace saplab {

std::vector<double> Histogram::edges() const {
    const std::size_t b = counts.size();
    std::vector<double> e(b + 1);
    const double width = (static_cast<double>(hi) - static_cast<double>(lo));
    for (std::size_t i = 0; i < b; ++i)
        e[i] = static_cast<double>(lo) + static_cast<double>(i) * width / static_cast<double>(b);
    e[b] = static_cast<double>(hi);
    return e;
}

Histogram histogram(std::span<const std::int64_t> values, std::uint32_t bin_count,
                    std::optional<std::pair<std::int64_t, std::int64_t>> range) {
    if (bin_count == 0) throw std::domain_error("histogram: bin_count must be >= 1");

    std::int64_t lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
        if (hi <= lo) throw std::domain_error("histogram: range must satisfy lo < hi");
    } else {
        if (values.empty())
            throw std::domain_error("histogram: empty input and no explicit range");
        auto [mn, mx] = std::minmax_element(values.begin(), values.end());
        lo = *mn;
        hi = *mx + 1;
    }

    Histogram h;
    h.lo = lo;
    h.hi = hi;
    h.counts.assign(bin_count, 0);
    // unsigned subtraction keeps the span correct even across the int64 range
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    for (std::int64_t v : values) {
        if (v < lo || v > hi) continue;
        std::uint64_t idx;
        if (v == hi) {
            idx = bin_count - 1;  // right-closed final bin
        } else {
            const std::uint64_t offset =
                static_cast<std::uint64_t>(v) - static_cast<std::uint64_t>(lo);
            idx = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(offset) * bin_count / span);
        }
        ++h.counts[static_cast<std::size_t>(idx)];
        ++h.total;
    }
    return h;
}

namespace {

SideStats side_stats(std::span<const std::int64_t> values) {
    SideStats s;
    s.count = values.size();
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    s.min = *mn;
    s.max = *mx;
    __int128 sum = 0;
    for (std::int64_t v : values) sum += v;
    s.mean = static_cast<double>(sum) / static_cast<double>(values.size());

    std::vector<std::int64_t> sorted(values.begin(), values.end());
    const std::size_t mid = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + mid, sorted.end());
    if (sorted.size() % 2 == 1) {
        s.median = static_cast<double>(sorted[mid]);
    } else {
        const std::int64_t upper = sorted[mid];
        const std::int64_t lower = *std::max_element(sorted.begin(), sorted.begin() + mid);
        s.median = (static_cast<double>(lower) + static_cast<double>(upper)) / 2.0;
    }
    return s;
}

} // namespace

DistributionComparison compare_distributions(std::span<const std::int64_t> condition,
                                             std::span<const std::int64_t> all_values,
                                             std::uint32_t bin_count) {
    if (condition.empty() || all_values.empty())
        throw std::domain_error("compare_distributions: both inputs must be nonempty");

    auto [c_mn, c_mx] = std::minmax_element(condition.begin(), condition.end());
    auto [a_mn, a_mx] = std::minmax_element(all_values.begin(), all_values.end());
    const std::int64_t lo = std::min(*c_mn, *a_mn);
    const std::int64_t hi = std::max(*c_mx, *a_mx) + 1;

    DistributionComparison cmp;
    cmp.condition = histogram(condition, bin_count, std::pair{lo, hi});
    cmp.all = histogram(all_values, bin_count, std::pair{lo, hi});
    cmp.condition_stats = side_stats(condition);
    cmp.all_stats = side_stats(all_values);
    return cmp;
}

} // namespace saplab
