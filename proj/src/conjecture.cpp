#include "saplab/conjecture.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>

namespace saplab {

std::string_view to_string(WindowMode mode) {
    switch (mode) {
        case WindowMode::strict: return "strict";
        case WindowMode::odd3: return "odd3";
        case WindowMode::interval: return "interval";
    }
    return "strict";
}

WindowMode parse_window_mode(std::string_view text) {
    if (text == "strict") return WindowMode::strict;
    if (text == "odd3") return WindowMode::odd3;
    if (text == "interval") return WindowMode::interval;
    throw std::invalid_argument("unknown window mode: '" + std::string(text) +
                                "' (expected strict|odd3|interval)");
}

std::vector<std::uint64_t> window_candidates(std::uint64_t midpoint, WindowMode mode) {
    switch (mode) {
        case WindowMode::strict: return {midpoint - 2, midpoint + 2};
        case WindowMode::odd3: return {midpoint - 2, midpoint, midpoint + 2};
        case WindowMode::interval:
            return {midpoint - 2, midpoint - 1, midpoint, midpoint + 1, midpoint + 2};
    }
    return {};
}

ConjectureRecord evaluate_window(PrimePair pair, WindowMode mode) {
    ConjectureRecord rec;
    rec.pair = pair;
    rec.midpoint = 2 * pair.p_prev1 - pair.p_prev2;
    rec.mode = mode;
    for (std::uint64_t c : window_candidates(rec.midpoint, mode))
        if (is_prime(c)) rec.primes_found.push_back(c);
    rec.hit = !rec.primes_found.empty();
    return rec;
}

ScanSummary scan_stream(const PrimeTable& table, const ScanOptions& options,
                        const std::function<void(const ConjectureRecord&)>& sink) {
    if (table.primes.size() < 2)
        throw std::runtime_error("scan: table must cover at least two primes");

    const std::vector<std::uint64_t>& ps = table.primes;
    const std::size_t n_pairs = ps.size() - 1;
    const unsigned threads = std::max(1u, options.threads);
    constexpr std::size_t kBlock = 16384;

    ScanSummary summary;
    std::vector<std::optional<ConjectureRecord>> block;
    for (std::size_t b0 = 0; b0 < n_pairs; b0 += kBlock) {
        const std::size_t b1 = std::min(n_pairs, b0 + kBlock);
        block.assign(b1 - b0, std::nullopt);

        auto work = [&](std::size_t i0, std::size_t i1) {
            for (std::size_t i = i0; i < i1; ++i) {
                const PrimePair pair{ps[i], ps[i + 1]};
                const std::uint64_t midpoint = 2 * pair.p_prev1 - pair.p_prev2;
                if (midpoint < options.min_midpoint) continue;
                block[i - b0] = evaluate_window(pair, options.mode);
            }
        };

        if (threads == 1 || b1 - b0 < 2 * threads) {
            work(b0, b1);
        } else {
            // contiguous slices into preassigned slots, then an ordered drain:
            // the delivered stream is identical at any thread count
            std::vector<std::thread> pool;
            pool.reserve(threads);
            const std::size_t chunk = (b1 - b0 + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::size_t i0 = b0 + t * chunk;
                const std::size_t i1 = std::min(b1, i0 + chunk);
                if (i0 >= i1) break;
                pool.emplace_back(work, i0, i1);
            }
            for (std::thread& th : pool) th.join();
        }

        for (const std::optional<ConjectureRecord>& rec : block) {
            if (!rec) continue;
            ++summary.total_pairs;
            if (rec->hit) {
                ++summary.hits;
            } else {
                ++summary.misses;
                summary.counterexamples.push_back(rec->pair);
            }
            if (sink) sink(*rec);
        }
    }
    return summary;
}

ScanResult scan(const PrimeTable& table, const ScanOptions& options) {
    ScanResult result;
    result.summary = scan_stream(table, options, [&](const ConjectureRecord& rec) {
        result.records.push_back(rec);
    });
    return result;
}

std::vector<std::uint64_t> condition_primes(const PrimeTable& table, WindowMode mode,
                                            std::uint64_t min_midpoint) {
    std::vector<std::uint64_t> found;
    ScanOptions options;
    options.mode = mode;
    options.min_midpoint = min_midpoint;
    scan_stream(table, options, [&](const ConjectureRecord& rec) {
        found.insert(found.end(), rec.primes_found.begin(), rec.primes_found.end());
    });
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

GapSeries gap_series(std::span<const std::uint64_t> source_primes) {
    for (std::size_t i = 0; i + 1 < source_primes.size(); ++i)
        if (source_primes[i] >= source_primes[i + 1])
            throw std::invalid_argument("gap_series: input must be strictly increasing");

    GapSeries series;
    series.source_primes.assign(source_primes.begin(), source_primes.end());
    if (source_primes.size() >= 2) {
        series.diffs.reserve(source_primes.size() - 1);
        for (std::size_t i = 0; i + 1 < source_primes.size(); ++i)
            series.diffs.push_back(source_primes[i + 1] - source_primes[i]);
    }
    return series;
}

std::vector<TwinRecord> twin_scan(const PrimeTable& table, std::uint64_t range_max,
                                  WindowMode mode, std::uint64_t range_min) {
    if (range_max > table.limit)
        throw std::runtime_error("twin_scan: range_max " + std::to_string(range_max) +
                                 " exceeds the table limit " + std::to_string(table.limit));

    const std::vector<std::uint64_t>& ps = table.primes;
    auto it = std::lower_bound(ps.begin(), ps.end(), range_min);
    std::vector<TwinRecord> out;
    for (; it != ps.end() && *it <= range_max; ++it) {
        if (it + 1 == ps.end())
            throw std::runtime_error("twin_scan: table ends at " + std::to_string(*it) +
                                     "; sieve past range_max to cover the next prime");
        const std::uint64_t p = *it;
        const std::uint64_t next = *(it + 1);
        out.push_back({p, next, next - p, evaluate_window({p, next}, mode).hit});
    }
    return out;
}

} // namespace saplab
