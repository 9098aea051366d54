#pragma once

#include "saplab/primes.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace saplab {

// Candidate set around the window midpoint M = 2*p_prev1 - p_prev2.
//   strict   {M-2, M+2}        the literal "+/- 2" reading
//   odd3     {M-2, M, M+2}
//   interval [M-2, M+2]        the "in between" reading
enum class WindowMode { strict, odd3, interval };

std::string_view to_string(WindowMode mode);
WindowMode parse_window_mode(std::string_view text);  // throws std::invalid_argument

std::vector<std::uint64_t> window_candidates(std::uint64_t midpoint, WindowMode mode);

// One scanned consecutive-prime pair and its window verdict.
struct ConjectureRecord {
    PrimePair pair;
    std::uint64_t midpoint = 0;  // 2*p_prev1 - p_prev2
    WindowMode mode = WindowMode::strict;
    std::vector<std::uint64_t> primes_found;  // increasing, all in the candidate set
    bool hit = false;                         // primes_found nonempty

    friend bool operator==(const ConjectureRecord&, const ConjectureRecord&) = default;
};

// Tests every candidate around the pair's midpoint. Applies no midpoint
// threshold; scan() owns that guard so the boundary stays probeable here.
ConjectureRecord evaluate_window(PrimePair pair, WindowMode mode);

// The generated prime must exceed 7. min_midpoint = 10 enforces that exactly
// (M - 2 > 7); the looser documented reading, M > 7, is min_midpoint = 8.
inline constexpr std::uint64_t kDefaultMinMidpoint = 10;

struct ScanOptions {
    WindowMode mode = WindowMode::strict;
    std::uint64_t min_midpoint = kDefaultMinMidpoint;
    unsigned threads = 1;  // internal only: results are ordered and identical at any count
};

struct ScanSummary {
    std::uint64_t total_pairs = 0;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::vector<PrimePair> counterexamples;  // every pair whose window held no prime

    double hit_rate() const {
        return total_pairs == 0 ? 0.0
                                : static_cast<double>(hits) / static_cast<double>(total_pairs);
    }

    friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

struct ScanResult {
    std::vector<ConjectureRecord> records;
    ScanSummary summary;
};

// Evaluates every consecutive pair in the table with midpoint >= min_midpoint,
// delivering records ordered by p_prev2 regardless of the thread count.
// Throws std::runtime_error if the table holds fewer than two primes.
ScanSummary scan_stream(const PrimeTable& table, const ScanOptions& options,
                        const std::function<void(const ConjectureRecord&)>& sink);

ScanResult scan(const PrimeTable& table, const ScanOptions& options = {});

// Sorted, deduplicated union of primes_found over the whole scan: the subset
// of primes the window condition generates.
std::vector<std::uint64_t> condition_primes(const PrimeTable& table, WindowMode mode,
                                            std::uint64_t min_midpoint = kDefaultMinMidpoint);

// Differences between successive condition-satisfying primes.
struct GapSeries {
    std::vector<std::uint64_t> source_primes;
    std::vector<std::uint64_t> diffs;  // diffs[i] = source_primes[i+1] - source_primes[i]

    friend bool operator==(const GapSeries&, const GapSeries&) = default;
};

// Input must be strictly increasing (std::invalid_argument otherwise); fewer
// than two primes give an empty series.
GapSeries gap_series(std::span<const std::uint64_t> source_primes);

// One prime and its successor. Twin-ness is difference == 2, nothing else;
// the window verdict for the pair (p_small, p_large) rides along as data.
struct TwinRecord {
    std::uint64_t p_small = 0;
    std::uint64_t p_large = 0;
    std::uint64_t difference = 0;
    bool condition_satisfied = false;

    friend bool operator==(const TwinRecord&, const TwinRecord&) = default;
};

// Records (p, next prime, difference, window verdict) for every prime p in
// [range_min, range_max]. Throws std::runtime_error when range_max exceeds
// the table limit or the table ends before some needed successor.
std::vector<TwinRecord> twin_scan(const PrimeTable& table, std::uint64_t range_max,
                                  WindowMode mode, std::uint64_t range_min = 3);

} // namespace saplab
