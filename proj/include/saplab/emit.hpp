#pragma once

#include "saplab/conjecture.hpp"
#include "saplab/sap.hpp"
#include "saplab/stats.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <span>

namespace saplab {

using ordered_json = nlohmann::ordered_json;

// CSV column contracts (fixed order, header row, LF endings, RFC-4180
// quoting; lists inside a cell are ';'-joined):
//   scan         p_prev2,p_prev1,midpoint,mode,primes_found,hit
//   gaps         index,diff,zero            (index is 1-based, zero is literal 0)
//   twins        p_small,p_large,difference,condition_satisfied
//   sieve        prime
//   histogram    bin_index,edge_lo,edge_hi,count_condition,count_all
//   extrapolate  step,value
//   verify       n,x,y,lhs,rhs,equal

void write_scan_header(std::ostream& out);
void write_scan_row(std::ostream& out, const ConjectureRecord& rec);

void write_gap_header(std::ostream& out);
void write_gap_row(std::ostream& out, std::uint64_t index, std::uint64_t diff);

void write_twin_header(std::ostream& out);
void write_twin_row(std::ostream& out, const TwinRecord& rec);

void write_sieve_header(std::ostream& out);
void write_sieve_row(std::ostream& out, std::uint64_t prime);

void write_histogram_header(std::ostream& out);
void write_histogram_rows(std::ostream& out, const DistributionComparison& cmp);

void write_extrapolate_header(std::ostream& out);
void write_extrapolate_row(std::ostream& out, const ExtrapolationResult& result);

void write_identity_header(std::ostream& out);
void write_identity_row(std::ostream& out, unsigned n, const Rational& x, const Rational& y,
                        const ShiftIdentityCheck& check);

// Exact values in JSON: integers become JSON integers when they fit in 64
// bits, everything else becomes a canonical "p/q" (or bare integer) string.
// Floats never carry exact data.
ordered_json json_exact(const Rational& value);

ordered_json record_json(const ConjectureRecord& rec);
ordered_json summary_json(const ScanSummary& summary);

ordered_json scan_json(std::uint64_t limit, const ScanOptions& options,
                       std::span<const ConjectureRecord> records, const ScanSummary& summary);
ordered_json sieve_json(const PrimeTable& table);
ordered_json gaps_json(std::uint64_t limit, WindowMode mode, std::uint64_t min_midpoint,
                       const GapSeries& series);
ordered_json twins_json(std::uint64_t range_min, std::uint64_t range_max, WindowMode mode,
                        std::span<const TwinRecord> records);
ordered_json histogram_json(std::uint64_t limit, WindowMode mode, std::uint64_t min_midpoint,
                            const DistributionComparison& cmp);
ordered_json extrapolate_json(unsigned degree, std::span<const Rational> inputs,
                              std::span<const ExtrapolationResult> results);
ordered_json identity_json(unsigned n, const Rational& x, const Rational& y,
                           const ShiftIdentityCheck& check);

} // namespace saplab
