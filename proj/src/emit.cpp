#include "saplab/emit.hpp"

#include "saplab/csv.hpp"

#include <ostream>
#include <string>

namespace saplab {

namespace {

std::string join_semicolon(std::span<const std::uint64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out.push_back(';');
        out += std::to_string(values[i]);
    }
    return out;
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

} // namespace

void write_scan_header(std::ostream& out) {
    out << "p_prev2,p_prev1,midpoint,mode,primes_found,hit\n";
}

void write_scan_row(std::ostream& out, const ConjectureRecord& rec) {
    out << rec.pair.p_prev2 << ',' << rec.pair.p_prev1 << ',' << rec.midpoint << ','
        << to_string(rec.mode) << ',' << csv_field(join_semicolon(rec.primes_found)) << ','
        << bool_text(rec.hit) << '\n';
}

void write_gap_header(std::ostream& out) { out << "index,diff,zero\n"; }

void write_gap_row(std::ostream& out, std::uint64_t index, std::uint64_t diff) {
    out << index << ',' << diff << ",0\n";
}

void write_twin_header(std::ostream& out) {
    out << "p_small,p_large,difference,condition_satisfied\n";
}

void write_twin_row(std::ostream& out, const TwinRecord& rec) {
    out << rec.p_small << ',' << rec.p_large << ',' << rec.difference << ','
        << bool_text(rec.condition_satisfied) << '\n';
}

void write_sieve_header(std::ostream& out) { out << "prime\n"; }

void write_sieve_row(std::ostream& out, std::uint64_t prime) { out << prime << '\n'; }

void write_histogram_header(std::ostream& out) {
    out << "bin_index,edge_lo,edge_hi,count_condition,count_all\n";
}

void write_histogram_rows(std::ostream& out, const DistributionComparison& cmp) {
    const std::vector<double> edges = cmp.condition.edges();
    for (std::size_t i = 0; i < cmp.condition.counts.size(); ++i) {
        out << i << ',' << format_double(edges[i]) << ',' << format_double(edges[i + 1]) << ','
            << cmp.condition.counts[i] << ',' << cmp.all.counts[i] << '\n';
    }
}

void write_extrapolate_header(std::ostream& out) { out << "step,value\n"; }

void write_extrapolate_row(std::ostream& out, const ExtrapolationResult& result) {
    out << result.steps_ahead << ',' << csv_field(to_string(result.value)) << '\n';
}

void write_identity_header(std::ostream& out) { out << "n,x,y,lhs,rhs,equal\n"; }

void write_identity_row(std::ostream& out, unsigned n, const Rational& x, const Rational& y,
                        const ShiftIdentityCheck& check) {
    out << n << ',' << csv_field(to_string(x)) << ',' << csv_field(to_string(y)) << ','
        << csv_field(to_string(check.lhs)) << ',' << csv_field(to_string(check.rhs)) << ','
        << bool_text(check.equal) << '\n';
}

ordered_json json_exact(const Rational& value) {
    if (value.get_den() == 1) {
        const Integer& num = value.get_num();
        if (num.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(num.get_si()));
    }
    return ordered_json(to_string(value));
}

ordered_json record_json(const ConjectureRecord& rec) {
    ordered_json j;
    j["p_prev2"] = rec.pair.p_prev2;
    j["p_prev1"] = rec.pair.p_prev1;
    j["midpoint"] = rec.midpoint;
    j["primes_found"] = rec.primes_found;
    j["hit"] = rec.hit;
    return j;
}

ordered_json summary_json(const ScanSummary& summary) {
    ordered_json j;
    j["total_pairs"] = summary.total_pairs;
    j["hits"] = summary.hits;
    j["misses"] = summary.misses;
    j["hit_rate"] = format_hit_rate(summary.hits, summary.total_pairs);
    ordered_json cx = ordered_json::array();
    for (const PrimePair& pair : summary.counterexamples)
        cx.push_back({{"p_prev2", pair.p_prev2}, {"p_prev1", pair.p_prev1}});
    j["counterexamples"] = std::move(cx);
    return j;
}

ordered_json scan_json(std::uint64_t limit, const ScanOptions& options,
                       std::span<const ConjectureRecord> records, const ScanSummary& summary) {
    ordered_json j;
    j["command"] = "scan";
    j["limit"] = limit;
    j["mode"] = to_string(options.mode);
    j["min_midpoint"] = options.min_midpoint;
    ordered_json rows = ordered_json::array();
    for (const ConjectureRecord& rec : records) rows.push_back(record_json(rec));
    j["records"] = std::move(rows);
    j["summary"] = summary_json(summary);
    return j;
}

ordered_json sieve_json(const PrimeTable& table) {
    ordered_json j;
    j["command"] = "sieve";
    j["limit"] = table.limit;
    j["count"] = table.primes.size();
    j["primes"] = table.primes;
    return j;
}

ordered_json gaps_json(std::uint64_t limit, WindowMode mode, std::uint64_t min_midpoint,
                       const GapSeries& series) {
    ordered_json j;
    j["command"] = "gaps";
    j["limit"] = limit;
    j["mode"] = to_string(mode);
    j["min_midpoint"] = min_midpoint;
    j["source_prime_count"] = series.source_primes.size();
    j["source_primes"] = series.source_primes;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < series.diffs.size(); ++i)
        rows.push_back({{"index", i + 1}, {"diff", series.diffs[i]}, {"zero", 0}});
    j["series"] = std::move(rows);
    return j;
}

ordered_json twins_json(std::uint64_t range_min, std::uint64_t range_max, WindowMode mode,
                        std::span<const TwinRecord> records) {
    std::uint64_t twin_count = 0;
    ordered_json rows = ordered_json::array();
    for (const TwinRecord& rec : records) {
        if (rec.difference == 2) ++twin_count;
        rows.push_back({{"p_small", rec.p_small},
                        {"p_large", rec.p_large},
                        {"difference", rec.difference},
                        {"condition_satisfied", rec.condition_satisfied}});
    }
    ordered_json j;
    j["command"] = "twins";
    j["range_min"] = range_min;
    j["range_max"] = range_max;
    j["mode"] = to_string(mode);
    j["twin_count"] = twin_count;
    j["records"] = std::move(rows);
    return j;
}

namespace {

ordered_json stats_json(const SideStats& s) {
    ordered_json j;
    j["count"] = s.count;
    j["min"] = s.min;
    j["max"] = s.max;
    j["mean"] = s.mean;
    j["median"] = s.median;
    return j;
}

} // namespace

ordered_json histogram_json(std::uint64_t limit, WindowMode mode, std::uint64_t min_midpoint,
                            const DistributionComparison& cmp) {
    ordered_json j;
    j["command"] = "histogram";
    j["limit"] = limit;
    j["mode"] = to_string(mode);
    j["min_midpoint"] = min_midpoint;
    j["bins"] = cmp.condition.bins();
    j["edges"] = cmp.condition.edges();
    j["counts_condition"] = cmp.condition.counts;
    j["counts_all"] = cmp.all.counts;
    j["stats_condition"] = stats_json(cmp.condition_stats);
    j["stats_all"] = stats_json(cmp.all_stats);
    return j;
}

ordered_json extrapolate_json(unsigned degree, std::span<const Rational> inputs,
                              std::span<const ExtrapolationResult> results) {
    ordered_json j;
    j["command"] = "extrapolate";
    j["degree"] = degree;
    ordered_json in = ordered_json::array();
    for (const Rational& v : inputs) in.push_back(json_exact(v));
    j["values"] = std::move(in);
    ordered_json rows = ordered_json::array();
    for (const ExtrapolationResult& r : results)
        rows.push_back({{"step", r.steps_ahead}, {"value", json_exact(r.value)}});
    j["results"] = std::move(rows);
    return j;
}

ordered_json identity_json(unsigned n, const Rational& x, const Rational& y,
                           const ShiftIdentityCheck& check) {
    ordered_json j;
    j["command"] = "verify-identity";
    j["n"] = n;
    j["x"] = json_exact(x);
    j["y"] = json_exact(y);
    j["lhs"] = json_exact(check.lhs);
    j["rhs"] = json_exact(check.rhs);
    j["equal"] = check.equal;
    return j;
}

} // namespace saplab
