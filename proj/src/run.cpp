#include "saplab/run.hpp"

#include "saplab/csv.hpp"
#include "saplab/emit.hpp"
#include "saplab/sap.hpp"
#include "saplab/stats.hpp"

#include <fstream>
#include <iostream>
#include <ostream>

namespace saplab {

namespace {

void write_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

// Sieves far enough past range_max that every prime <= range_max has its
// successor in the table. The starting slack already exceeds every prime gap
// in sievable range; the loop keeps the function correct rather than fast.
PrimeTable sieve_covering_next(std::uint64_t range_max) {
    std::uint64_t slack = 512;
    for (;;) {
        PrimeTable table = sieve(range_max + slack);
        if (!table.primes.empty() && table.primes.back() > range_max) return table;
        slack *= 2;
    }
}

int run_scan(const RunConfig& config, std::ostream& out) {
    const PrimeTable table = sieve(config.limit);
    if (table.primes.size() < 2)
        throw std::runtime_error("scan: table must cover at least two primes");
    ScanOptions options;
    options.mode = config.mode;
    options.min_midpoint = config.min_midpoint;
    options.threads = config.threads;

    ScanSummary summary;
    if (config.format == OutputFormat::csv) {
        write_scan_header(out);
        summary = scan_stream(table, options,
                              [&](const ConjectureRecord& rec) { write_scan_row(out, rec); });
    } else {
        const ScanResult result = scan(table, options);
        summary = result.summary;
        write_json(out, scan_json(config.limit, options, result.records, result.summary));
    }
    std::cerr << "scan: pairs=" << summary.total_pairs << " hits=" << summary.hits
              << " misses=" << summary.misses
              << " hit_rate=" << format_hit_rate(summary.hits, summary.total_pairs) << "\n";
    return 0;
}

int run_sieve(const RunConfig& config, std::ostream& out) {
    const PrimeTable table = sieve(config.limit);
    if (config.format == OutputFormat::csv) {
        write_sieve_header(out);
        for (std::uint64_t p : table.primes) write_sieve_row(out, p);
    } else {
        write_json(out, sieve_json(table));
    }
    std::cerr << "sieve: " << table.primes.size() << " primes <= " << table.limit << "\n";
    return 0;
}

int run_gaps(const RunConfig& config, std::ostream& out) {
    const PrimeTable table = sieve(config.limit);
    const std::vector<std::uint64_t> source =
        condition_primes(table, config.mode, config.min_midpoint);
    const GapSeries series = gap_series(source);
    if (config.format == OutputFormat::csv) {
        write_gap_header(out);
        for (std::size_t i = 0; i < series.diffs.size(); ++i)
            write_gap_row(out, i + 1, series.diffs[i]);
    } else {
        write_json(out, gaps_json(config.limit, config.mode, config.min_midpoint, series));
    }
    std::cerr << "gaps: " << series.source_primes.size() << " condition primes, "
              << series.diffs.size() << " differences\n";
    return 0;
}

int run_twins(const RunConfig& config, std::ostream& out) {
    const PrimeTable table = sieve_covering_next(config.limit);
    const std::vector<TwinRecord> records =
        twin_scan(table, config.limit, config.mode, config.twin_min);
    std::uint64_t twin_count = 0;
    for (const TwinRecord& rec : records)
        if (rec.difference == 2) ++twin_count;

    if (config.format == OutputFormat::csv) {
        write_twin_header(out);
        for (const TwinRecord& rec : records) write_twin_row(out, rec);
    } else {
        write_json(out, twins_json(config.twin_min, config.limit, config.mode, records));
    }
    std::cerr << "twins: " << records.size() << " consecutive pairs, " << twin_count
              << " twins\n";
    return 0;
}

int run_histogram(const RunConfig& config, std::ostream& out) {
    const PrimeTable table = sieve(config.limit);
    const std::vector<std::uint64_t> condition =
        condition_primes(table, config.mode, config.min_midpoint);

    std::vector<std::int64_t> condition_values(condition.begin(), condition.end());
    std::vector<std::int64_t> all_values(table.primes.begin(), table.primes.end());
    const DistributionComparison cmp =
        compare_distributions(condition_values, all_values, config.bins);

    if (config.format == OutputFormat::csv) {
        write_histogram_header(out);
        write_histogram_rows(out, cmp);
    } else {
        write_json(out, histogram_json(config.limit, config.mode, config.min_midpoint, cmp));
    }
    std::cerr << "histogram: " << cmp.condition_stats.count << " condition primes vs "
              << cmp.all_stats.count << " primes, " << cmp.condition.bins() << " bins\n";
    return 0;
}

int run_extrapolate(const RunConfig& config, std::ostream& out) {
    const SampleWindow window{config.values, config.degree};
    const std::vector<ExtrapolationResult> results = extrapolate_k(window, config.steps);
    if (config.format == OutputFormat::csv) {
        write_extrapolate_header(out);
        for (const ExtrapolationResult& r : results) write_extrapolate_row(out, r);
    } else {
        write_json(out, extrapolate_json(config.degree, config.values, results));
    }
    return 0;
}

int run_identity(const RunConfig& config, std::ostream& out) {
    const ShiftIdentityCheck check =
        verify_shift_identity(config.identity_n, config.identity_x, config.identity_y);
    if (config.format == OutputFormat::csv) {
        write_identity_header(out);
        write_identity_row(out, config.identity_n, config.identity_x, config.identity_y, check);
    } else {
        write_json(out, identity_json(config.identity_n, config.identity_x, config.identity_y,
                                      check));
    }
    return 0;
}

} // namespace

int run(const RunConfig& config) {
    try {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (config.output_path) {
            file.open(*config.output_path, std::ios::binary);
            if (!file) {
                std::cerr << "saplab: cannot open output file: " << *config.output_path << "\n";
                return 1;
            }
            out = &file;
        }

        int code = 0;
        switch (config.command) {
            case Command::extrapolate: code = run_extrapolate(config, *out); break;
            case Command::verify_identity: code = run_identity(config, *out); break;
            case Command::sieve: code = run_sieve(config, *out); break;
            case Command::scan: code = run_scan(config, *out); break;
            case Command::gaps: code = run_gaps(config, *out); break;
            case Command::twins: code = run_twins(config, *out); break;
            case Command::histogram: code = run_histogram(config, *out); break;
        }

        out->flush();
        if (!*out) {
            std::cerr << "saplab: write failure\n";
            return 1;
        }
        return code;
    } catch (const std::exception& e) {
        std::cerr << "saplab: " << e.what() << "\n";
        return 1;
    }
}

} // namespace saplab
