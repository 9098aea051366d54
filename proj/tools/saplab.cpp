// saplab: exact polynomial extrapolation over unit-spaced samples plus an
// empirical laboratory for the consecutive-prime window conjecture
// P(n) = 2*P(n-1) - P(n-2) +/- 2. Every subcommand emits a deterministic
// CSV or JSON dataset; see README.md for the column and schema reference.

#include "saplab/run.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<saplab::Rational> parse_value_list(const std::string& csv) {
    std::vector<saplab::Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(saplab::parse_rational(item));
    if (out.empty()) throw std::invalid_argument("--values must list at least one sample");
    return out;
}

struct CommonFlags {
    std::string format = "csv";
    std::string output;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--output,-o", output, "Write to this file instead of stdout");
    }

    void apply(saplab::RunConfig& config) const {
        config.format =
            format == "json" ? saplab::OutputFormat::json : saplab::OutputFormat::csv;
        if (!output.empty()) config.output_path = output;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SAP polynomial extrapolation and consecutive-prime window laboratory"};
    app.require_subcommand(1);

    // scan
    auto* scan_cmd = app.add_subcommand(
        "scan", "Evaluate the prime window over every consecutive pair up to --limit");
    std::uint64_t scan_limit = 0;
    std::string scan_mode = "strict";
    std::uint64_t scan_threshold = saplab::kDefaultMinMidpoint;
    unsigned scan_threads = 1;
    CommonFlags scan_common;
    scan_cmd->add_option("--limit", scan_limit, "Sieve limit")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    scan_cmd->add_option("--mode", scan_mode, "Window candidate set")
        ->check(CLI::IsMember({"strict", "odd3", "interval"}))
        ->capture_default_str();
    scan_cmd->add_option("--threshold", scan_threshold,
                         "Minimum window midpoint (10 enforces generated prime > 7; 8 is the looser reading)")
        ->capture_default_str();
    scan_cmd->add_option("--threads", scan_threads, "Internal worker threads")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    scan_common.attach(scan_cmd);

    // sieve
    auto* sieve_cmd = app.add_subcommand("sieve", "List all primes up to --limit");
    std::uint64_t sieve_limit = 0;
    CommonFlags sieve_common;
    sieve_cmd->add_option("--limit", sieve_limit, "Sieve limit")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    sieve_common.attach(sieve_cmd);

    // gaps
    auto* gaps_cmd = app.add_subcommand(
        "gaps", "Differences between successive condition-satisfying primes");
    std::uint64_t gaps_limit = 0;
    std::string gaps_mode = "strict";
    std::uint64_t gaps_threshold = saplab::kDefaultMinMidpoint;
    CommonFlags gaps_common;
    gaps_cmd->add_option("--limit", gaps_limit, "Sieve limit")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    gaps_cmd->add_option("--mode", gaps_mode, "Window candidate set")
        ->check(CLI::IsMember({"strict", "odd3", "interval"}))
        ->capture_default_str();
    gaps_cmd->add_option("--threshold", gaps_threshold, "Minimum window midpoint")
        ->capture_default_str();
    gaps_common.attach(gaps_cmd);

    // twins
    auto* twins_cmd = app.add_subcommand(
        "twins", "Consecutive pairs (p, next prime) with their window verdicts");
    std::uint64_t twins_limit = 0;
    std::uint64_t twins_min = 3;
    std::string twins_mode = "strict";
    CommonFlags twins_common;
    twins_cmd->add_option("--limit", twins_limit, "Largest starting prime to consider")
        ->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    twins_cmd->add_option("--min", twins_min, "Smallest starting prime to consider")
        ->capture_default_str();
    twins_cmd->add_option("--mode", twins_mode, "Window candidate set")
        ->check(CLI::IsMember({"strict", "odd3", "interval"}))
        ->capture_default_str();
    twins_common.attach(twins_cmd);

    // histogram
    auto* hist_cmd = app.add_subcommand(
        "histogram", "Shared-edge histogram of condition primes vs all primes");
    std::uint64_t hist_limit = 0;
    std::uint32_t hist_bins = 20;
    std::string hist_mode = "strict";
    std::uint64_t hist_threshold = saplab::kDefaultMinMidpoint;
    CommonFlags hist_common;
    hist_cmd->add_option("--limit", hist_limit, "Sieve limit")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
    hist_cmd->add_option("--bins", hist_bins, "Number of equal-width bins")
        ->check(CLI::Range(1u, 1u << 20))
        ->capture_default_str();
    hist_cmd->add_option("--mode", hist_mode, "Window candidate set")
        ->check(CLI::IsMember({"strict", "odd3", "interval"}))
        ->capture_default_str();
    hist_cmd->add_option("--threshold", hist_threshold, "Minimum window midpoint")
        ->capture_default_str();
    hist_common.attach(hist_cmd);

    // extrapolate
    auto* extra_cmd = app.add_subcommand(
        "extrapolate", "Extend a run of equally spaced samples with exact arithmetic");
    unsigned extra_degree = 1;
    std::string extra_values;
    unsigned extra_steps = 1;
    CommonFlags extra_common;
    extra_cmd->add_option("--degree", extra_degree, "Polynomial degree m")
        ->check(CLI::Range(0u, 10000u))
        ->capture_default_str();
    extra_cmd->add_option("--values", extra_values,
                          "Comma-separated samples, oldest first (integers or p/q fractions)")
        ->required();
    extra_cmd->add_option("--steps", extra_steps, "How many future samples to produce")
        ->check(CLI::Range(1u, 1u << 20))
        ->capture_default_str();
    extra_common.attach(extra_cmd);

    // verify-identity
    auto* verify_cmd = app.add_subcommand(
        "verify-identity", "Check the binomial shift identity for (x+y)^n");
    unsigned verify_n = 0;
    std::string verify_x = "0";
    std::string verify_y = "0";
    CommonFlags verify_common;
    verify_cmd->add_option("--n", verify_n, "Exponent (and degree) n")
        ->required()
        ->check(CLI::Range(0u, 10000u));
    verify_cmd->add_option("--x", verify_x, "Rational x")->capture_default_str();
    verify_cmd->add_option("--y", verify_y, "Rational y")->capture_default_str();
    verify_common.attach(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    saplab::RunConfig config;
    try {
        if (scan_cmd->parsed()) {
            config.command = saplab::Command::scan;
            config.limit = scan_limit;
            config.mode = saplab::parse_window_mode(scan_mode);
            config.min_midpoint = scan_threshold;
            config.threads = scan_threads;
            scan_common.apply(config);
        } else if (sieve_cmd->parsed()) {
            config.command = saplab::Command::sieve;
            config.limit = sieve_limit;
            sieve_common.apply(config);
        } else if (gaps_cmd->parsed()) {
            config.command = saplab::Command::gaps;
            config.limit = gaps_limit;
            config.mode = saplab::parse_window_mode(gaps_mode);
            config.min_midpoint = gaps_threshold;
            gaps_common.apply(config);
        } else if (twins_cmd->parsed()) {
            config.command = saplab::Command::twins;
            config.limit = twins_limit;
            config.twin_min = twins_min;
            config.mode = saplab::parse_window_mode(twins_mode);
            twins_common.apply(config);
        } else if (hist_cmd->parsed()) {
            config.command = saplab::Command::histogram;
            config.limit = hist_limit;
            config.bins = hist_bins;
            config.mode = saplab::parse_window_mode(hist_mode);
            config.min_midpoint = hist_threshold;
            hist_common.apply(config);
        } else if (extra_cmd->parsed()) {
            config.command = saplab::Command::extrapolate;
            config.degree = extra_degree;
            config.values = parse_value_list(extra_values);
            config.steps = extra_steps;
            extra_common.apply(config);
        } else if (verify_cmd->parsed()) {
            config.command = saplab::Command::verify_identity;
            config.identity_n = verify_n;
            config.identity_x = saplab::parse_rational(verify_x);
            config.identity_y = saplab::parse_rational(verify_y);
            verify_common.apply(config);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "saplab: " << e.what() << "\n";
        return 2;
    }

    return saplab::run(config);
}
