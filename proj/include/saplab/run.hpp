#pragma once

#include "saplab/conjecture.hpp"
#include "saplab/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace saplab {

enum class Command { extrapolate, verify_identity, sieve, scan, gaps, twins, histogram };

enum class OutputFormat { csv, json };

// One fully resolved invocation. Identical configs produce byte-identical
// output, whatever the thread count.
struct RunConfig {
    Command command = Command::sieve;
    OutputFormat format = OutputFormat::csv;
    std::optional<std::string> output_path;  // stdout when absent

    // prime commands
    std::uint64_t limit = 0;
    WindowMode mode = WindowMode::strict;
    std::uint64_t min_midpoint = kDefaultMinMidpoint;
    unsigned threads = 1;
    std::uint32_t bins = 20;
    std::uint64_t twin_min = 3;

    // extrapolate
    unsigned degree = 1;
    std::vector<Rational> values;
    unsigned steps = 1;

    // verify-identity
    unsigned identity_n = 0;
    Rational identity_x;
    Rational identity_y;
};

// Executes the configured pipeline, writing data to the output path (or
// stdout) and diagnostics to stderr. Returns 0 on success, 1 on runtime or
// domain errors. Flag validation happens before this layer.
int run(const RunConfig& config);

} // namespace saplab
