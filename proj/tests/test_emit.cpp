#include "saplab/emit.hpp"

#include "saplab/csv.hpp"

#include <doctest.h>

#include <sstream>

using namespace saplab;

TEST_CASE("csv_field quotes exactly when needed") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("") == "");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
    CHECK(csv_field("13;17") == "13;17");
}

TEST_CASE("format_double emits shortest round-trip forms") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(4.0) == "4");
    CHECK(format_double(499.95) == "499.95");
    CHECK(format_double(-2.5) == "-2.5");
}

TEST_CASE("format_hit_rate: six digits, integer rounding") {
    CHECK(format_hit_rate(0, 0) == "0.000000");
    CHECK(format_hit_rate(0, 5) == "0.000000");
    CHECK(format_hit_rate(1, 2) == "0.500000");
    CHECK(format_hit_rate(5, 7) == "0.714286");
    CHECK(format_hit_rate(1, 3) == "0.333333");
    CHECK(format_hit_rate(2, 3) == "0.666667");
    CHECK(format_hit_rate(7, 7) == "1.000000");
}

TEST_CASE("scan CSV rows are byte-stable") {
    std::ostringstream out;
    write_scan_header(out);
    write_scan_row(out, evaluate_window({7, 11}, WindowMode::strict));
    write_scan_row(out, evaluate_window({1327, 1361}, WindowMode::interval));
    CHECK(out.str() ==
          "p_prev2,p_prev1,midpoint,mode,primes_found,hit\n"
          "7,11,15,strict,13;17,true\n"
          "1327,1361,1395,interval,,false\n");
}

TEST_CASE("gap and twin CSV rows") {
    std::ostringstream gaps;
    write_gap_header(gaps);
    write_gap_row(gaps, 1, 2);
    write_gap_row(gaps, 2, 4);
    CHECK(gaps.str() == "index,diff,zero\n1,2,0\n2,4,0\n");

    std::ostringstream twins;
    write_twin_header(twins);
    write_twin_row(twins, TwinRecord{3, 5, 2, true});
    CHECK(twins.str() == "p_small,p_large,difference,condition_satisfied\n3,5,2,true\n");
}

TEST_CASE("extrapolate and identity CSV rows carry exact rationals") {
    std::ostringstream out;
    write_extrapolate_header(out);
    write_extrapolate_row(out, ExtrapolationResult{Rational(11), 1});
    Rational third(1, 3);
    write_extrapolate_row(out, ExtrapolationResult{third, 2});
    CHECK(out.str() == "step,value\n1,11\n2,1/3\n");
}

TEST_CASE("json_exact: integers as numbers, big or fractional values as strings") {
    CHECK(json_exact(Rational(42)) == ordered_json(42));
    CHECK(json_exact(Rational(-7)) == ordered_json(-7));
    CHECK(json_exact(Rational(1, 3)) == ordered_json("1/3"));

    Rational huge;
    mpz_ui_pow_ui(mpq_numref(huge.get_mpq_t()), 10, 30);  // 10^30, way past 64 bits
    CHECK(json_exact(huge) == ordered_json("1000000000000000000000000000000"));
}

TEST_CASE("scan JSON round-trips to the in-memory records") {
    const PrimeTable table = sieve(2000);
    ScanOptions options;
    options.mode = WindowMode::interval;
    const ScanResult result = scan(table, options);

    const ordered_json doc = scan_json(2000, options, result.records, result.summary);
    const auto parsed = ordered_json::parse(doc.dump(2));

    CHECK(parsed["command"] == "scan");
    CHECK(parsed["mode"] == "interval");
    REQUIRE(parsed["records"].size() == result.records.size());

    for (std::size_t i = 0; i < result.records.size(); ++i) {
        ConjectureRecord rebuilt;
        const auto& row = parsed["records"][i];
        rebuilt.pair.p_prev2 = row["p_prev2"].get<std::uint64_t>();
        rebuilt.pair.p_prev1 = row["p_prev1"].get<std::uint64_t>();
        rebuilt.midpoint = row["midpoint"].get<std::uint64_t>();
        rebuilt.mode = parse_window_mode(parsed["mode"].get<std::string>());
        rebuilt.primes_found = row["primes_found"].get<std::vector<std::uint64_t>>();
        rebuilt.hit = row["hit"].get<bool>();
        CHECK(rebuilt == result.records[i]);
    }

    const auto& summary = parsed["summary"];
    CHECK(summary["total_pairs"].get<std::uint64_t>() == result.summary.total_pairs);
    CHECK(summary["hits"].get<std::uint64_t>() == result.summary.hits);
    CHECK(summary["misses"].get<std::uint64_t>() == result.summary.misses);
    REQUIRE(summary["counterexamples"].size() == result.summary.counterexamples.size());
    for (std::size_t i = 0; i < result.summary.counterexamples.size(); ++i) {
        CHECK(summary["counterexamples"][i]["p_prev2"].get<std::uint64_t>() ==
              result.summary.counterexamples[i].p_prev2);
        CHECK(summary["counterexamples"][i]["p_prev1"].get<std::uint64_t>() ==
              result.summary.counterexamples[i].p_prev1);
    }
}

TEST_CASE("summary JSON pairs the decimal rate with the exact integers") {
    ScanSummary summary;
    summary.total_pairs = 7;
    summary.hits = 5;
    summary.misses = 2;
    summary.counterexamples = {{23, 29}, {1327, 1361}};
    const ordered_json j = summary_json(summary);
    CHECK(j["hit_rate"] == "0.714286");
    CHECK(j["hits"] == 5);
    CHECK(j["total_pairs"] == 7);
    CHECK(j["counterexamples"][1]["p_prev2"] == 1327);
}
