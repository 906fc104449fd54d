#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "binjacobi/harness.hpp"

using namespace binjacobi;

TEST_CASE("search: small worst cases and their witnesses") {
    const auto rows = run_exhaustive_search(5, Algorithm::cubic);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].max_iters == 0);
    CHECK_FALSE(rows[0].has_witness);  // no even b below 2

    CHECK(rows[1].max_iters == 1);
    CHECK(rows[1].a == 3);
    CHECK(rows[1].b == 2);

    CHECK(rows[4].n == 5);
    CHECK(rows[4].max_iters == 6);
    CHECK(rows[4].a == 7);   // (31, 14) reaches 6 as well; (7, 30) is smaller
    CHECK(rows[4].b == 30);
}

TEST_CASE("search: thread count does not change the report") {
    const auto one = run_exhaustive_search(8, Algorithm::cubic, 1);
    const auto many = run_exhaustive_search(8, Algorithm::cubic, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].max_iters == many[i].max_iters);
        CHECK(one[i].has_witness == many[i].has_witness);
        CHECK(one[i].a == many[i].a);
        CHECK(one[i].b == many[i].b);
    }
}

TEST_CASE("search: quadratic variant runs and never exceeds cubic") {
    const auto cub = run_exhaustive_search(7, Algorithm::cubic);
    const auto quad = run_exhaustive_search(7, Algorithm::quadratic);
    for (std::size_t i = 0; i < cub.size(); ++i)
        CHECK(quad[i].max_iters <= cub[i].max_iters);
}

TEST_CASE("search: refuses beyond the cap, accepts an explicit larger cap") {
    CHECK_THROWS_AS(run_exhaustive_search(14, Algorithm::cubic), invalid_input);
    CHECK_THROWS_AS(run_exhaustive_search(3, Algorithm::fast), invalid_input);
    CHECK_NOTHROW(run_exhaustive_search(3, Algorithm::cubic, 1, 20));
}

TEST_CASE("search: report format") {
    const auto rows = run_exhaustive_search(5, Algorithm::cubic);
    const std::string text = format_search(rows);
    CHECK(text.find("n 1: maxits 0 (no admissible pairs)") != std::string::npos);
    CHECK(text.find("n 5: maxits 6 for a 7, b 30") != std::string::npos);
}

TEST_CASE("stats: deterministic across thread counts and repeat runs") {
    const auto a = run_sample_stats(40, 20000, 12345, Algorithm::cubic, 1);
    const auto b = run_sample_stats(40, 20000, 12345, Algorithm::cubic, 4);
    const auto c = run_sample_stats(40, 20000, 12345, Algorithm::cubic, 2);
    CHECK(format_stats(a) == format_stats(b));
    CHECK(format_stats(a) == format_stats(c));
    CHECK(a.counts.total() == a.total_iters());
    CHECK(a.calls == 20000);

    const auto other_seed = run_sample_stats(40, 20000, 54321, Algorithm::cubic, 2);
    CHECK(format_stats(a) != format_stats(other_seed));
}

TEST_CASE("stats: class fractions drift toward 1/2, 1/4, 1/4 as bits grow") {
    double prev_good = 0.0;
    for (unsigned long bits : {20ul, 40ul, 60ul}) {
        const auto rep = run_sample_stats(bits, 30000, 7, Algorithm::cubic);
        const double tot = double(rep.total_iters());
        const double good = double(rep.counts.good) / tot;
        const double bad = double(rep.counts.bad) / tot;
        const double ugly = double(rep.counts.ugly) / tot;
        CHECK(rep.counts.harmless == 0);
        // Loose brackets; the acceptance suite pins the 60-bit numbers.
        CHECK(good > 0.45);
        CHECK(good < 0.55);
        CHECK(bad > 0.20);
        CHECK(bad < 0.30);
        CHECK(ugly > 0.18);
        CHECK(ugly < 0.30);
        CHECK(good > prev_good - 0.02);  // monotone trend, small-sample slack
        prev_good = good;
    }
}

TEST_CASE("stats: quadratic reports harmless instead of ugly") {
    const auto rep = run_sample_stats(40, 5000, 9, Algorithm::quadratic);
    CHECK(rep.counts.ugly == 0);
    CHECK(rep.counts.harmless > 0);
    const std::string text = format_stats(rep);
    CHECK(text.find("QuadraticBinaryJacobi") == 0);
    CHECK(text.find("harmless") != std::string::npos);
    CHECK(text.find("Mean iterations per call") != std::string::npos);
}

TEST_CASE("stats: rejects unsupported algorithms") {
    CHECK_THROWS_AS(run_sample_stats(40, 10, 1, Algorithm::fast),
                    invalid_input);
    CHECK_THROWS_AS(run_sample_stats(40, 10, 1, Algorithm::oracle),
                    invalid_input);
}

TEST_CASE("drift: empty sample is an error") {
    CHECK_THROWS_AS(estimate_drift(1000, 0, 1), invalid_input);
}

TEST_CASE("drift: small-scale estimate lands near 1.348") {
    const double d = estimate_drift(4000, 6, 2024);
    CHECK(d > 1.28);
    CHECK(d < 1.42);
}

TEST_CASE("bench: rows are sorted and the CSV round-trips") {
    auto rows = run_bench({64, 256}, {Algorithm::fast, Algorithm::cubic}, 5);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].alg == Algorithm::cubic);
    CHECK(rows[0].bits == 64);
    CHECK(rows[1].bits == 256);
    CHECK(rows[2].alg == Algorithm::fast);
    for (const auto& row : rows) CHECK(row.time_ns > 0);
    CHECK(rows[0].iterations > 0);   // cubic is iteration-traced
    CHECK(rows[2].iterations == 0);  // fast is not

    std::ostringstream out;
    write_bench_csv(out, rows);
    const std::string text = out.str();
    CHECK(text.rfind("alg,bits,iterations,time_ns\n", 0) == 0);
    CHECK(text.find('"') == std::string::npos);
    CHECK(text.find("\r") == std::string::npos);

    std::istringstream in(text);
    const auto parsed = parse_bench_csv(in);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed[i].alg == rows[i].alg);
        CHECK(parsed[i].bits == rows[i].bits);
        CHECK(parsed[i].iterations == rows[i].iterations);
        CHECK(parsed[i].time_ns == rows[i].time_ns);
    }

    std::istringstream bad("alg,bits\n");
    CHECK_THROWS_AS(parse_bench_csv(bad), invalid_input);
}
