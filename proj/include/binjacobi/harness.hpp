#pragma once
// harness.hpp - measurement tools around the division loops: exhaustive
// worst-case search over small operands, seeded sampling of iteration
// statistics, drift estimation, and wall-clock benchmarks with CSV output.
//
// Search and sampling split their input space into fixed deterministic
// chunks that workers claim atomically; partial results are merged in
// chunk order (the merge is associative and commutative anyway), so a
// given seed produces bit-identical reports under any thread count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "binjacobi/jacobi.hpp"
#include "binjacobi/rng.hpp"
#include "binjacobi/trace.hpp"

namespace binjacobi {

namespace detail {

inline unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Run `count` chunk bodies on a small pool; chunk index identifies the
// deterministic slice of work.
template <typename Fn>
void run_chunked(std::size_t count, unsigned threads, Fn&& body) {
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned n = std::min<std::size_t>(threads, count);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

template <TraceSink S>
std::uint64_t run_counted(Algorithm alg, const Nat& a, const Nat& b, S&& sink) {
    std::uint64_t iters = 0;
    auto counting = [&](const IterEvent& e) {
        ++iters;
        sink(e);
    };
    if (alg == Algorithm::cubic)
        cubic_binary_jacobi(a, b, counting);
    else
        quadratic_binary_jacobi(a, b, counting);
    return iters;
}

}  // namespace detail

// ---- Exhaustive worst-case search ----

struct WorstCaseRow {
    unsigned n;                // operand bound max(a,b) < 2^n
    std::uint64_t max_iters = 0;
    bool has_witness = false;
    Nat a, b;                  // lexicographically smallest max-achieving pair
};

inline constexpr unsigned default_search_cap = 13;

// Scans every admissible pair (a odd, b even, positive, max(a,b) < 2^n)
// for each n <= n_max and records the iteration maximum with its first
// witness. The cap keeps accidental huge scans out; raise it explicitly
// for longer runs.
inline std::vector<WorstCaseRow> run_exhaustive_search(
    unsigned n_max, Algorithm alg, unsigned threads = 0,
    unsigned cap = default_search_cap) {
    if (alg != Algorithm::cubic && alg != Algorithm::quadratic)
        throw invalid_input("run_exhaustive_search: alg must be cubic or quadratic");
    if (n_max < 1) throw invalid_input("run_exhaustive_search: n_max must be >= 1");
    if (n_max > cap)
        throw invalid_input("run_exhaustive_search: n_max " + std::to_string(n_max) +
                            " exceeds the cap of " + std::to_string(cap) +
                            "; pass a larger cap to opt in");

    struct Bucket {
        std::uint64_t max_iters = 0;
        bool has_witness = false;
        Nat a, b;
    };
    auto offer = [](Bucket& bk, std::uint64_t iters, const Nat& a, const Nat& b) {
        if (!bk.has_witness || iters > bk.max_iters ||
            (iters == bk.max_iters && (a < bk.a || (a == bk.a && b < bk.b)))) {
            bk.max_iters = iters;
            bk.has_witness = true;
            bk.a = a;
            bk.b = b;
        }
    };

    // Chunk the odd-a space; each chunk scans all b.
    const unsigned long a_limit = 1ul << n_max;
    const unsigned long chunk_span = 1024;  // odd values per chunk
    const std::size_t n_chunks = (a_limit / 2 + chunk_span - 1) / chunk_span;
    std::vector<std::vector<Bucket>> partial(n_chunks,
                                             std::vector<Bucket>(n_max + 1));

    detail::run_chunked(n_chunks, threads, [&](std::size_t ci) {
        auto& buckets = partial[ci];
        Nat a, b;
        const unsigned long a_begin = 2 * ci * chunk_span + 1;
        const unsigned long a_end =
            std::min(a_limit, a_begin + 2 * chunk_span);
        for (unsigned long av = a_begin; av < a_end; av += 2) {
            a = av;
            const std::size_t la = bit_length(a);
            for (unsigned long bv = 2; bv < a_limit; bv += 2) {
                b = bv;
                const std::size_t lb = bit_length(b);
                const unsigned n = static_cast<unsigned>(std::max(la, lb));
                const std::uint64_t iters =
                    detail::run_counted(alg, a, b, NullSink{});
                offer(buckets[n], iters, a, b);
            }
        }
    });

    std::vector<Bucket> merged(n_max + 1);
    for (const auto& buckets : partial)
        for (unsigned n = 1; n <= n_max; ++n)
            if (buckets[n].has_witness)
                offer(merged[n], buckets[n].max_iters, buckets[n].a, buckets[n].b);

    std::vector<WorstCaseRow> rows;
    Bucket running;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (merged[n].has_witness)
            offer(running, merged[n].max_iters, merged[n].a, merged[n].b);
        rows.push_back(WorstCaseRow{n, running.max_iters, running.has_witness,
                                    running.a, running.b});
    }
    return rows;
}

inline std::string format_search(const std::vector<WorstCaseRow>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        out << "n " << row.n << ": maxits " << row.max_iters;
        if (row.has_witness)
            out << " for a " << row.a.get_str() << ", b " << row.b.get_str();
        else
            out << " (no admissible pairs)";
        out << '\n';
    }
    return out.str();
}

// ---- Sampled iteration statistics ----

struct StatsReport {
    Algorithm alg = Algorithm::cubic;
    unsigned long bits = 0;
    std::uint64_t calls = 0;
    std::uint64_t seed = 0;
    ClassCounts counts;
    std::uint64_t max_iters = 0;
    Nat max_a, max_b;  // witness of max_iters

    std::uint64_t total_iters() const { return counts.total(); }
    double mean_iters() const {
        return calls == 0 ? 0.0 : double(counts.total()) / double(calls);
    }
};

// Aggregates traces of `count` seeded pairs (a odd, b even, both in
// [1, 2^bits)); alg must be cubic or quadratic.
inline StatsReport run_sample_stats(unsigned long bits, std::uint64_t count,
                                    std::uint64_t seed, Algorithm alg,
                                    unsigned threads = 0) {
    if (alg != Algorithm::cubic && alg != Algorithm::quadratic)
        throw invalid_input("run_sample_stats: alg must be cubic or quadratic");
    if (bits < 2) throw invalid_input("run_sample_stats: bits must be >= 2");

    struct Block {
        ClassCounts counts;
        std::uint64_t max_iters = 0;
        bool has_max = false;
        Nat max_a, max_b;
    };
    constexpr std::uint64_t block_size = 4096;
    const std::size_t n_blocks =
        static_cast<std::size_t>((count + block_size - 1) / block_size);
    std::vector<Block> partial(n_blocks);

    detail::run_chunked(n_blocks, threads, [&](std::size_t bi) {
        Block& blk = partial[bi];
        std::mt19937_64 gen(mix_seed(seed, bi));
        const std::uint64_t n =
            std::min(block_size, count - bi * block_size);
        for (std::uint64_t i = 0; i < n; ++i) {
            Nat a = random_odd(gen, bits);
            Nat b = random_even_positive(gen, bits);
            CountingSink sink{&blk.counts};
            const std::uint64_t iters = detail::run_counted(alg, a, b, sink);
            if (!blk.has_max || iters > blk.max_iters) {
                blk.max_iters = iters;
                blk.has_max = true;
                blk.max_a = std::move(a);
                blk.max_b = std::move(b);
            }
        }
    });

    StatsReport rep;
    rep.alg = alg;
    rep.bits = bits;
    rep.calls = count;
    rep.seed = seed;
    bool have_max = false;
    for (auto& blk : partial) {
        rep.counts += blk.counts;
        if (blk.has_max && (!have_max || blk.max_iters > rep.max_iters)) {
            have_max = true;
            rep.max_iters = blk.max_iters;
            rep.max_a = std::move(blk.max_a);
            rep.max_b = std::move(blk.max_b);
        }
    }
    return rep;
}

inline std::string format_stats(const StatsReport& rep) {
    const bool cubic = rep.alg == Algorithm::cubic;
    const std::uint64_t third = cubic ? rep.counts.ugly : rep.counts.harmless;
    const char* third_name = cubic ? "ugly" : "harmless";
    const double tot = double(std::max<std::uint64_t>(rep.total_iters(), 1));
    char buf[160];
    std::ostringstream out;
    out << (cubic ? "CubicBinaryJacobi" : "QuadraticBinaryJacobi") << '\n'
        << "bits " << rep.bits << ", calls " << rep.calls << ", seed "
        << rep.seed << '\n'
        << "maxits " << rep.max_iters << " for a " << rep.max_a.get_str()
        << ", b " << rep.max_b.get_str() << '\n'
        << "Cumulative counts\n"
        << " total " << rep.total_iters() << ", good " << rep.counts.good
        << ", bad " << rep.counts.bad << ", " << third_name << " " << third
        << '\n';
    std::snprintf(buf, sizeof buf,
                  "Percentages (good, bad, %s): %.2f, %.2f, %.2f\n",
                  third_name, 100.0 * double(rep.counts.good) / tot,
                  100.0 * double(rep.counts.bad) / tot,
                  100.0 * double(third) / tot);
    out << buf;
    std::snprintf(buf, sizeof buf, "Mean iterations per call  %.2f\n",
                  rep.mean_iters());
    out << buf;
    return out.str();
}

// ---- Drift estimate ----

// Mean of bit_length(a) / iterations over seeded cubic runs at exactly
// `bits` bits; converges to about 1.348 bits shed per iteration.
inline double estimate_drift(unsigned long bits, unsigned trials,
                             std::uint64_t seed) {
    if (trials == 0) throw invalid_input("estimate_drift: empty sample");
    if (bits < 8) throw invalid_input("estimate_drift: bits must be >= 8");
    double sum = 0.0;
    for (unsigned t = 0; t < trials; ++t) {
        std::mt19937_64 gen(mix_seed(seed, t));
        std::uint64_t iters = 0;
        do {
            Nat a = with_top_bit(random_odd(gen, bits), bits);
            Nat b = with_top_bit(random_even_positive(gen, bits), bits);
            cubic_binary_jacobi(std::move(a), std::move(b),
                                [&](const IterEvent&) { ++iters; });
        } while (iters == 0);
        sum += double(bits) / double(iters);
    }
    return sum / trials;
}

// ---- Benchmarks ----

struct BenchRow {
    Algorithm alg = Algorithm::cubic;
    unsigned long bits = 0;
    std::uint64_t iterations = 0;  // division iterations; 0 for fast/oracle
    std::uint64_t time_ns = 0;
};

namespace detail {

inline std::uint64_t time_once(Algorithm alg, const Nat& a, const Nat& b,
                               std::uint64_t& iters) {
    const auto t0 = std::chrono::steady_clock::now();
    switch (alg) {
        case Algorithm::cubic:
        case Algorithm::quadratic:
            iters = run_counted(alg, a, b, NullSink{});
            break;
        case Algorithm::fast:
            fast_binary_jacobi(a, b);
            break;
        case Algorithm::oracle:
            jacobi_oracle(b, a);
            break;
    }
    const auto t1 = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
}

}  // namespace detail

// One deterministic input pair per (bits, seed); short runs are repeated
// (first measurement serving as warm-up) and averaged.
inline std::vector<BenchRow> run_bench(std::vector<unsigned long> sizes,
                                       std::vector<Algorithm> algs,
                                       std::uint64_t seed) {
    std::sort(algs.begin(), algs.end());
    algs.erase(std::unique(algs.begin(), algs.end()), algs.end());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::vector<BenchRow> rows;
    for (Algorithm alg : algs) {
        for (unsigned long bits : sizes) {
            if (bits < 8) throw invalid_input("run_bench: sizes must be >= 8 bits");
            std::mt19937_64 gen(mix_seed(seed, bits));
            const Nat a = with_top_bit(random_odd(gen, bits), bits);
            const Nat b = with_top_bit(random_even_positive(gen, bits), bits);
            BenchRow row;
            row.alg = alg;
            row.bits = bits;
            std::uint64_t t = detail::time_once(alg, a, b, row.iterations);
            if (t < 50'000'000) {  // repeat sub-50ms runs for stability
                const std::uint64_t reps =
                    std::min<std::uint64_t>(20, 100'000'000 / std::max<std::uint64_t>(t, 1) + 1);
                std::uint64_t total = 0;
                for (std::uint64_t i = 0; i < reps; ++i)
                    total += detail::time_once(alg, a, b, row.iterations);
                t = total / reps;
            }
            row.time_ns = std::max<std::uint64_t>(t, 1);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "alg,bits,iterations,time_ns\n";
    for (const auto& row : rows)
        out << to_string(row.alg) << ',' << row.bits << ',' << row.iterations
            << ',' << row.time_ns << '\n';
}

inline std::vector<BenchRow> parse_bench_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "alg,bits,iterations,time_ns")
        throw invalid_input("bench csv: bad header");
    std::vector<BenchRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string alg, field;
        BenchRow row;
        if (!std::getline(ls, alg, ',')) throw invalid_input("bench csv: bad row");
        row.alg = parse_algorithm(alg);
        if (!std::getline(ls, field, ',')) throw invalid_input("bench csv: bad row");
        row.bits = std::stoul(field);
        if (!std::getline(ls, field, ',')) throw invalid_input("bench csv: bad row");
        row.iterations = std::stoull(field);
        if (!std::getline(ls, field)) throw invalid_input("bench csv: bad row");
        row.time_ns = std::stoull(field);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace binjacobi
