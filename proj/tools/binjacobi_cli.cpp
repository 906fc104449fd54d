// binjacobi command line front end.
//
// Subcommands: eval, trace, search, stats, bench. Operands are decimal or
// 0x-prefixed hex; B may be negative, A must be odd positive. Exit code 0
// on success, 2 on invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binjacobi/harness.hpp"
#include "binjacobi/jacobi.hpp"

namespace {

using namespace binjacobi;

Nat parse_operand(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        s.erase(0, 1);
    }
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        s.erase(0, 2);
    }
    Nat x;
    if (s.empty() || mpz_set_str(x.get_mpz_t(), s.c_str(), base) != 0)
        throw invalid_input("cannot parse operand '" + text + "'");
    if (neg) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    return x;
}

std::vector<unsigned long> parse_sizes(const std::string& text) {
    std::vector<unsigned long> sizes;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        sizes.push_back(std::stoul(item));
    }
    if (sizes.empty()) throw invalid_input("empty size list");
    return sizes;
}

std::vector<Algorithm> parse_algs(const std::string& text) {
    std::vector<Algorithm> algs;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        algs.push_back(parse_algorithm(item));
    }
    if (algs.empty()) throw invalid_input("empty algorithm list");
    return algs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi symbol (B|A) via binary-division algorithms"};
    app.require_subcommand(1);

    std::string alg_name = "fast";
    std::string b_text, a_text;
    unsigned max_bits = 10;
    unsigned cap = default_search_cap;
    unsigned long bits = 60;
    std::uint64_t count = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string sizes_text = "1024,4096,16384";
    std::string algs_text = "cubic,quadratic,fast,oracle";
    std::string csv_path;

    auto add_operands = [&](CLI::App* cmd) {
        cmd->add_option("B", b_text, "numerator operand")->required();
        cmd->add_option("A", a_text, "denominator operand (odd positive)")->required();
    };

    auto* eval = app.add_subcommand("eval", "print the symbol (B|A)");
    eval->add_option("--alg", alg_name, "cubic|quadratic|fast|oracle");
    add_operands(eval);

    auto* trace = app.add_subcommand(
        "trace", "print one line per division iteration of (B|A)");
    auto* trace_alg =
        trace->add_option("--alg", alg_name, "cubic|quadratic (default cubic)");
    add_operands(trace);

    auto* search = app.add_subcommand(
        "search", "exhaustive worst-case iteration counts for small operands");
    auto* search_alg =
        search->add_option("--alg", alg_name, "cubic|quadratic (default cubic)");
    search->add_option("--max-bits", max_bits, "largest operand bound 2^n");
    search->add_option("--cap", cap, "safety cap on --max-bits");
    search->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* stats = app.add_subcommand(
        "stats", "iteration statistics over seeded random pairs");
    auto* stats_alg =
        stats->add_option("--alg", alg_name, "cubic|quadratic (default cubic)");
    stats->add_option("--bits", bits, "operand size in bits");
    stats->add_option("--count", count, "number of pairs");
    stats->add_option("--seed", seed, "generator seed");
    stats->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* bench = app.add_subcommand("bench", "wall-clock timing, CSV output");
    bench->add_option("--sizes", sizes_text, "comma-separated bit sizes");
    bench->add_option("--algs", algs_text, "comma-separated algorithms");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--csv", csv_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        // Trace, search and stats work on the iteration-traced engines; their
        // unstated default is cubic rather than the evaluator's fast.
        if ((trace->parsed() && trace_alg->count() == 0) ||
            (search->parsed() && search_alg->count() == 0) ||
            (stats->parsed() && stats_alg->count() == 0))
            alg_name = "cubic";
        const Algorithm alg = parse_algorithm(alg_name);
        if (eval->parsed()) {
            const JacobiValue v = jacobi(parse_operand(b_text), parse_operand(a_text), alg);
            std::cout << v.value() << '\n';
        } else if (trace->parsed()) {
            if (alg != Algorithm::cubic && alg != Algorithm::quadratic)
                throw invalid_input("trace: alg must be cubic or quadratic");
            const Nat a = parse_operand(a_text);
            NormalizeResult norm = normalize(parse_operand(b_text), a);
            if (auto* n = std::get_if<Normalized>(&norm)) {
                IterTrace t;
                if (alg == Algorithm::cubic)
                    cubic_binary_jacobi(a, n->b, RecordingSink{&t});
                else
                    quadratic_binary_jacobi(a, n->b, RecordingSink{&t});
                for (const auto& rec : t)
                    std::cout << rec.index << ' ' << to_string(rec.cls) << ' '
                              << rec.j << ' ' << rec.q.get_str() << ' '
                              << rec.bits_a << ' ' << rec.bits_b << '\n';
            }
        } else if (search->parsed()) {
            if (alg != Algorithm::cubic && alg != Algorithm::quadratic)
                throw invalid_input("search: alg must be cubic or quadratic");
            std::cout << format_search(
                run_exhaustive_search(max_bits, alg, threads, cap));
        } else if (stats->parsed()) {
            std::cout << format_stats(
                run_sample_stats(bits, count, seed, alg, threads));
        } else if (bench->parsed()) {
            const auto rows =
                run_bench(parse_sizes(sizes_text), parse_algs(algs_text), seed);
            if (csv_path.empty()) {
                write_bench_csv(std::cout, rows);
            } else {
                std::ofstream out(csv_path, std::ios::binary);
                if (!out) throw invalid_input("cannot open " + csv_path);
                write_bench_csv(out, rows);
            }
        }
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
