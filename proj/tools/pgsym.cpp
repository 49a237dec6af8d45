/*
 * Copyright 2026 The pgsym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgsym/bench.hpp"
#include "pgsym/generator.hpp"
#include "pgsym/pgsolver.hpp"
#include "pgsym/solvers.hpp"
#include "pgsym/symbolic_game.hpp"

using namespace pgsym;

namespace {

enum Exit { kOk = 0, kUsage = 1, kTimeout = 2, kOutOfMemory = 3, kMismatch = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

ExplicitGame load_game(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_pgsolver(text);
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
    }
}

std::string join(const std::vector<VertexId>& ids) {
    std::string s;
    for (VertexId v : ids) {
        s += ' ';
        s += std::to_string(v);
    }
    return s;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PGSYM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("PGSYM_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

void print_stats(Algorithm alg, const SolverStats& s) {
    std::cout << "time_ms: " << static_cast<double>(s.wall_time.count()) / 1000.0 << '\n';
    std::cout << "peak_nodes: " << s.peak_live_nodes << '\n';
    switch (alg) {
    case Algorithm::Zielonka: std::cout << "recursive_calls: " << s.recursive_calls << '\n'; break;
    case Algorithm::PriorityPromotion:
        std::cout << "promotions: " << s.promotions << '\n'
                  << "searcher_iterations: " << s.searcher_iterations << '\n'
                  << "dominions: " << s.dominions << '\n';
        break;
    case Algorithm::FixpointIteration:
        std::cout << "fixpoint_iterations: " << s.fixpoint_iterations << '\n' << "resets: " << s.resets << '\n';
        break;
    case Algorithm::Apt:
        std::cout << "win_calls: " << s.win_calls << '\n' << "fp_iterations: " << s.fp_iterations << '\n';
        break;
    }
}

void print_verify(const std::string& label, const VerifyReport& r) {
    if (r.pass && r.unconfirmed() > 0) {
        std::cout << "UNCONFIRMED " << label << ": " << r.unconfirmed() << " solver run(s) timed out\n";
    } else if (r.pass) {
        std::cout << "PASS " << label << (r.bruteforce_checked ? " (brute force checked)" : "") << '\n';
    } else {
        std::cout << "FAIL " << label << ": " << r.message << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic parity game solvers"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random game in PGSolver format");
    gen->set_help_flag("--help", "Print this help message and exit");
    std::uint64_t gen_n = 0;
    std::optional<std::uint32_t> gen_p;
    std::uint64_t gen_l = 1;
    std::optional<std::uint64_t> gen_h;
    bool gen_no_loops = false;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Number of vertices")->required();
    gen->add_option("--p", gen_p, "Number of priorities (default N)");
    gen->add_option("--l", gen_l, "Minimum out-degree");
    gen->add_option("--h", gen_h, "Maximum out-degree (default max(L, 2))");
    gen->add_flag("--no-self-loops", gen_no_loops, "Exclude self loops");
    gen->add_option("--seed", gen_seed, "Seed (default $PGSYM_SEED or 0)");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // convert
    auto* convert = app.add_subcommand("convert", "Normalize a PGSolver file");
    std::string convert_in;
    std::string convert_out;
    convert->add_option("input", convert_in, "Input file")->required();
    convert->add_option("-o,--output", convert_out, "Output file (default stdout)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve a game symbolically");
    std::string solve_in;
    std::string solve_alg = "zielonka";
    std::optional<std::int64_t> solve_timeout;
    std::optional<std::size_t> solve_budget;
    bool solve_check = false;
    solve_cmd->add_option("input", solve_in, "Input file")->required();
    solve_cmd->add_option("--alg", solve_alg, "zielonka, pp, fi or apt");
    solve_cmd->add_option("--timeout", solve_timeout, "Timeout in milliseconds")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--node-budget", solve_budget, "Maximum number of live BDD nodes");
    solve_cmd->add_flag("--check", solve_check, "Enable invariant checks");

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check all solvers against the explicit oracles");
    std::string verify_in;
    std::optional<std::size_t> verify_fleet_count;
    FleetSpec fleet;
    bool verify_corrupt = false;
    std::optional<std::int64_t> verify_timeout;
    verify->add_option("input", verify_in, "Input file");
    verify->add_option("--fleet", verify_fleet_count, "Verify a seeded fleet of this many random games");
    verify->add_option("--min-n", fleet.min_n, "Fleet: smallest N");
    verify->add_option("--max-n", fleet.max_n, "Fleet: largest N");
    verify->add_option("--first-seed", fleet.first_seed, "Fleet: seed of the first game");
    verify->add_option("--timeout", verify_timeout, "Per solver run, in milliseconds")->check(CLI::NonNegativeNumber);
    verify->add_flag("--corrupt", verify_corrupt, "Test hook: corrupt the Zielonka result before comparing");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
    std::string bench_suite = "smoke";
    std::string bench_csv;
    std::string bench_md;
    bench->add_option("--suite", bench_suite, "smoke, empty, outcomes, many-priorities or few-priorities");
    bench->add_option("--out", bench_csv, "CSV output file (default stdout)");
    bench->add_option("--summary", bench_md, "Markdown summary file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) {
            GenSpec spec;
            spec.vertices = gen_n;
            spec.priorities = gen_p.value_or(static_cast<std::uint32_t>(gen_n));
            spec.min_degree = gen_l;
            spec.max_degree = gen_h.value_or(std::max<std::uint64_t>(gen_l, 2));
            spec.self_loop_free = gen_no_loops;
            spec.seed = gen_seed ? *gen_seed : default_seed();
            write_output(gen_out, write_pgsolver(generate(spec)));
            return kOk;
        }
        if (*convert) {
            write_output(convert_out, write_pgsolver(load_game(convert_in)));
            return kOk;
        }
        if (*solve_cmd) {
            const auto alg = parse_algorithm(solve_alg);
            if (!alg) throw UsageError("unknown algorithm: " + solve_alg);
            const SymbolicGame game = encode(load_game(solve_in));
            SolveOptions opts;
            if (solve_timeout) opts.timeout = std::chrono::milliseconds(*solve_timeout);
            opts.node_budget = solve_budget;
            opts.check_invariants = solve_check;
            const SolveResult res = solve(game, *alg, opts);
            std::cout << "outcome: " << to_string(res.outcome) << '\n';
            if (res.solution) {
                std::cout << "W0:" << join(decode_set(game, res.solution->won_even)) << '\n';
                std::cout << "W1:" << join(decode_set(game, res.solution->won_odd)) << '\n';
            }
            print_stats(*alg, res.stats);
            switch (res.outcome) {
            case Outcome::Solved: return kOk;
            case Outcome::Timeout: return kTimeout;
            case Outcome::OutOfMemory: return kOutOfMemory;
            }
        }
        if (*verify) {
            VerifyOptions opts;
            if (verify_timeout) opts.solver_timeout = std::chrono::milliseconds(*verify_timeout);
            if (verify_corrupt) {
                opts.tamper = [](Algorithm alg, ExplicitSolution& s) {
                    if (alg == Algorithm::Zielonka) corrupt_solution(s);
                };
            }
            if (verify_fleet_count) {
                if (!verify_in.empty()) throw UsageError("give either a file or --fleet");
                fleet.count = *verify_fleet_count;
                if (fleet.min_n < 1 || fleet.min_n > fleet.max_n) throw UsageError("invalid fleet N range");
                const FleetReport rep = verify_fleet(fleet, opts, [](std::size_t, const FleetGame& g,
                                                                     const VerifyReport& r) { print_verify(g.label, r); });
                std::cout << "fleet: " << rep.games << " games, " << rep.mismatches << " mismatches, "
                          << rep.bruteforce_checked << " brute-force checked, " << rep.unconfirmed_runs
                          << " unconfirmed solver runs\n";
                if (rep.mismatches > 0) return kMismatch;
                return rep.unconfirmed_runs == 0 ? kOk : kTimeout;
            }
            if (verify_in.empty()) throw UsageError("verify needs a file or --fleet");
            const VerifyReport rep = verify_game(load_game(verify_in), opts);
            print_verify(verify_in, rep);
            if (!rep.pass) return kMismatch;
            return rep.unconfirmed() == 0 ? kOk : kTimeout;
        }
        if (*bench) {
            const auto suite = suite_by_name(bench_suite);
            if (!suite) throw UsageError("unknown suite: " + bench_suite);
            const auto records = run_suite(*suite, [](const BenchRecord& r) {
                std::cerr << r.game_id << ' ' << to_string(r.algorithm) << ' ' << to_string(r.outcome) << '\n';
            });
            std::ostringstream csv;
            write_csv(csv, records);
            write_output(bench_csv, csv.str());
            const std::string md = markdown_summary(records);
            if (!bench_md.empty()) {
                write_output(bench_md, md);
            } else {
                std::cerr << md;
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidGame& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
