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

#include "pgsym/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "pgsym/oracle.hpp"
#include "pgsym/symbolic_game.hpp"

namespace pgsym {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double base_of(GameClass cls) {
    switch (cls) {
    case GameClass::Pow2: return 2.0;
    case GameClass::PowE: return std::exp(1.0);
    case GameClass::Pow10: return 10.0;
    case GameClass::Pow13: return 13.0;
    default: return 0.0;
    }
}

ExplicitSolution decode(const SymbolicGame& game, const Solution& s) {
    return ExplicitSolution{decode_set(game, s.won_even), decode_set(game, s.won_odd)};
}

std::optional<VertexId> first_difference(const ExplicitGame& game, const ExplicitSolution& a,
                                         const ExplicitSolution& b) {
    std::vector<VertexId> ids;
    ids.reserve(game.size());
    for (const auto& rec : game.vertices) ids.push_back(rec.id);
    std::sort(ids.begin(), ids.end());
    auto in = [](const std::vector<VertexId>& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); };
    for (VertexId v : ids) {
        if (in(a.won_even, v) != in(b.won_even, v) || in(a.won_odd, v) != in(b.won_odd, v)) return v;
    }
    // Ids outside the game can only appear in a malformed solution.
    for (const auto* s : {&b.won_even, &b.won_odd}) {
        for (VertexId v : *s) {
            if (!std::binary_search(ids.begin(), ids.end(), v)) return v;
        }
    }
    return std::nullopt;
}

// The counter that best reflects the work of each algorithm.
std::uint64_t main_counter(Algorithm alg, const SolverStats& s) {
    switch (alg) {
    case Algorithm::Zielonka: return s.recursive_calls;
    case Algorithm::PriorityPromotion: return s.promotions;
    case Algorithm::FixpointIteration: return s.fixpoint_iterations;
    case Algorithm::Apt: return s.fp_iterations;
    }
    return 0;
}

}  // namespace

std::string_view to_string(GameClass cls) noexcept {
    switch (cls) {
    case GameClass::LowDegree: return "low";
    case GameClass::Dense: return "dense";
    case GameClass::Pow2: return "2^P";
    case GameClass::PowE: return "e^P";
    case GameClass::Pow10: return "10^P";
    case GameClass::Pow13: return "13^P";
    }
    return "?";
}

std::optional<GameClass> parse_game_class(std::string_view name) noexcept {
    for (GameClass c : kAllGameClasses) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

GenSpec class_spec(GameClass cls, std::uint64_t n, std::uint64_t seed) {
    GenSpec spec;
    spec.vertices = n;
    spec.min_degree = 1;
    spec.self_loop_free = true;
    spec.seed = seed;
    switch (cls) {
    case GameClass::LowDegree:
        spec.priorities = static_cast<std::uint32_t>(n);
        spec.max_degree = 2;
        break;
    case GameClass::Dense:
        spec.priorities = static_cast<std::uint32_t>(n);
        spec.max_degree = n;
        break;
    default: {
        const double p = std::round(std::log(static_cast<double>(n)) / std::log(base_of(cls)));
        spec.priorities = static_cast<std::uint32_t>(std::max(1.0, p));
        spec.max_degree = n;
        break;
    }
    }
    return spec;
}

std::uint64_t solution_hash(std::span<const VertexId> won_even) {
    std::uint64_t h = 0;
    for (VertexId v : won_even) h += mix(v);
    return h;
}

std::string to_csv_row(const BenchRecord& r) {
    std::string row;
    row += r.game_id;
    row += ',';
    row += to_string(r.game_class);
    row += ',' + std::to_string(r.n) + ',' + std::to_string(r.p) + ',';
    row += to_string(r.algorithm);
    row += ',';
    row += to_string(r.outcome);
    row += ',' + fixed(r.time_ms, 3) + ',' + std::to_string(r.peak_nodes) + ',';
    if (r.hash) row += hex(*r.hash);
    return row;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) out << to_csv_row(r) << '\n';
}

std::string markdown_summary(std::span<const BenchRecord> records) {
    struct Cell {
        double seconds = 0;
        bool timeout = false;
        bool oom = false;
        std::uint64_t counter = 0;
        std::size_t solved = 0;
    };
    using Key = std::pair<GameClass, std::uint64_t>;
    std::vector<Key> columns;
    std::vector<Algorithm> rows;
    std::map<std::pair<Key, Algorithm>, Cell> cells;
    for (const auto& r : records) {
        const Key key{r.game_class, r.n};
        if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
        if (std::find(rows.begin(), rows.end(), r.algorithm) == rows.end()) rows.push_back(r.algorithm);
        Cell& c = cells[{key, r.algorithm}];
        c.seconds += r.time_ms / 1000.0;
        c.timeout |= r.outcome == Outcome::Timeout;
        c.oom |= r.outcome == Outcome::OutOfMemory;
        if (r.outcome == Outcome::Solved) {
            c.counter += main_counter(r.algorithm, r.stats);
            ++c.solved;
        }
    }
    std::ostringstream md;
    if (columns.empty()) {
        md << "No records.\n";
        return md.str();
    }
    auto header = [&](std::string_view title) {
        md << "| " << title << " |";
        for (const auto& [cls, n] : columns) md << ' ' << to_string(cls) << " N=" << n << " |";
        md << "\n|---|";
        for (std::size_t i = 0; i < columns.size(); ++i) md << "---:|";
        md << '\n';
    };

    md << "Cumulative solving time in seconds per cell (†T: timeout, †M: out of memory).\n\n";
    header("Solver");
    for (Algorithm alg : rows) {
        md << "| " << to_string(alg) << " |";
        for (const auto& key : columns) {
            auto it = cells.find({key, alg});
            if (it == cells.end()) {
                md << " |";
            } else if (it->second.oom) {
                md << " †M |";
            } else if (it->second.timeout) {
                md << " †T |";
            } else {
                md << ' ' << fixed(it->second.seconds, 3) << " |";
            }
        }
        md << '\n';
    }

    md << "\nMean iteration counter per solved game (Zielonka: recursive calls, PP: promotions,"
          " FI and APT: fixpoint iterations).\n\n";
    header("Solver");
    for (Algorithm alg : rows) {
        md << "| " << to_string(alg) << " |";
        for (const auto& key : columns) {
            auto it = cells.find({key, alg});
            if (it == cells.end() || it->second.solved == 0) {
                md << " - |";
            } else {
                md << ' ' << fixed(static_cast<double>(it->second.counter) / it->second.solved, 1) << " |";
            }
        }
        md << '\n';
    }
    return md.str();
}

std::vector<std::string_view> suite_names() { return {"smoke", "empty", "outcomes", "many-priorities", "few-priorities"}; }

std::optional<BenchSuite> suite_by_name(std::string_view name) {
    using std::chrono::milliseconds;
    BenchSuite suite;
    suite.name = std::string(name);
    auto cell = [](GameClass cls, std::uint64_t n, std::size_t games) {
        BenchCell c;
        c.game_class = cls;
        c.n = n;
        c.games = games;
        return c;
    };
    if (name == "smoke") {
        suite.cells = {cell(GameClass::Pow2, 16, 20), cell(GameClass::Pow2, 32, 20)};
    } else if (name == "empty") {
    } else if (name == "outcomes") {
        BenchCell slow = cell(GameClass::Pow2, 512, 1);
        slow.timeout = milliseconds(1);
        BenchCell tight = cell(GameClass::Pow2, 1024, 1);
        tight.node_budget = 1000;
        suite.cells = {slow, tight};
    } else if (name == "many-priorities") {
        for (std::uint64_t n : {32, 64, 128, 256}) suite.cells.push_back(cell(GameClass::LowDegree, n, 20));
        for (std::uint64_t n : {32, 64, 128}) suite.cells.push_back(cell(GameClass::Dense, n, 20));
        for (auto& c : suite.cells) c.timeout = milliseconds(60000);
    } else if (name == "few-priorities") {
        for (std::uint64_t n : {32, 64, 128, 256}) suite.cells.push_back(cell(GameClass::Pow2, n, 20));
        for (std::uint64_t n : {21, 55, 149}) suite.cells.push_back(cell(GameClass::PowE, n, 20));
        for (std::uint64_t n : {10, 100}) suite.cells.push_back(cell(GameClass::Pow10, n, 20));
        for (std::uint64_t n : {13, 169}) suite.cells.push_back(cell(GameClass::Pow13, n, 20));
        for (auto& c : suite.cells) c.timeout = milliseconds(60000);
    } else {
        return std::nullopt;
    }
    return suite;
}

std::vector<BenchRecord> run_suite(const BenchSuite& suite, const RecordSink& sink) {
    using std::chrono::duration;
    using std::chrono::microseconds;
    using std::chrono::milliseconds;
    std::vector<BenchRecord> records;
    for (const BenchCell& cell : suite.cells) {
        std::vector<std::optional<microseconds>> remaining;
        for (std::size_t a = 0; a < cell.algorithms.size(); ++a) {
            remaining.push_back(cell.timeout ? std::optional<microseconds>(*cell.timeout) : std::nullopt);
        }
        for (std::size_t g = 0; g < cell.games; ++g) {
            const GenSpec spec = class_spec(cell.game_class, cell.n, cell.first_seed + g);
            const ExplicitGame game = generate(spec);
            for (std::size_t a = 0; a < cell.algorithms.size(); ++a) {
                BenchRecord r;
                r.game_id = std::string(to_string(cell.game_class)) + "-N" + std::to_string(cell.n) + "-s" +
                            std::to_string(spec.seed);
                r.game_class = cell.game_class;
                r.n = cell.n;
                r.p = spec.priorities;
                r.algorithm = cell.algorithms[a];
                if (remaining[a] && remaining[a]->count() <= 0) {
                    r.outcome = Outcome::Timeout;
                } else {
                    const auto start = std::chrono::steady_clock::now();
                    try {
                        BddManager::Options mopts;
                        mopts.node_budget = cell.node_budget;
                        mopts.cache_slots = std::size_t{1} << 16;
                        const SymbolicGame sym = encode(game, mopts);
                        SolveOptions opts;
                        // Round the remaining budget up so a partly spent
                        // budget is never turned into an immediate timeout.
                        if (remaining[a]) {
                            opts.timeout = std::chrono::ceil<milliseconds>(*remaining[a]);
                        }
                        opts.node_budget = cell.node_budget;
                        const SolveResult res = solve(sym, r.algorithm, opts);
                        r.outcome = res.outcome;
                        r.stats = res.stats;
                        r.peak_nodes = res.stats.peak_live_nodes;
                        r.time_ms = duration<double, std::milli>(res.stats.wall_time).count();
                        if (res.solution) r.hash = solution_hash(decode_set(sym, res.solution->won_even));
                        if (remaining[a]) *remaining[a] -= res.stats.wall_time;
                    } catch (const BddOutOfMemory&) {
                        // Encoding alone exceeded the budget.
                        r.outcome = Outcome::OutOfMemory;
                        r.peak_nodes = cell.node_budget.value_or(0);
                        r.time_ms =
                            duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                    }
                }
                if (sink) sink(r);
                records.push_back(std::move(r));
            }
        }
    }
    return records;
}

void corrupt_solution(ExplicitSolution& s) {
    auto& from = (!s.won_even.empty() && (s.won_odd.empty() || s.won_even.front() < s.won_odd.front()))
                     ? s.won_even
                     : s.won_odd;
    auto& to = &from == &s.won_even ? s.won_odd : s.won_even;
    if (from.empty()) return;
    const VertexId v = from.front();
    from.erase(from.begin());
    to.insert(std::lower_bound(to.begin(), to.end(), v), v);
}

std::size_t VerifyReport::unconfirmed() const {
    return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(),
                                                  [](Outcome o) { return o != Outcome::Solved; }));
}

VerifyReport verify_game(const ExplicitGame& game, const VerifyOptions& options) {
    VerifyReport report;
    report.reference = solve_explicit_zielonka(game);
    report.hash = solution_hash(report.reference.won_even);
    auto fail = [&](std::string solver, std::optional<VertexId> v, std::string message) {
        if (!report.pass) return;
        report.pass = false;
        report.failed_solver = std::move(solver);
        report.first_difference = v;
        report.message = std::move(message);
    };
    for (Algorithm alg : kAllAlgorithms) {
        const SymbolicGame sym = encode(game);
        SolveOptions opts;
        opts.check_invariants = options.check_invariants;
        opts.timeout = options.solver_timeout;
        try {
            const SolveResult run = solve(sym, alg, opts);
            report.outcomes.push_back(run.outcome);
            report.stats.push_back(run.stats);
            if (run.outcome != Outcome::Solved) {
                report.hashes.emplace_back();
                continue;
            }
            ExplicitSolution got = decode(sym, *run.solution);
            if (options.tamper) options.tamper(alg, got);
            report.hashes.push_back(solution_hash(got.won_even));
            if (auto v = first_difference(game, report.reference, got)) {
                fail(std::string(to_string(alg)), v,
                     std::string(to_string(alg)) + " disagrees with the explicit oracle at vertex " +
                         std::to_string(*v));
            }
        } catch (const InvariantViolation& e) {
            report.outcomes.push_back(Outcome::Solved);
            report.stats.emplace_back();
            report.hashes.emplace_back();
            fail(std::string(to_string(alg)), std::nullopt,
                 std::string(to_string(alg)) + " invariant violation: " + e.what());
        }
    }
    if (game.size() <= options.bruteforce_limit) {
        report.bruteforce_checked = true;
        const ExplicitSolution brute = solve_bruteforce(game, options.bruteforce_limit);
        if (auto v = first_difference(game, report.reference, brute)) {
            fail("bruteforce", v, "brute force disagrees with the explicit oracle at vertex " + std::to_string(*v));
        }
    }
    return report;
}

FleetGame fleet_game(const FleetSpec& fleet, std::size_t index) {
    FleetGame fg;
    fg.game_class = kAllGameClasses[index % std::size(kAllGameClasses)];
    const std::uint64_t seed = fleet.first_seed + index;
    GameRng rng(mix(seed));
    const std::uint64_t n = rng.between(fleet.min_n, fleet.max_n);
    fg.spec = class_spec(fg.game_class, n, seed);
    fg.label = "fleet-" + std::to_string(index) + "-" + std::string(to_string(fg.game_class)) + "-N" +
               std::to_string(n) + "-s" + std::to_string(seed);
    return fg;
}

FleetReport verify_fleet(const FleetSpec& fleet, const VerifyOptions& options, const FleetProgress& progress) {
    FleetReport out;
    for (std::size_t i = 0; i < fleet.count; ++i) {
        const FleetGame fg = fleet_game(fleet, i);
        VerifyReport r = verify_game(generate(fg.spec), options);
        ++out.games;
        if (r.bruteforce_checked) ++out.bruteforce_checked;
        out.unconfirmed_runs += r.unconfirmed();
        if (!r.pass) {
            ++out.mismatches;
            out.failures.push_back(fg.label + ": " + r.message);
        }
        if (progress) progress(i, fg, r);
        out.reports.push_back(std::move(r));
    }
    return out;
}

}  // namespace pgsym
