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

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgsym/explicit_game.hpp"
#include "pgsym/generator.hpp"
#include "pgsym/solvers.hpp"

namespace pgsym {

// ---- game classes ----------------------------------------------------------

/// low: `N N 1 2 x`, dense: `N N 1 N x`, powC: `N P 1 N x` with N ≈ C^P.
enum class GameClass { LowDegree, Dense, Pow2, PowE, Pow10, Pow13 };

inline constexpr GameClass kAllGameClasses[] = {GameClass::LowDegree, GameClass::Dense, GameClass::Pow2,
                                                GameClass::PowE,      GameClass::Pow10, GameClass::Pow13};

/// "low", "dense", "2^P", "e^P", "10^P", "13^P".
std::string_view to_string(GameClass cls) noexcept;
std::optional<GameClass> parse_game_class(std::string_view name) noexcept;

/// Generator parameters for one game of the class. For the powC classes
/// P = max(1, round(log_C N)).
GenSpec class_spec(GameClass cls, std::uint64_t n, std::uint64_t seed);

// ---- results ---------------------------------------------------------------

/// Sum over W0 of a 64-bit mix of each id (mod 2^64); independent of order.
std::uint64_t solution_hash(std::span<const VertexId> won_even);

struct BenchRecord {
    std::string game_id;
    GameClass game_class = GameClass::LowDegree;
    std::uint64_t n = 0;
    std::uint32_t p = 0;
    Algorithm algorithm = Algorithm::Zielonka;
    Outcome outcome = Outcome::Solved;
    double time_ms = 0;
    std::size_t peak_nodes = 0;
    std::optional<std::uint64_t> hash;  ///< present iff Solved
    SolverStats stats;                  ///< not part of the CSV
};

inline constexpr std::string_view kCsvHeader =
    "game_id,class,N,P,algorithm,outcome,time_ms,peak_nodes,solution_hash";

std::string to_csv_row(const BenchRecord& record);
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Per-cell cumulative seconds per algorithm. A cell with any Timeout
/// prints †T, any OutOfMemory †M. Followed by mean iteration counters.
std::string markdown_summary(std::span<const BenchRecord> records);

// ---- suites ----------------------------------------------------------------

struct BenchCell {
    GameClass game_class = GameClass::Pow2;
    std::uint64_t n = 16;
    std::size_t games = 20;
    std::uint64_t first_seed = 1;
    std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
    /// Cumulative per (cell, algorithm): once spent, the rest of the games
    /// of that algorithm are recorded as Timeout.
    std::optional<std::chrono::milliseconds> timeout;
    /// Applies to encoding and solving of every game in the cell.
    std::optional<std::size_t> node_budget;
};

struct BenchSuite {
    std::string name;
    std::vector<BenchCell> cells;
};

/// Known suites: "smoke", "empty", "outcomes", "many-priorities", "few-priorities".
std::optional<BenchSuite> suite_by_name(std::string_view name);
std::vector<std::string_view> suite_names();

using RecordSink = std::function<void(const BenchRecord&)>;

/// Runs every cell; solver failures become outcomes, never exceptions.
std::vector<BenchRecord> run_suite(const BenchSuite& suite, const RecordSink& sink = {});

// ---- verification ----------------------------------------------------------

struct VerifyOptions {
    bool check_invariants = true;
    std::size_t bruteforce_limit = 10;
    /// Per symbolic solver run; a run that exceeds it is not compared.
    std::optional<std::chrono::milliseconds> solver_timeout;
    /// Test hook applied to each decoded symbolic result before comparison.
    std::function<void(Algorithm, ExplicitSolution&)> tamper;
};

struct VerifyReport {
    bool pass = true;
    /// Label of the first disagreeing solver, e.g. "pp" or "bruteforce".
    std::string failed_solver;
    std::optional<VertexId> first_difference;
    std::string message;
    ExplicitSolution reference;
    // Per algorithm, in kAllAlgorithms order.
    std::vector<Outcome> outcomes;
    std::vector<SolverStats> stats;
    std::vector<std::optional<std::uint64_t>> hashes;  ///< of each solver's W0, if solved
    std::uint64_t hash = 0;                            ///< of the reference W0
    bool bruteforce_checked = false;

    /// Number of symbolic runs that did not finish.
    std::size_t unconfirmed() const;
};

/// Runs the four symbolic solvers, explicit Zielonka and, up to
/// `bruteforce_limit` vertices, the brute-force oracle; passes iff all
/// partitions agree and no invariant check failed.
VerifyReport verify_game(const ExplicitGame& game, const VerifyOptions& options = {});

/// Moves the smallest vertex of the solution to the other region.
void corrupt_solution(ExplicitSolution& solution);

struct FleetSpec {
    std::size_t count = 200;
    std::uint64_t min_n = 8;
    std::uint64_t max_n = 64;
    std::uint64_t first_seed = 1;
};

/// Game `index` of the fleet: classes round-robin, N uniform in the range
/// (drawn from the game's seed), seed = first_seed + index.
struct FleetGame {
    std::string label;
    GameClass game_class;
    GenSpec spec;
};
FleetGame fleet_game(const FleetSpec& fleet, std::size_t index);

struct FleetReport {
    std::size_t games = 0;
    std::size_t mismatches = 0;
    std::size_t unconfirmed_runs = 0;
    std::size_t bruteforce_checked = 0;
    std::vector<std::string> failures;  ///< one line per failing game
    std::vector<VerifyReport> reports;  ///< per game, in order
};

using FleetProgress = std::function<void(std::size_t index, const FleetGame&, const VerifyReport&)>;
FleetReport verify_fleet(const FleetSpec& fleet, const VerifyOptions& options = {},
                         const FleetProgress& progress = {});

}  // namespace pgsym
