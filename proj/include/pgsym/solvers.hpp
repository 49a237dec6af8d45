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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgsym/set_ops.hpp"
#include "pgsym/symbolic_game.hpp"

namespace pgsym {

enum class Algorithm { Zielonka, PriorityPromotion, FixpointIteration, Apt };

std::string_view to_string(Algorithm alg) noexcept;
/// Accepts "zielonka", "pp", "fi" and "apt".
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::Zielonka, Algorithm::PriorityPromotion,
                                               Algorithm::FixpointIteration, Algorithm::Apt};

/// Pair of disjoint winning regions covering the vertex set.
struct Solution {
    Bdd won_even;  ///< W0
    Bdd won_odd;   ///< W1

    const Bdd& won_by(Player p) const { return p == Player::Even ? won_even : won_odd; }
};

/// Per-run counters. Only the counters of the algorithm that ran are used.
struct SolverStats {
    std::uint64_t recursive_calls = 0;      // Zielonka
    std::uint64_t promotions = 0;           // PP
    std::uint64_t searcher_iterations = 0;  // PP
    std::uint64_t dominions = 0;            // PP
    std::uint64_t fixpoint_iterations = 0;  // FI
    std::uint64_t resets = 0;               // FI
    std::uint64_t win_calls = 0;            // APT
    std::uint64_t fp_iterations = 0;        // APT
    std::size_t peak_live_nodes = 0;
    std::chrono::microseconds wall_time{0};

    friend bool operator==(const SolverStats& a, const SolverStats& b) {
        return a.recursive_calls == b.recursive_calls && a.promotions == b.promotions &&
               a.searcher_iterations == b.searcher_iterations && a.dominions == b.dominions &&
               a.fixpoint_iterations == b.fixpoint_iterations && a.resets == b.resets &&
               a.win_calls == b.win_calls && a.fp_iterations == b.fp_iterations;
    }
};

/// Raised when an invariant check requested through SolveOptions fails.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SolveOptions {
    std::optional<std::chrono::milliseconds> timeout;
    /// Applied to the game's manager for the duration of the run.
    std::optional<std::size_t> node_budget;
    /// Validate every Zielonka subgame, check every PP dominion for
    /// closedness and check the partition of every result.
    bool check_invariants = false;
    /// FI: after climbing to the first unstable X_i, reset only X_{i-1},
    /// X_{i-3}, ... instead of every X_j with j < i.
    bool fi_reset_optimization = true;
};

struct SolverRun {
    Solution solution;
    SolverStats stats;
};

/// Internal context threaded through one run.
struct RunContext {
    Deadline deadline;
    bool check_invariants = false;
    bool fi_reset_optimization = true;
    SolverStats* stats = nullptr;
};

SolverRun solve_zielonka(const SymbolicGame& game, const SolveOptions& options = {});
SolverRun solve_pp(const SymbolicGame& game, const SolveOptions& options = {});
SolverRun solve_fi(const SymbolicGame& game, const SolveOptions& options = {});
SolverRun solve_apt(const SymbolicGame& game, const SolveOptions& options = {});

enum class Outcome { Solved, Timeout, OutOfMemory };
std::string_view to_string(Outcome outcome) noexcept;

struct SolveResult {
    Outcome outcome = Outcome::Solved;
    std::optional<Solution> solution;
    SolverStats stats;
};

/// Dispatches to one solver and maps SolveTimeout / BddOutOfMemory to
/// outcomes. A timeout of zero yields Timeout without solving.
SolveResult solve(const SymbolicGame& game, Algorithm algorithm, const SolveOptions& options = {});

/// Throws InvariantViolation unless W0 ∩ W1 = ∅ and W0 ∪ W1 = V.
void check_partition(const SymbolicGame& game, const Solution& solution);

namespace detail {
Solution zielonka(const SymbolicGame& game, const RunContext& ctx);
Solution priority_promotion(const SymbolicGame& game, const RunContext& ctx);
Solution fixpoint_iteration(const SymbolicGame& game, const RunContext& ctx);
Solution apt(const SymbolicGame& game, const RunContext& ctx);
/// Observer for every dominion the PP searcher returns: (remaining game, player, dominion).
using DominionObserver = std::function<void(const SymbolicGame&, Player, const Bdd&)>;
Solution priority_promotion(const SymbolicGame& game, const RunContext& ctx, const DominionObserver& observer);
}  // namespace detail

}  // namespace pgsym
