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

#include "pgsym/solvers.hpp"

namespace pgsym {

std::string_view to_string(Algorithm alg) noexcept {
    switch (alg) {
    case Algorithm::Zielonka: return "zielonka";
    case Algorithm::PriorityPromotion: return "pp";
    case Algorithm::FixpointIteration: return "fi";
    case Algorithm::Apt: return "apt";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    for (Algorithm a : kAllAlgorithms) {
        if (to_string(a) == name) return a;
    }
    return std::nullopt;
}

std::string_view to_string(Outcome outcome) noexcept {
    switch (outcome) {
    case Outcome::Solved: return "Solved";
    case Outcome::Timeout: return "Timeout";
    case Outcome::OutOfMemory: return "OutOfMemory";
    }
    return "?";
}

void check_partition(const SymbolicGame& game, const Solution& solution) {
    if (!(solution.won_even & solution.won_odd).is_false()) {
        throw InvariantViolation("winning regions intersect");
    }
    if (!((solution.won_even | solution.won_odd) == game.vertices)) {
        throw InvariantViolation("winning regions do not cover the vertex set");
    }
}

namespace {

// Restores the manager's budget on scope exit.
class BudgetScope {
public:
    BudgetScope(BddManager& manager, std::optional<std::size_t> budget)
        : manager_(manager), saved_(manager.node_budget()) {
        if (budget) manager_.set_node_budget(budget);
    }
    ~BudgetScope() { manager_.set_node_budget(saved_); }
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;

private:
    BddManager& manager_;
    std::optional<std::size_t> saved_;
};

void run_solver(const SymbolicGame& game, Algorithm algorithm, const SolveOptions& options, SolverRun& out) {
    RunContext ctx;
    ctx.deadline = options.timeout ? Deadline::after(*options.timeout) : Deadline{};
    ctx.check_invariants = options.check_invariants;
    ctx.fi_reset_optimization = options.fi_reset_optimization;
    ctx.stats = &out.stats;

    BudgetScope budget(*game.manager, options.node_budget);
    game.manager->reset_peak();
    const auto start = std::chrono::steady_clock::now();
    auto finish = [&] {
        out.stats.wall_time = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start);
        out.stats.peak_live_nodes = game.manager->peak_live_nodes();
    };
    try {
        ctx.deadline.check();
        switch (algorithm) {
        case Algorithm::Zielonka: out.solution = detail::zielonka(game, ctx); break;
        case Algorithm::PriorityPromotion: out.solution = detail::priority_promotion(game, ctx); break;
        case Algorithm::FixpointIteration: out.solution = detail::fixpoint_iteration(game, ctx); break;
        case Algorithm::Apt: out.solution = detail::apt(game, ctx); break;
        }
    } catch (...) {
        finish();
        throw;
    }
    finish();
    if (options.check_invariants) check_partition(game, out.solution);
}

SolverRun run_solver(const SymbolicGame& game, Algorithm algorithm, const SolveOptions& options) {
    SolverRun out;
    run_solver(game, algorithm, options, out);
    return out;
}

}  // namespace

SolverRun solve_zielonka(const SymbolicGame& game, const SolveOptions& options) {
    return run_solver(game, Algorithm::Zielonka, options);
}

SolverRun solve_pp(const SymbolicGame& game, const SolveOptions& options) {
    return run_solver(game, Algorithm::PriorityPromotion, options);
}

SolverRun solve_fi(const SymbolicGame& game, const SolveOptions& options) {
    return run_solver(game, Algorithm::FixpointIteration, options);
}

SolverRun solve_apt(const SymbolicGame& game, const SolveOptions& options) {
    return run_solver(game, Algorithm::Apt, options);
}

SolveResult solve(const SymbolicGame& game, Algorithm algorithm, const SolveOptions& options) {
    SolveResult result;
    SolverRun run;
    try {
        run_solver(game, algorithm, options, run);
        result.solution = std::move(run.solution);
    } catch (const SolveTimeout&) {
        result.outcome = Outcome::Timeout;
    } catch (const BddOutOfMemory&) {
        result.outcome = Outcome::OutOfMemory;
    }
    result.stats = run.stats;
    return result;
}

}  // namespace pgsym
