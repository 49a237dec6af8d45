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

#include <doctest.h>

#include "pgsym/generator.hpp"
#include "pgsym/oracle.hpp"
#include "pgsym/set_ops.hpp"
#include "pgsym/solvers.hpp"
#include "support.hpp"

using namespace pgsym;
using Ids = std::vector<VertexId>;

namespace {

ExplicitSolution decoded(const SymbolicGame& g, const Solution& s) {
    return {decode_set(g, s.won_even), decode_set(g, s.won_odd)};
}

ExplicitSolution run(const ExplicitGame& eg, Algorithm alg, SolveOptions opts = {}) {
    const SymbolicGame g = encode(eg);
    const SolveResult r = solve(g, alg, opts);
    REQUIRE(r.outcome == Outcome::Solved);
    return decoded(g, *r.solution);
}

// Small games with few priorities, plus some with one priority per vertex.
GenSpec varied_spec(std::uint64_t seed) {
    GameRng rng(seed * 31 + 7);
    GenSpec s;
    s.vertices = rng.between(1, 24);
    s.priorities = static_cast<std::uint32_t>(rng.coin() ? rng.between(1, 6) : std::min<std::uint64_t>(s.vertices, 12));
    s.self_loop_free = s.vertices > 1 && rng.coin();
    s.min_degree = 1;
    s.max_degree = rng.between(1, 4);
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("every solver solves the example game") {
    const ExplicitGame fig = testing::example();
    for (Algorithm alg : kAllAlgorithms) {
        CAPTURE(to_string(alg));
        SolveOptions opts;
        opts.check_invariants = true;
        const ExplicitSolution s = run(fig, alg, opts);
        CHECK(s.won_even == testing::kExampleEven);
        CHECK(s.won_odd == testing::kExampleOdd);
    }
}

TEST_CASE("algorithm names") {
    for (Algorithm alg : kAllAlgorithms) CHECK(parse_algorithm(to_string(alg)) == alg);
    CHECK_FALSE(parse_algorithm("spm").has_value());
    CHECK(to_string(Outcome::OutOfMemory) == "OutOfMemory");
}

TEST_CASE("trivial games") {
    // A lone vertex with a self loop is won by the parity of its priority.
    for (Priority p : {0u, 1u, 6u, 7u}) {
        const ExplicitGame g = parse_pgsolver("3 " + std::to_string(p) + " 1 3;");
        for (Algorithm alg : kAllAlgorithms) {
            const ExplicitSolution s = run(g, alg);
            CHECK(s.won_even == (p % 2 == 0 ? Ids{3} : Ids{}));
        }
    }
    // Player 0 escapes the odd loop into the even one.
    const ExplicitGame g = parse_pgsolver("0 1 0 0,1; 1 2 1 1;");
    for (Algorithm alg : kAllAlgorithms) CHECK(run(g, alg).won_even == Ids{0, 1});
}

TEST_CASE("solvers accept the empty subgame") {
    const SymbolicGame g = encode(testing::example());
    const SymbolicGame none = subgame(g, g.manager->bdd_false());
    for (Algorithm alg : kAllAlgorithms) {
        const SolveResult r = solve(none, alg);
        REQUIRE(r.outcome == Outcome::Solved);
        CHECK(r.solution->won_even.is_false());
        CHECK(r.solution->won_odd.is_false());
    }
}

TEST_CASE("solvers agree with the explicit oracle on random games") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const ExplicitGame eg = generate(varied_spec(seed));
        const ExplicitSolution expected = solve_explicit_zielonka(eg);
        const SymbolicGame g = encode(eg);
        CAPTURE(seed);
        for (Algorithm alg : kAllAlgorithms) {
            CAPTURE(to_string(alg));
            SolveOptions opts;
            opts.check_invariants = true;
            const SolveResult r = solve(g, alg, opts);
            REQUIRE(r.outcome == Outcome::Solved);
            CHECK(decoded(g, *r.solution) == expected);
        }
    }
}

TEST_CASE("sparse ids and priorities") {
    const ExplicitGame eg = parse_pgsolver(
        "100 1000001 0 7,300; 7 4 1 100,9; 300 1000000 1 9; 9 3 0 7,300; 55 8 1 55,9;");
    const ExplicitSolution expected = solve_explicit_zielonka(eg);
    CHECK(expected == solve_bruteforce(eg));
    for (Algorithm alg : kAllAlgorithms) CHECK(run(eg, alg) == expected);
}

TEST_CASE("every PP dominion is closed for the opponent") {
    std::size_t dominions = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const SymbolicGame g = encode(generate(varied_spec(seed)));
        SolverStats stats;
        RunContext ctx;
        ctx.stats = &stats;
        detail::priority_promotion(g, ctx, [&](const SymbolicGame& remaining, Player winner, const Bdd& D) {
            ++dominions;
            CHECK_FALSE(D.is_false());
            CHECK(escape(remaining, opponent(winner), D).is_false());
        });
        CHECK(stats.dominions > 0);
    }
    CHECK(dominions > 100);
}

TEST_CASE("FI reset optimization does not change the result") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const SymbolicGame g = encode(generate(varied_spec(seed)));
        SolveOptions plain;
        plain.fi_reset_optimization = false;
        const SolverRun a = solve_fi(g, plain);
        const SolverRun b = solve_fi(g);
        CAPTURE(seed);
        CHECK(a.solution.won_even == b.solution.won_even);
        CHECK(a.solution.won_odd == b.solution.won_odd);
        CHECK(b.stats.fixpoint_iterations <= a.stats.fixpoint_iterations);
    }
}

TEST_CASE("compression does not change the result") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        GenSpec spec = varied_spec(seed);
        spec.priorities = 40;  // sparse priorities
        const SymbolicGame g = encode(generate(spec));
        const SymbolicGame c = compress_priorities(g);
        for (Algorithm alg : kAllAlgorithms) {
            const SolveResult a = solve(g, alg);
            const SolveResult b = solve(c, alg);
            CHECK(a.solution->won_even == b.solution->won_even);
        }
    }
}

TEST_CASE("runs are deterministic") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const ExplicitGame eg = generate(varied_spec(seed));
        for (Algorithm alg : kAllAlgorithms) {
            const SymbolicGame g1 = encode(eg);
            const SymbolicGame g2 = encode(eg);
            const SolveResult a = solve(g1, alg);
            const SolveResult b = solve(g2, alg);
            CHECK(a.stats == b.stats);
            CHECK(decoded(g1, *a.solution) == decoded(g2, *b.solution));
        }
    }
}

TEST_CASE("counters reflect the algorithm that ran") {
    const SymbolicGame g = encode(testing::example());
    CHECK(solve_zielonka(g).stats.recursive_calls > 0);
    const SolverRun pp = solve_pp(g);
    CHECK(pp.stats.dominions > 0);
    CHECK(pp.stats.searcher_iterations >= pp.stats.dominions);
    CHECK(solve_fi(g).stats.fixpoint_iterations > 0);
    const SolverRun apt = solve_apt(g);
    CHECK(apt.stats.win_calls > 0);
    CHECK(apt.stats.fp_iterations > 0);
    CHECK(apt.stats.recursive_calls == 0);
}

TEST_CASE("timeouts and node budgets become outcomes") {
    const SymbolicGame g = encode(testing::example());
    SolveOptions zero;
    zero.timeout = std::chrono::milliseconds(0);
    for (Algorithm alg : kAllAlgorithms) {
        const SolveResult r = solve(g, alg, zero);
        CHECK(r.outcome == Outcome::Timeout);
        CHECK_FALSE(r.solution.has_value());
    }

    GenSpec spec;
    spec.vertices = 200;
    spec.priorities = 8;
    spec.min_degree = 1;
    spec.max_degree = 200;
    spec.self_loop_free = true;
    spec.seed = 3;
    const SymbolicGame big = encode(generate(spec));
    const std::size_t live = big.manager->live_nodes();
    SolveOptions tight;
    tight.node_budget = live + 10;
    for (Algorithm alg : kAllAlgorithms) {
        const SolveResult r = solve(big, alg, tight);
        CHECK(r.outcome == Outcome::OutOfMemory);
        CHECK_FALSE(r.solution.has_value());
        CHECK(r.stats.peak_live_nodes > 0);
    }
    // The budget only applies for the duration of the run.
    CHECK_FALSE(big.manager->node_budget().has_value());
    CHECK(solve(big, Algorithm::Zielonka).outcome == Outcome::Solved);
}

TEST_CASE("partition check") {
    const SymbolicGame g = encode(testing::example());
    Solution s = solve_zielonka(g).solution;
    CHECK_NOTHROW(check_partition(g, s));
    Solution overlap{s.won_even | g.set_of({3}), s.won_odd};
    CHECK_THROWS_AS(check_partition(g, overlap), InvariantViolation);
    Solution gap{s.won_even - g.set_of({0}), s.won_odd};
    CHECK_THROWS_AS(check_partition(g, gap), InvariantViolation);
}

TEST_CASE("invariant checks catch an invalid input game") {
    SymbolicGame g = encode(testing::example());
    g.edges = g.edges - g.set_of({0});  // u1 becomes a dead end
    SolveOptions opts;
    opts.check_invariants = true;
    CHECK_THROWS_AS(solve(g, Algorithm::Zielonka, opts), InvariantViolation);
}
