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

namespace pgsym::detail {

namespace {

struct SearchResult {
    Player winner;
    Bdd dominion;
};

// Dominion searcher. The state (V_g, p_g, m_g) is advanced in a loop; each
// pass either returns a closed region attracted in the whole game, or
// promotes the current region.
SearchResult search_dominion(const SymbolicGame& game, const RunContext& ctx) {
    const PriorityMap& original = game.priorities;
    Bdd region_vertices = game.vertices;
    PriorityMap promoted = original;
    Priority measure = original.max_priority();

    for (;;) {
        ctx.deadline.check();
        ++ctx.stats->searcher_iterations;
        const Player alpha = parity_player(measure);
        const Player beta = opponent(alpha);
        const Bdd top = promoted.block(measure) & region_vertices;
        const Bdd A = confined_attractor(game, alpha, region_vertices, top, ctx.deadline);

        if (escape(game, beta, A).is_false()) {
            return SearchResult{alpha, attractor(game, alpha, A, ctx.deadline)};
        }

        const SymbolicGame state = subgame(game, region_vertices);
        if (!escape(state, beta, A).is_false()) {
            // Open in the current state: fix A at the measure and descend.
            promoted = promote_assign(promoted, A, measure);
            const Bdd rest = region_vertices - A;
            const std::optional<Priority> next = promoted.restrict_to(rest).max_below(measure);
            if (!next) throw std::logic_error("priority promotion: open region without lower priorities");
            measure = *next;
            region_vertices = rest;
        } else {
            // Closed in the current state: promote to the best escape priority.
            const Priority target = best_escape_priority(game, beta, promoted, A);
            if (target <= measure) {
                throw std::logic_error("priority promotion: best escape priority does not exceed the measure");
            }
            ++ctx.stats->promotions;
            promoted = promote_reset(original, promoted, A, target);
            measure = target;
            region_vertices = promoted.union_at_most(target);
        }
    }
}

}  // namespace

Solution priority_promotion(const SymbolicGame& game, const RunContext& ctx, const DominionObserver& observer) {
    BddManager& m = *game.manager;
    Solution won{m.bdd_false(), m.bdd_false()};
    Bdd undecided = game.vertices;
    while (!undecided.is_false()) {
        ctx.deadline.check();
        const SymbolicGame remaining = subgame(game, undecided);
        SearchResult found = search_dominion(remaining, ctx);
        ++ctx.stats->dominions;
        if (ctx.check_invariants && !escape(remaining, opponent(found.winner), found.dominion).is_false()) {
            throw InvariantViolation("priority promotion returned a dominion its opponent can escape");
        }
        if (observer) observer(remaining, found.winner, found.dominion);
        if (found.winner == Player::Even) {
            won.won_even |= found.dominion;
        } else {
            won.won_odd |= found.dominion;
        }
        undecided -= found.dominion;
    }
    return won;
}

Solution priority_promotion(const SymbolicGame& game, const RunContext& ctx) {
    return priority_promotion(game, ctx, DominionObserver{});
}

}  // namespace pgsym::detail
