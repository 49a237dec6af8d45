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

// Win(α, i, visiting, avoiding) is the region of α in the game where α wins
// as soon as the play enters `visiting`, loses as soon as it enters
// `avoiding`, and otherwise the parity condition over priorities ≤ i
// applies. Both sets hold exactly the vertices of priority > i.
//
// FP(α, i, ...) is called with the sets of the opponent's perspective and
// computes α's region (α has the parity of i) as a greatest fixpoint over
// the priority-i block F: vertices of F in the current approximation X
// become visiting for α, the others avoiding. The first round is taken
// with every vertex of F visiting, which is F \ X for X = ∅.
class Apt {
public:
    Apt(const SymbolicGame& game, const RunContext& ctx)
        : game_(game), ctx_(ctx), min_priority_(static_cast<long>(game.priorities.min_priority())) {}

    Bdd win(Player alpha, long i, const Bdd& visiting, const Bdd& avoiding) {
        ++ctx_.stats->win_calls;
        if (i >= min_priority_) return game_.vertices - fp(opponent(alpha), i, visiting, avoiding);
        return pre(game_, alpha, visiting);
    }

    Bdd fp(Player alpha, long i, const Bdd& visiting, const Bdd& avoiding) {
        ctx_.deadline.check();
        const Bdd F = game_.priorities.block(static_cast<Priority>(i));
        Bdd X = game_.manager->bdd_false();
        Bdd Y = win(alpha, i - 1, avoiding | (F - X), visiting | (F & X));
        while (!(Y == X)) {
            ctx_.deadline.check();
            ++ctx_.stats->fp_iterations;
            X = Y;
            Y = win(alpha, i - 1, avoiding | (F & X), visiting | (F - X));
        }
        return X;
    }

private:
    const SymbolicGame& game_;
    const RunContext& ctx_;
    long min_priority_;
};

}  // namespace

Solution apt(const SymbolicGame& input, const RunContext& ctx) {
    BddManager& m = *input.manager;
    if (input.empty()) return Solution{m.bdd_false(), m.bdd_false()};
    const SymbolicGame game = compress_priorities(input);
    const long d = static_cast<long>(game.priorities.max_priority());
    const Player alpha = (d + 1) % 2 == 0 ? Player::Even : Player::Odd;
    Apt solver(game, ctx);
    const Bdd X = solver.win(alpha, d, m.bdd_false(), m.bdd_false());
    if (alpha == Player::Even) return Solution{X, game.vertices - X};
    return Solution{game.vertices - X, X};
}

}  // namespace pgsym::detail
