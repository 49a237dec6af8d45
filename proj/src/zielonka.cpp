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

// One activation of the recursive algorithm. The recursion is unrolled onto
// an explicit stack; `stage` records which recursive call returned last.
struct Frame {
    explicit Frame(SymbolicGame g) : game(std::move(g)) {}

    SymbolicGame game;
    enum Stage { Enter, AfterFirst, AfterSecond } stage = Enter;
    Player alpha = Player::Even;
    Bdd A;
    Bdd B;
};

Solution make_solution(Player alpha, Bdd won_alpha, Bdd won_other) {
    return alpha == Player::Even ? Solution{std::move(won_alpha), std::move(won_other)}
                                 : Solution{std::move(won_other), std::move(won_alpha)};
}

}  // namespace

Solution zielonka(const SymbolicGame& root, const RunContext& ctx) {
    BddManager& m = *root.manager;
    std::vector<Frame> stack;
    stack.emplace_back(root);
    Solution ret{m.bdd_false(), m.bdd_false()};

    while (!stack.empty()) {
        ctx.deadline.check();
        Frame& f = stack.back();
        switch (f.stage) {
        case Frame::Enter: {
            ++ctx.stats->recursive_calls;
            if (ctx.check_invariants) {
                const ValidationReport report = validate(f.game);
                if (!report.ok()) throw InvariantViolation("Zielonka subgame invalid: " + report.message);
            }
            if (f.game.empty()) {
                ret = Solution{m.bdd_false(), m.bdd_false()};
                stack.pop_back();
                break;
            }
            const Priority top = f.game.priorities.max_priority();
            f.alpha = parity_player(top);
            f.A = attractor(f.game, f.alpha, f.game.priorities.block(top), ctx.deadline);
            f.stage = Frame::AfterFirst;
            SymbolicGame rest = subgame(f.game, f.game.vertices - f.A);
            stack.emplace_back(std::move(rest));
            break;
        }
        case Frame::AfterFirst: {
            const Player beta = opponent(f.alpha);
            const Bdd won_beta = ret.won_by(beta);
            f.B = attractor(f.game, beta, won_beta, ctx.deadline);
            if (f.B == won_beta) {
                ret = make_solution(f.alpha, f.A | ret.won_by(f.alpha), f.B);
                stack.pop_back();
            } else {
                f.stage = Frame::AfterSecond;
                SymbolicGame rest = subgame(f.game, f.game.vertices - f.B);
                stack.emplace_back(std::move(rest));
            }
            break;
        }
        case Frame::AfterSecond: {
            const Player beta = opponent(f.alpha);
            ret = make_solution(f.alpha, ret.won_by(f.alpha), ret.won_by(beta) | f.B);
            stack.pop_back();
            break;
        }
        }
    }
    return ret;
}

}  // namespace pgsym::detail
