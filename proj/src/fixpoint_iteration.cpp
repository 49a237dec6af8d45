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

// Nested fixpoint σX_{d-1} … μX_1 νX_0 over the compressed game, where X_i is
// a greatest fixpoint for even i and a least one for odd i. A game whose
// least priority is 1 gets an empty block 0; νX_0 then evaluates the body
// once and the nesting is that of the least-priority-1 formula.
Solution fixpoint_iteration(const SymbolicGame& input, const RunContext& ctx) {
    BddManager& m = *input.manager;
    if (input.empty()) return Solution{m.bdd_false(), m.bdd_false()};
    const SymbolicGame game = compress_priorities(input);
    const Bdd& V = game.vertices;
    const std::size_t d = game.priorities.max_priority() + 1;

    std::vector<Bdd> blocks(d, m.bdd_false());
    for (const auto& e : game.priorities.entries()) blocks[e.priority] = e.block;
    auto initial = [&](std::size_t i) { return i % 2 == 0 ? V : m.bdd_false(); };

    std::vector<Bdd> X(d), previous(d);
    for (std::size_t i = d; i-- > 0;) X[i] = initial(i);

    std::size_t i = 0;
    do {
        ctx.deadline.check();
        ++ctx.stats->fixpoint_iterations;
        previous[0] = X[0];
        X[0] = diamond_box(game, blocks, X);
        i = 0;
        while (X[i] == previous[i] && i < d - 1) {
            ++i;
            previous[i] = X[i];
            X[i] = X[i - 1];
            if (!ctx.fi_reset_optimization) {
                X[i - 1] = initial(i - 1);
                ++ctx.stats->resets;
            }
        }
        if (ctx.fi_reset_optimization) {
            // Same-parity inner variables stay valid by monotonicity.
            for (std::size_t j = i; j-- > 0;) {
                if ((i - j) % 2 == 1) {
                    X[j] = initial(j);
                    ++ctx.stats->resets;
                }
            }
        }
    } while (!(i == d - 1 && X[d - 1] == previous[d - 1]));

    return Solution{X[d - 1], V - X[d - 1]};
}

}  // namespace pgsym::detail
