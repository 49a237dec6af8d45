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

#include "pgsym/set_ops.hpp"

#include <set>

namespace pgsym {

Bdd pre(const SymbolicGame& game, Player alpha, const Bdd& U) {
    BddManager& m = *game.manager;
    // (Vα ∧ ∃x'. E ∧ U') ∨ (V¬α ∧ ¬∃x'. E ∧ (V \ U)')
    const Bdd some_in = m.and_exists(game.edges, game.prime(U), game.x_primed);
    const Bdd some_out = m.and_exists(game.edges, game.prime(game.vertices - U), game.x_primed);
    const Bdd forced = (game.owned_by(alpha) & some_in) | (game.owned_by(opponent(alpha)) - some_out);
    return forced & game.vertices;
}

Bdd post(const SymbolicGame& game, const Bdd& U) {
    return game.unprime(game.manager->and_exists(game.edges, U, game.x));
}

Bdd attractor(const SymbolicGame& game, Player alpha, const Bdd& U, const Deadline& deadline) {
    Bdd A = U;
    for (;;) {
        deadline.check();
        Bdd next = U | pre(game, alpha, A);
        if (next == A) return A;
        A = std::move(next);
    }
}

Bdd confined_attractor(const SymbolicGame& game, Player alpha, const Bdd& T, const Bdd& U,
                       const Deadline& deadline) {
    const SymbolicGame inside = subgame(game, T);
    return attractor(inside, alpha, U & T, deadline);
}

Bdd escape(const SymbolicGame& game, Player alpha, const Bdd& U) {
    return pre(game, alpha, game.vertices - U) & U;
}

Priority best_escape_priority(const SymbolicGame& game, Player alpha, const PriorityMap& promoted,
                              const Bdd& A) {
    const Bdd exits = (post(game, A & game.owned_by(alpha)) - A) & game.vertices;
    for (const auto& e : promoted.entries()) {
        if (!(e.block & exits).is_false()) return e.priority;
    }
    throw NoEscape();
}

PriorityMap promote_assign(const PriorityMap& promoted, const Bdd& A, Priority m) {
    PriorityMap out(promoted.manager());
    for (const auto& e : promoted.entries()) out.assign(e.priority, e.block - A);
    out.assign(m, out.block(m) | A);
    return out;
}

PriorityMap promote_reset(const PriorityMap& original, const PriorityMap& promoted, const Bdd& A, Priority m) {
    const Bdd above = promoted.union_at_least(m);
    std::set<Priority> domain{m};
    for (const auto& e : original.entries()) domain.insert(e.priority);
    for (const auto& e : promoted.entries()) domain.insert(e.priority);

    PriorityMap out(promoted.manager());
    for (Priority i : domain) {
        const Bdd kept = (original.block(i) - above) | (promoted.block(i) & above);
        out.assign(i, i == m ? (A | kept) : (kept - A));
    }
    return out;
}

Bdd diamond_box(const SymbolicGame& game, const std::vector<Bdd>& blocks, const std::vector<Bdd>& approximations) {
    if (blocks.size() != approximations.size()) {
        throw std::invalid_argument("diamond_box: one approximation per priority block required");
    }
    BddManager& m = *game.manager;
    // ⋁_i ∃x'. E ∧ P'_i ∧ X'_i equals ∃x'. E ∧ (⋁_i P_i ∧ X_i)', likewise for ¬X_i.
    Bdd good = m.bdd_false();
    Bdd bad = m.bdd_false();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        good |= blocks[i] & approximations[i];
        bad |= blocks[i] - approximations[i];
    }
    const Bdd may = m.and_exists(game.edges, game.prime(good), game.x_primed);
    const Bdd must_fail = m.and_exists(game.edges, game.prime(bad), game.x_primed);
    return ((game.even & may) | (game.odd - must_fail)) & game.vertices;
}

}  // namespace pgsym
