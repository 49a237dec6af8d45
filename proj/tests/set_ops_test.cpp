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

#include <algorithm>
#include <limits>

#include "pgsym/bench.hpp"
#include "pgsym/generator.hpp"
#include "pgsym/oracle.hpp"
#include "pgsym/set_ops.hpp"
#include "support.hpp"

using namespace pgsym;
using Ids = std::vector<VertexId>;

namespace {

// Explicit reimplementations over games with ids 0..N-1.
using Mask = std::vector<char>;

Mask mask_of(std::size_t n, const Ids& ids) {
    Mask m(n, 0);
    for (VertexId v : ids) m[v] = 1;
    return m;
}

Ids ids_of(const Mask& m) {
    Ids out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v]) out.push_back(v);
    }
    return out;
}

Mask explicit_pre(const DenseGame& g, Player alpha, const Mask& U) {
    Mask r(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& s = g.successors[v];
        if (g.owner[v] == alpha) {
            r[v] = std::any_of(s.begin(), s.end(), [&](std::uint32_t w) { return U[w] != 0; });
        } else {
            r[v] = std::all_of(s.begin(), s.end(), [&](std::uint32_t w) { return U[w] != 0; });
        }
    }
    return r;
}

Mask explicit_post(const DenseGame& g, const Mask& U) {
    Mask r(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (U[v]) {
            for (std::uint32_t w : g.successors[v]) r[w] = 1;
        }
    }
    return r;
}

// Chaotic iteration of pre evaluated in G ∩ T; a ¬α-vertex without
// successors in T is attracted vacuously.
Mask explicit_confined(const DenseGame& g, const Mask& T, Player alpha, const Mask& U) {
    Mask A = U;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (!T[v] || A[v]) continue;
            const auto& s = g.successors[v];
            auto in_A = [&](std::uint32_t w) { return T[w] && A[w]; };
            auto outside_T_or_in_A = [&](std::uint32_t w) { return !T[w] || A[w]; };
            const bool take = g.owner[v] == alpha ? std::any_of(s.begin(), s.end(), in_A)
                                                  : std::all_of(s.begin(), s.end(), outside_T_or_in_A);
            if (take) {
                A[v] = 1;
                changed = true;
            }
        }
    }
    return A;
}

GenSpec fleet_like(std::uint64_t seed) {
    const FleetGame fg = fleet_game(FleetSpec{}, seed);
    return fg.spec;
}

Ids random_subset(std::size_t n, GameRng& rng) {
    Ids out;
    for (VertexId v = 0; v < n; ++v) {
        if (rng.below(3) == 0) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("pre, post and attractors on the example game") {
    const SymbolicGame g = encode(testing::example());
    BddManager& m = *g.manager;
    CHECK(decode_set(g, pre(g, Player::Even, g.set_of({1}))) == Ids{0, 2, 5});
    CHECK(pre(g, Player::Odd, m.bdd_false()).is_false());
    CHECK(pre(g, Player::Even, g.vertices) == g.vertices);
    CHECK(decode_set(g, post(g, g.set_of({3, 7}))) == Ids{2, 3, 6, 7});
    CHECK(post(g, m.bdd_false()).is_false());

    CHECK(decode_set(g, attractor(g, Player::Even, g.set_of({1}))) == Ids{0, 1, 2, 4, 5});
    CHECK(decode_set(g, attractor(g, Player::Odd, g.set_of({3, 7}))) == Ids{3, 6, 7});
    CHECK(attractor(g, Player::Odd, g.vertices) == g.vertices);
}

TEST_CASE("confined attractor") {
    const SymbolicGame g = encode(testing::example());
    const Bdd u2 = g.set_of({1});
    CHECK(decode_set(g, confined_attractor(g, Player::Even, g.set_of({1, 2}), u2)) == Ids{1, 2});
    CHECK(confined_attractor(g, Player::Even, g.vertices, u2) == attractor(g, Player::Even, u2));
    const Bdd T = g.set_of({0, 3, 5});
    CHECK(confined_attractor(g, Player::Odd, T, T) == T);
}

TEST_CASE("escape and best escape priority") {
    const SymbolicGame g = encode(testing::example());
    const Bdd A = g.set_of({3, 7});
    CHECK(escape(g, Player::Even, A).is_false());
    CHECK(decode_set(g, escape(g, Player::Odd, A)) == Ids{3});
    CHECK(escape(g, Player::Even, g.vertices).is_false());
    CHECK(best_escape_priority(g, Player::Odd, g.priorities, A) == 3);
    // u3 can only leave {u3} towards u2 (priority 6).
    CHECK(best_escape_priority(g, Player::Even, g.priorities, g.set_of({2})) == 6);
    CHECK_THROWS_AS(best_escape_priority(g, Player::Odd, g.priorities, g.vertices), NoEscape);
}

TEST_CASE("diamond_box") {
    const SymbolicGame g = encode(testing::example());
    BddManager& m = *g.manager;
    std::vector<Bdd> blocks(7, m.bdd_false());
    for (const auto& e : g.priorities.entries()) blocks[e.priority] = e.block;
    std::vector<Bdd> X(7, g.vertices);
    CHECK(diamond_box(g, blocks, X) == g.vertices);
    std::fill(X.begin(), X.end(), m.bdd_false());
    CHECK(diamond_box(g, blocks, X).is_false());
    for (std::size_t i = 0; i < X.size(); ++i) X[i] = i % 2 == 0 ? g.vertices : m.bdd_false();
    CHECK(decode_set(g, diamond_box(g, blocks, X)) == Ids{0, 2, 4, 5, 7});
}

TEST_CASE("set operations agree with explicit reimplementations") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const ExplicitGame eg = generate(fleet_like(seed));
        const DenseGame dg(eg);
        const SymbolicGame g = encode(eg);
        const std::size_t n = eg.size();
        GameRng rng(seed + 1000);
        const Ids U = random_subset(n, rng);
        const Mask Um = mask_of(n, U);
        const Bdd Ub = g.set_of(U);
        CAPTURE(seed);
        for (Player alpha : {Player::Even, Player::Odd}) {
            CHECK(decode_set(g, pre(g, alpha, Ub)) == ids_of(explicit_pre(dg, alpha, Um)));
            const Mask live(n, 1);
            const Bdd A = attractor(g, alpha, Ub);
            CHECK(decode_set(g, A) == ids_of(explicit_attractor(dg, live, alpha, Um)));

            // Fixpoint and closure of the complement.
            CHECK((pre(g, alpha, A) - A).is_false());
            CHECK(escape(g, alpha, g.vertices - A).is_false());

            // Confined version against an explicit iteration inside T.
            Ids T = random_subset(n, rng);
            for (VertexId v : U) T.push_back(v);
            std::sort(T.begin(), T.end());
            T.erase(std::unique(T.begin(), T.end()), T.end());
            CHECK(decode_set(g, confined_attractor(g, alpha, g.set_of(T), Ub)) ==
                  ids_of(explicit_confined(dg, mask_of(n, T), alpha, Um)));

            // Escape: α-vertices of U with a successor outside, ¬α-vertices
            // of U with all successors outside.
            Mask outside(n);
            for (std::size_t v = 0; v < n; ++v) outside[v] = !Um[v];
            Mask esc = explicit_pre(dg, alpha, outside);
            for (std::size_t v = 0; v < n; ++v) esc[v] = esc[v] && Um[v];
            CHECK(decode_set(g, escape(g, alpha, Ub)) == ids_of(esc));

            // bep: least priority of a vertex outside U reached from an α-vertex of U.
            Priority best = std::numeric_limits<Priority>::max();
            for (std::size_t v = 0; v < n; ++v) {
                if (!Um[v] || dg.owner[v] != alpha) continue;
                for (std::uint32_t w : dg.successors[v]) {
                    if (!Um[w]) best = std::min(best, dg.priority[w]);
                }
            }
            if (best == std::numeric_limits<Priority>::max()) {
                CHECK_THROWS_AS(best_escape_priority(g, alpha, g.priorities, Ub), NoEscape);
            } else {
                CHECK(best_escape_priority(g, alpha, g.priorities, Ub) == best);
            }
        }
        CHECK(decode_set(g, post(g, Ub)) == ids_of(explicit_post(dg, Um)));
        CHECK(decode_set(g, post(g, g.vertices)).size() <= n);
    }
}

TEST_CASE("diamond_box agrees with an explicit evaluation") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const ExplicitGame eg = generate(fleet_like(seed));
        const DenseGame dg(eg);
        const SymbolicGame g = encode(eg);
        BddManager& m = *g.manager;
        const std::size_t n = eg.size();
        const Priority d = g.priorities.max_priority() + 1;
        std::vector<Bdd> blocks(d, m.bdd_false());
        for (const auto& e : g.priorities.entries()) blocks[e.priority] = e.block;
        GameRng rng(seed + 77);
        std::vector<Mask> Xm(d);
        std::vector<Bdd> X(d);
        for (Priority i = 0; i < d; ++i) {
            const Ids s = random_subset(n, rng);
            Xm[i] = mask_of(n, s);
            X[i] = g.set_of(s);
        }
        Mask expected(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            const auto& s = dg.successors[v];
            auto qualifies = [&](std::uint32_t w) { return Xm[dg.priority[w]][w] != 0; };
            expected[v] = dg.owner[v] == Player::Even ? std::any_of(s.begin(), s.end(), qualifies)
                                                      : std::all_of(s.begin(), s.end(), qualifies);
        }
        CAPTURE(seed);
        CHECK(decode_set(g, diamond_box(g, blocks, X)) == ids_of(expected));
    }
}

TEST_CASE("promote_assign") {
    const SymbolicGame g = encode(testing::example());
    BddManager& m = *g.manager;
    CHECK(promote_assign(g.priorities, m.bdd_false(), 4) == g.priorities);
    CHECK(promote_assign(g.priorities, g.priorities.block(3), 3) == g.priorities);
    const PriorityMap p = promote_assign(g.priorities, g.set_of({3, 7}), 3);
    CHECK(decode_set(g, p.block(3)) == Ids{3, 6, 7});
    CHECK(decode_set(g, p.block(2)) == Ids{5});

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ExplicitGame eg = generate(fleet_like(seed));
        const SymbolicGame h = encode(eg);
        GameRng rng(seed);
        const Bdd A = h.set_of(random_subset(eg.size(), rng));
        const auto prios = h.priorities.priorities();
        const Priority target = prios[rng.below(prios.size())];
        const PriorityMap q = promote_assign(h.priorities, A, target);
        Bdd seen = h.manager->bdd_false();
        for (const auto& e : q.entries()) {
            CHECK((seen & e.block).is_false());
            seen |= e.block;
        }
        CHECK(seen == h.vertices);
        CHECK((q.block(target) & A) == A);
    }
}

TEST_CASE("promote_reset") {
    const SymbolicGame g = encode(testing::example());
    BddManager& m = *g.manager;
    CHECK(promote_reset(g.priorities, g.priorities, m.bdd_false(), 0) == g.priorities);

    // Promoted map: {u4,u8} raised to 3, {u6} raised to 4.
    PriorityMap pg = promote_assign(g.priorities, g.set_of({3, 7}), 3);
    pg = promote_assign(pg, g.set_of({5}), 4);
    // Reset at 4 with A = {u1}: blocks ≥ 4 keep the promoted contents, the
    // rest returns to original priorities, u1 moves to 4.
    const PriorityMap r = promote_reset(g.priorities, pg, g.set_of({0}), 4);
    CHECK(decode_set(g, r.block(6)) == Ids{1});
    CHECK(decode_set(g, r.block(5)).empty());
    CHECK(decode_set(g, r.block(4)) == Ids{0, 2, 5});
    CHECK(decode_set(g, r.block(3)) == Ids{6, 7});
    CHECK(decode_set(g, r.block(2)) == Ids{3});
    CHECK(decode_set(g, r.block(1)) == Ids{4});

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const ExplicitGame eg = generate(fleet_like(seed));
        const SymbolicGame h = encode(eg);
        GameRng rng(seed + 5);
        const auto prios = h.priorities.priorities();
        PriorityMap promoted = h.priorities;
        for (int k = 0; k < 3; ++k) {
            promoted = promote_assign(promoted, h.set_of(random_subset(eg.size(), rng)),
                                      prios[rng.below(prios.size())]);
        }
        const Bdd A = h.set_of(random_subset(eg.size(), rng));
        const Priority target = prios[rng.below(prios.size())];
        const PriorityMap q = promote_reset(h.priorities, promoted, A, target);
        Bdd seen = h.manager->bdd_false();
        for (const auto& e : q.entries()) {
            CHECK((seen & e.block).is_false());
            seen |= e.block;
        }
        CAPTURE(seed);
        CHECK(seen == h.vertices);
        CHECK((q.block(target) & A) == A);
    }
}
