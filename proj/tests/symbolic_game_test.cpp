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
#include <map>

#include "pgsym/generator.hpp"
#include "pgsym/set_ops.hpp"
#include "pgsym/symbolic_game.hpp"
#include "support.hpp"

using namespace pgsym;

namespace {

VarSet all_vars(const SymbolicGame& g) {
    std::vector<Var> v(g.x.begin(), g.x.end());
    v.insert(v.end(), g.x_primed.begin(), g.x_primed.end());
    std::sort(v.begin(), v.end());
    return VarSet(std::move(v));
}

// Records in ascending id order with sorted successors and no names.
ExplicitGame normalized(ExplicitGame g) {
    for (auto& r : g.vertices) {
        std::sort(r.successors.begin(), r.successors.end());
        r.name.reset();
    }
    std::sort(g.vertices.begin(), g.vertices.end(),
              [](const VertexRecord& a, const VertexRecord& b) { return a.id < b.id; });
    return g;
}

GenSpec small_spec(std::uint64_t seed) {
    GenSpec s;
    s.vertices = 1 + seed % 30;
    s.priorities = 1 + static_cast<std::uint32_t>(seed % 9);
    s.min_degree = 1;
    s.max_degree = 3;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("encoding of the example game") {
    const SymbolicGame g = encode(testing::example());
    BddManager& m = *g.manager;
    CHECK(g.bits == 3);
    CHECK(g.x == VarSet{0, 2, 4});
    CHECK(g.x_primed == VarSet{1, 3, 5});
    CHECK(m.sat_count(g.vertices, g.x) == 8);
    CHECK(m.sat_count(g.odd, g.x) == 5);
    CHECK(m.sat_count(g.even, g.x) == 3);
    CHECK(m.sat_count(g.edges, all_vars(g)) == 14);
    CHECK(g.priorities.priorities() == std::vector<Priority>{1, 2, 3, 4, 5, 6});
    CHECK(decode_set(g, g.priorities.block(3)) == std::vector<VertexId>{6, 7});
    CHECK(validate(g).ok());
}

TEST_CASE("encoding bits") {
    CHECK(encoding_bits(1) == 1);
    CHECK(encoding_bits(2) == 1);
    CHECK(encoding_bits(3) == 2);
    CHECK(encoding_bits(8) == 3);
    CHECK(encoding_bits(9) == 4);
}

TEST_CASE("single self-loop vertex") {
    const SymbolicGame g = encode(parse_pgsolver("42 3 0 42;"));
    BddManager& m = *g.manager;
    CHECK(g.bits == 1);
    CHECK(g.vertices == m.nvar(0));
    CHECK(g.edges == (m.nvar(0) & m.nvar(1)));
    CHECK(decode_set(g, g.vertices) == std::vector<VertexId>{42});
}

TEST_CASE("sparse ids are compacted and unused patterns excluded") {
    const SymbolicGame g = encode(parse_pgsolver("30 0 0 5; 5 1 1 10; 10 2 0 30;"));
    BddManager& m = *g.manager;
    CHECK(m.sat_count(g.vertices, g.x) == 3);
    CHECK(g.set_of({5}) == g.set_of_indices({0}));
    CHECK(g.set_of({30}) == g.set_of_indices({2}));
    CHECK_THROWS_AS(g.set_of({7}), std::out_of_range);
    CHECK(decode_set(g, g.vertices) == std::vector<VertexId>{5, 10, 30});
    CHECK(decode_set(g, m.bdd_false()).empty());
    // Pattern 3 is not a vertex.
    CHECK_THROWS_AS(decode_set(g, m.var(0) & m.var(2)), std::invalid_argument);
}

TEST_CASE("decode(encode(g)) = g on random games") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const ExplicitGame g = generate(small_spec(seed));
        CAPTURE(seed);
        CHECK(decode_game(encode(g)) == normalized(g));
    }
}

TEST_CASE("prime and unprime are inverse") {
    const SymbolicGame g = encode(testing::example());
    const Bdd s = g.set_of({1, 4, 6});
    CHECK(g.unprime(g.prime(s)) == s);
    CHECK(g.manager->support(g.prime(s)) == g.x_primed);
}

TEST_CASE("validation reports each violation") {
    const SymbolicGame base = encode(testing::example());
    BddManager& m = *base.manager;
    CHECK(validate(base).kind == ViolationKind::None);

    SUBCASE("owners overlap") {
        SymbolicGame g = base;
        g.even = g.vertices;
        g.odd = g.vertices;
        const ValidationReport r = validate(g);
        CHECK(r.kind == ViolationKind::OwnersOverlap);
        CHECK_FALSE(r.witness.empty());
    }
    SUBCASE("owners do not cover") {
        SymbolicGame g = base;
        g.even = g.even - g.set_of({1});
        const ValidationReport r = validate(g);
        CHECK(r.kind == ViolationKind::OwnersNotCoveringVertices);
        CHECK(witness_index(r) == 1);
    }
    SUBCASE("priority blocks overlap") {
        SymbolicGame g = base;
        g.priorities.assign(6, g.priorities.block(6) | g.set_of({0}));
        CHECK(validate(g).kind == ViolationKind::PriorityBlocksOverlap);
    }
    SUBCASE("priority blocks do not cover") {
        SymbolicGame g = base;
        g.priorities.assign(6, m.bdd_false());
        const ValidationReport r = validate(g);
        CHECK(r.kind == ViolationKind::PriorityBlocksNotCoveringVertices);
        CHECK(witness_index(r) == 1);
    }
    SUBCASE("edge from a non-vertex pattern") {
        SymbolicGame g = subgame(base, base.vertices - base.set_of({7}));
        g.edges = g.edges | (base.set_of({7}) & g.prime(base.set_of({3})));
        const ValidationReport r = validate(g);
        CHECK(r.kind == ViolationKind::EdgeOutsideVertices);
        CHECK(witness_index(r) == 7);
    }
    SUBCASE("dead end") {
        SymbolicGame g = base;
        g.edges = g.edges - g.set_of({0});
        const ValidationReport r = validate(g);
        CHECK(r.kind == ViolationKind::NotLeftTotal);
        CHECK(witness_index(r) == 0);
    }
}

TEST_CASE("subgame restricts every component") {
    const SymbolicGame g = encode(testing::example());
    const SymbolicGame same = subgame(g, g.vertices);
    CHECK(same.vertices == g.vertices);
    CHECK(same.edges == g.edges);
    CHECK(same.even == g.even);
    CHECK(same.odd == g.odd);
    CHECK(same.priorities == g.priorities);

    const Bdd A = attractor(g, Player::Even, g.set_of({1}));
    const SymbolicGame rest = subgame(g, g.vertices - A);
    CHECK(decode_set(rest, rest.vertices) == std::vector<VertexId>{3, 6, 7});
    CHECK(validate(rest).ok());
    CHECK(rest.priorities.priorities() == std::vector<Priority>{2, 3});
}

TEST_CASE("subgames after removing an attractor stay total") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const ExplicitGame eg = generate(small_spec(seed));
        const SymbolicGame g = encode(eg);
        GameRng rng(seed * 7 + 1);
        std::vector<VertexId> target;
        for (const auto& r : eg.vertices) {
            if (rng.coin()) target.push_back(r.id);
        }
        const Player alpha = rng.coin() ? Player::Odd : Player::Even;
        const Bdd A = attractor(g, alpha, g.set_of(target));
        const SymbolicGame rest = subgame(g, g.vertices - A);
        CAPTURE(seed);
        CHECK(validate(rest).ok());

        // Explicit check: every remaining vertex keeps a remaining successor.
        const auto left = decode_set(rest, rest.vertices);
        const auto idx = eg.index();
        for (VertexId v : left) {
            const auto& succ = eg.vertices[idx.at(v)].successors;
            CHECK(std::any_of(succ.begin(), succ.end(),
                              [&](VertexId w) { return std::binary_search(left.begin(), left.end(), w); }));
        }
    }
}

TEST_CASE("priority compression") {
    using Map = std::vector<std::pair<Priority, Priority>>;
    CHECK(compression_map({2, 5, 8}) == Map{{2, 0}, {5, 1}, {8, 2}});
    CHECK(compression_map({1, 2, 3, 4, 5, 6}) == Map{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}});
    CHECK(compression_map({3, 5, 9}) == Map{{3, 1}, {5, 1}, {9, 1}});
    CHECK(compression_map({4, 4, 0, 7}) == Map{{0, 0}, {4, 0}, {7, 1}});
    CHECK(compression_map({}).empty());

    const SymbolicGame g = encode(parse_pgsolver("0 3 0 1; 1 5 1 2; 2 8 0 0; 3 10 1 0;"));
    const SymbolicGame c = compress_priorities(g);
    CHECK(c.priorities.priorities() == std::vector<Priority>{1, 2});
    CHECK(decode_set(c, c.priorities.block(1)) == std::vector<VertexId>{0, 1});
    CHECK(decode_set(c, c.priorities.block(2)) == std::vector<VertexId>{2, 3});
    CHECK(validate(c).ok());

    const SymbolicGame f = encode(testing::example());
    CHECK(compress_priorities(f).priorities == f.priorities);
}

TEST_CASE("priority map operations") {
    const SymbolicGame g = encode(testing::example());
    const PriorityMap& p = g.priorities;
    CHECK(p.min_priority() == 1);
    CHECK(p.max_priority() == 6);
    CHECK(p.max_below(4) == std::optional<Priority>(3));
    CHECK_FALSE(p.max_below(1).has_value());
    CHECK(p.contains(5));
    CHECK_FALSE(p.contains(0));
    CHECK(p.block(0).is_false());
    CHECK(p.support_set() == g.vertices);
    CHECK(decode_set(g, p.union_at_least(5)) == std::vector<VertexId>{0, 1});
    CHECK(decode_set(g, p.union_at_most(2)) == std::vector<VertexId>{3, 4, 5});
    const PriorityMap r = p.restrict_to(g.set_of({6, 7, 0}));
    CHECK(r.priorities() == std::vector<Priority>{3, 5});

    PriorityMap q = p;
    q.assign(9, g.set_of({2}));
    CHECK(q.max_priority() == 9);
    q.assign(9, g.manager->bdd_false());
    CHECK(q == p);
}
