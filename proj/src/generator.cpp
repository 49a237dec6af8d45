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

#include "pgsym/generator.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace pgsym {

std::uint64_t GameRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("GameRng::below: empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r = engine_();
    while (r < threshold) r = engine_();
    return r % bound;
}

void validate(const GenSpec& spec) {
    if (spec.vertices < 1) throw InvalidSpec("N must be at least 1");
    if (spec.priorities < 1) throw InvalidSpec("P must be at least 1");
    if (spec.min_degree < 1) throw InvalidSpec("L must be at least 1");
    if (spec.min_degree > spec.max_degree) throw InvalidSpec("L must not exceed H");
    if (spec.vertices > 0xFFFFFFFFull) throw InvalidSpec("N too large");
    if (!spec.self_loop_free && spec.min_degree > spec.vertices) {
        throw InvalidSpec("L = " + std::to_string(spec.min_degree) + " exceeds N = " + std::to_string(spec.vertices));
    }
    if (spec.self_loop_free && spec.min_degree > spec.vertices - 1) {
        throw InvalidSpec("L = " + std::to_string(spec.min_degree) + " exceeds N-1 = " +
                          std::to_string(spec.vertices - 1) + " for a self-loop-free game");
    }
}

ExplicitGame generate(const GenSpec& spec) {
    validate(spec);
    GameRng rng(spec.seed);
    const std::uint64_t n = spec.vertices;
    const std::uint64_t targets = spec.self_loop_free ? n - 1 : n;
    const std::uint64_t max_degree = std::min(spec.max_degree, targets);

    ExplicitGame game;
    game.vertices.resize(n);
    std::vector<char> taken(n, 0);
    for (std::uint64_t v = 0; v < n; ++v) {
        VertexRecord& rec = game.vertices[v];
        rec.id = v;
        rec.priority = static_cast<Priority>(rng.below(spec.priorities));
        rec.owner = rng.coin() ? Player::Odd : Player::Even;
        const std::uint64_t degree = rng.between(spec.min_degree, max_degree);
        rec.successors.reserve(degree);
        while (rec.successors.size() < degree) {
            const std::uint64_t w = rng.below(n);
            if ((spec.self_loop_free && w == v) || taken[w]) continue;
            taken[w] = 1;
            rec.successors.push_back(w);
        }
        for (VertexId w : rec.successors) taken[w] = 0;
    }
    return game;
}

}  // namespace pgsym
