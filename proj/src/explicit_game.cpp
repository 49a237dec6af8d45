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

#include "pgsym/explicit_game.hpp"

namespace pgsym {

std::size_t ExplicitGame::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& v : vertices) n += v.successors.size();
    return n;
}

std::unordered_map<VertexId, std::size_t> ExplicitGame::index() const {
    std::unordered_map<VertexId, std::size_t> idx;
    idx.reserve(vertices.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) idx.emplace(vertices[k].id, k);
    return idx;
}

void validate(const ExplicitGame& game) {
    if (game.vertices.empty()) throw InvalidGame("game has no vertices");
    const auto idx = game.index();
    if (idx.size() != game.vertices.size()) {
        for (std::size_t k = 0; k < game.vertices.size(); ++k) {
            if (idx.at(game.vertices[k].id) != k) {
                throw InvalidGame("duplicate vertex id " + std::to_string(game.vertices[k].id));
            }
        }
    }
    for (const auto& v : game.vertices) {
        if (v.successors.empty()) {
            throw InvalidGame("vertex " + std::to_string(v.id) + " has no successors");
        }
        for (VertexId w : v.successors) {
            if (!idx.contains(w)) {
                throw InvalidGame("vertex " + std::to_string(v.id) + " has unknown successor " +
                                  std::to_string(w));
            }
        }
    }
}

DenseGame::DenseGame(const ExplicitGame& game) {
    validate(game);
    const auto idx = game.index();
    const std::size_t n = game.size();
    priority.resize(n);
    owner.resize(n);
    successors.resize(n);
    predecessors.resize(n);
    ids.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& v = game.vertices[k];
        priority[k] = v.priority;
        owner[k] = v.owner;
        ids[k] = v.id;
        for (VertexId w : v.successors) {
            const auto t = static_cast<std::uint32_t>(idx.at(w));
            successors[k].push_back(t);
            predecessors[t].push_back(static_cast<std::uint32_t>(k));
        }
    }
}

}  // namespace pgsym
