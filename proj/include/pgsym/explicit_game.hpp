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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pgsym {

using VertexId = std::uint64_t;
using Priority = std::uint32_t;

enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) noexcept { return p == Player::Even ? Player::Odd : Player::Even; }
constexpr Player parity_player(Priority p) noexcept { return (p & 1u) ? Player::Odd : Player::Even; }
constexpr int index_of(Player p) noexcept { return static_cast<int>(p); }

struct VertexRecord {
    VertexId id = 0;
    Priority priority = 0;
    Player owner = Player::Even;
    std::vector<VertexId> successors;
    std::optional<std::string> name;

    friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

class InvalidGame : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Adjacency-list parity game. Records keep their input order.
struct ExplicitGame {
    std::vector<VertexRecord> vertices;

    std::size_t size() const noexcept { return vertices.size(); }
    std::size_t edge_count() const noexcept;
    /// Map from vertex id to position in `vertices`.
    std::unordered_map<VertexId, std::size_t> index() const;

    friend bool operator==(const ExplicitGame&, const ExplicitGame&) = default;
};

/// Throws InvalidGame if the game is empty, has duplicate ids, a vertex
/// without successors, or a successor that is not a vertex.
void validate(const ExplicitGame& game);

/// Winner partition as sorted id lists.
struct ExplicitSolution {
    std::vector<VertexId> won_even;
    std::vector<VertexId> won_odd;

    friend bool operator==(const ExplicitSolution&, const ExplicitSolution&) = default;
};

/// Dense view of an ExplicitGame in which vertex k is vertices[k].
struct DenseGame {
    std::vector<Priority> priority;
    std::vector<Player> owner;
    std::vector<std::vector<std::uint32_t>> successors;
    std::vector<std::vector<std::uint32_t>> predecessors;
    std::vector<VertexId> ids;

    explicit DenseGame(const ExplicitGame& game);
    std::size_t size() const noexcept { return priority.size(); }
};

}  // namespace pgsym
