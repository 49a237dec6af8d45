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

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgsym/bdd.hpp"
#include "pgsym/explicit_game.hpp"

namespace pgsym {

/// Ascending map from priority to a vertex-set BDD. Blocks are kept
/// pairwise disjoint by the callers; empty blocks are dropped by assign().
class PriorityMap {
public:
    struct Entry {
        Priority priority;
        Bdd block;
    };

    PriorityMap() = default;
    explicit PriorityMap(BddManager& manager) : manager_(&manager) {}

    BddManager& manager() const;
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    std::vector<Priority> priorities() const;

    Priority min_priority() const;
    Priority max_priority() const;
    /// Largest priority strictly below `bound`, if any.
    std::optional<Priority> max_below(Priority bound) const;
    bool contains(Priority p) const;

    /// Block of priority p; FALSE when p is absent.
    Bdd block(Priority p) const;
    /// Replaces block p; an empty block removes the entry.
    void assign(Priority p, Bdd block);

    /// Union of all blocks.
    Bdd support_set() const;
    Bdd union_at_least(Priority m) const;
    Bdd union_at_most(Priority m) const;
    /// Every block conjoined with U; empty blocks dropped.
    PriorityMap restrict_to(const Bdd& U) const;

    /// Structural equality of both keys and block references.
    friend bool operator==(const PriorityMap& a, const PriorityMap& b);

private:
    BddManager* manager_ = nullptr;
    std::vector<Entry> entries_;
};

/// BDD representation of a parity game.
///
/// Vertex k (in compacted order) is encoded as the little-endian binary of k
/// over the unprimed variables x_j = 2j; successor bits live on the
/// interleaved primed variables x'_j = 2j + 1. All fields are treated as
/// immutable once built.
struct SymbolicGame {
    std::shared_ptr<BddManager> manager;
    unsigned bits = 0;
    VarSet x;
    VarSet x_primed;
    Bdd vertices;
    Bdd even;  ///< V0
    Bdd odd;   ///< V1
    Bdd edges;
    PriorityMap priorities;
    /// Explicit id of every compact index, shared between subgames.
    std::shared_ptr<const std::vector<VertexId>> ids;

    const Bdd& owned_by(Player p) const { return p == Player::Even ? even : odd; }
    bool empty() const { return vertices.is_false(); }

    /// U(x) -> U(x').
    Bdd prime(const Bdd& U) const;
    /// U(x') -> U(x).
    Bdd unprime(const Bdd& U) const;
    /// Set of the given compact indices.
    Bdd set_of_indices(const std::vector<std::uint64_t>& indices) const;
    /// Set of the given explicit ids; throws std::out_of_range for unknown ids.
    Bdd set_of(const std::vector<VertexId>& ids) const;
};

inline constexpr Var unprimed_var(unsigned bit) noexcept { return 2 * bit; }
inline constexpr Var primed_var(unsigned bit) noexcept { return 2 * bit + 1; }

/// Number of unprimed variables needed for n vertices (at least 1).
unsigned encoding_bits(std::size_t vertex_count) noexcept;

/// Encodes an explicit game into a fresh manager built with `options`
/// (variable_count is overridden to 2 * bits). Ids are compacted in
/// ascending id order.
SymbolicGame encode(const ExplicitGame& game, BddManager::Options options = {});
/// Encodes into an existing manager, which needs at least 2 * bits variables.
SymbolicGame encode(const ExplicitGame& game, std::shared_ptr<BddManager> manager);

/// Explicit ids of the vertices in S, ascending. Throws std::invalid_argument
/// if S contains a pattern that is not a vertex of the game.
std::vector<VertexId> decode_set(const SymbolicGame& game, const Bdd& S);

/// Reconstructs the explicit game (records in ascending id order, successor
/// lists ascending, names dropped).
ExplicitGame decode_game(const SymbolicGame& game);

/// G ∩ U. Totality is not checked.
SymbolicGame subgame(const SymbolicGame& game, const Bdd& U);

/// Relabels the occurring priorities into an interval starting at 0 or 1
/// while keeping parities and the relative order.
SymbolicGame compress_priorities(const SymbolicGame& game);
/// The relabeling used by compress_priorities: (old, new) pairs, ascending.
std::vector<std::pair<Priority, Priority>> compression_map(const std::vector<Priority>& priorities);

enum class ViolationKind {
    None,
    OwnersOverlap,
    OwnersNotCoveringVertices,
    PriorityBlocksOverlap,
    PriorityBlocksNotCoveringVertices,
    EdgeOutsideVertices,
    NotLeftTotal,
};

struct ValidationReport {
    ViolationKind kind = ViolationKind::None;
    std::string message;
    /// A violating assignment, as (variable, value) pairs.
    std::vector<std::pair<Var, bool>> witness;

    bool ok() const noexcept { return kind == ViolationKind::None; }
};

/// Checks the SymbolicGame invariants and reports the first one violated.
ValidationReport validate(const SymbolicGame& game);

/// Compact index of a witness on the unprimed (or primed) variables.
std::uint64_t witness_index(const ValidationReport& report, bool primed = false);

}  // namespace pgsym
