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

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pgsym/symbolic_game.hpp"

namespace pgsym {

class SolveTimeout : public std::runtime_error {
public:
    SolveTimeout() : std::runtime_error("solver deadline reached") {}
};

/// Cooperative deadline; check() throws SolveTimeout once it has passed.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(Clock::time_point at) : at_(at) {}
    static Deadline after(std::chrono::milliseconds budget) { return Deadline(Clock::now() + budget); }

    bool expired() const { return at_ && Clock::now() >= *at_; }
    void check() const {
        if (expired()) throw SolveTimeout();
    }

private:
    std::optional<Clock::time_point> at_;
};

// All sets below are over the unprimed variables and contained in the
// vertex set of the game they are evaluated in. Complements are taken
// relative to that vertex set.

/// Vertices of α that have a successor in U, and vertices of ¬α whose
/// successors all lie in U.
Bdd pre(const SymbolicGame& game, Player alpha, const Bdd& U);

/// Union of the successor sets of U.
Bdd post(const SymbolicGame& game, const Bdd& U);

/// Least A ⊇ U with pre(α, A) ⊆ A.
Bdd attractor(const SymbolicGame& game, Player alpha, const Bdd& U, const Deadline& deadline = {});

/// Attractor into U computed in the subgame G ∩ T; requires U ⊆ T.
Bdd confined_attractor(const SymbolicGame& game, Player alpha, const Bdd& T, const Bdd& U,
                       const Deadline& deadline = {});

/// Vertices of U from which α can leave U in one move: pre(α, V \ U) ∩ U.
Bdd escape(const SymbolicGame& game, Player alpha, const Bdd& U);

/// Raised by best_escape_priority when A has no one-step exit.
class NoEscape : public std::logic_error {
public:
    NoEscape() : std::logic_error("best escape priority of a set without exits") {}
};

/// Least priority (in `promoted`) of a vertex outside A that some α-vertex
/// of A can move to.
Priority best_escape_priority(const SymbolicGame& game, Player alpha, const PriorityMap& promoted,
                              const Bdd& A);

/// promoted[A ↦ m]: A moved into block m, removed from every other block.
PriorityMap promote_assign(const PriorityMap& promoted, const Bdd& A, Priority m);

/// (original ⊎ promoted^{≥m})[A ↦ m]: blocks at or above m keep their
/// promoted contents, vertices below m return to their original priority,
/// and A is placed in block m.
PriorityMap promote_reset(const PriorityMap& original, const PriorityMap& promoted, const Bdd& A, Priority m);

/// One evaluation of the modal body of the fixpoint formula: V0-vertices
/// with some successor w ∈ X[p(w)], and V1-vertices with every successor
/// w ∈ X[p(w)]. `blocks[i]` is the vertex set of priority i and
/// `approximations[i]` the current value of X_i; both have one entry per
/// priority index.
Bdd diamond_box(const SymbolicGame& game, const std::vector<Bdd>& blocks, const std::vector<Bdd>& approximations);

}  // namespace pgsym
