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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pgsym/explicit_game.hpp"

// Explicit-state reference solvers. They share no code with the symbolic
// solvers and serve as ground truth in tests and in `verify`.

namespace pgsym {

/// Zielonka's recursive algorithm over adjacency lists.
ExplicitSolution solve_explicit_zielonka(const ExplicitGame& game);

class GameTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Positional-strategy enumeration. For the player with fewer positional
/// strategies, a vertex is won iff some strategy makes every cycle reachable
/// from it (with the opponent moving freely) have a maximal priority of the
/// player's parity. Throws GameTooLarge above `max_vertices`.
ExplicitSolution solve_bruteforce(const ExplicitGame& game, std::size_t max_vertices = 10);

/// Explicit attractor: positions (in DenseGame order) from which `alpha`
/// forces play into `target` within the vertices marked in `live`.
std::vector<char> explicit_attractor(const DenseGame& game, const std::vector<char>& live, Player alpha,
                                     const std::vector<char>& target);

}  // namespace pgsym
