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
#include <random>
#include <stdexcept>

#include "pgsym/explicit_game.hpp"

namespace pgsym {

/// Parameters of a `randomgame N P L H [x]` style game.
struct GenSpec {
    std::uint64_t vertices = 1;   ///< N
    std::uint32_t priorities = 1; ///< P: priorities are drawn from [0, P-1]
    std::uint64_t min_degree = 1; ///< L
    std::uint64_t max_degree = 1; ///< H, clamped to N-1 without self loops
    bool self_loop_free = false;  ///< the `x` flag
    std::uint64_t seed = 0;
};

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Seeded source used by the generator: the raw 64-bit output of
/// std::mt19937_64 (fully specified by the standard), with bounded draws by
/// rejection, so streams agree across platforms and standard libraries.
class GameRng {
public:
    explicit GameRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Throws InvalidSpec unless 1 ≤ L ≤ H, N ≥ 1, P ≥ 1 and, without self
/// loops, L ≤ N-1.
void validate(const GenSpec& spec);

/// Random game with ids 0..N-1. Per vertex, in order: priority uniform in
/// [0, P-1], owner by a fair coin, out-degree uniform in [L, H'] where H' is
/// H clamped to the number of admissible targets, and that many distinct
/// successors drawn uniformly with rejection of repeats (and of the vertex
/// itself when self loops are excluded).
ExplicitGame generate(const GenSpec& spec);

}  // namespace pgsym
