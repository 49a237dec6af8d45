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

#include "pgsym/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace pgsym {

namespace {

using Mask = std::vector<char>;

ExplicitSolution to_solution(const DenseGame& game, const Mask& even) {
    ExplicitSolution s;
    for (std::size_t k = 0; k < game.size(); ++k) {
        (even[k] ? s.won_even : s.won_odd).push_back(game.ids[k]);
    }
    std::sort(s.won_even.begin(), s.won_even.end());
    std::sort(s.won_odd.begin(), s.won_odd.end());
    return s;
}

Mask minus(const Mask& a, const Mask& b) {
    Mask r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] && !b[k];
    return r;
}

Mask unite(const Mask& a, const Mask& b) {
    Mask r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] || b[k];
    return r;
}

bool none(const Mask& a) { return std::none_of(a.begin(), a.end(), [](char c) { return c != 0; }); }

struct Split {
    Mask even;
    Mask odd;
    Mask& of(Player p) { return p == Player::Even ? even : odd; }
};

Split zielonka_rec(const DenseGame& game, const Mask& live) {
    const std::size_t n = game.size();
    if (none(live)) return Split{Mask(n, 0), Mask(n, 0)};
    Priority top = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (live[k]) top = std::max(top, game.priority[k]);
    }
    const Player alpha = parity_player(top);
    const Player beta = opponent(alpha);
    Mask U(n, 0);
    for (std::size_t k = 0; k < n; ++k) U[k] = live[k] && game.priority[k] == top;
    const Mask A = explicit_attractor(game, live, alpha, U);
    Split sub = zielonka_rec(game, minus(live, A));
    const Mask B = explicit_attractor(game, live, beta, sub.of(beta));
    if (B == sub.of(beta)) {
        Split out;
        out.of(alpha) = unite(A, sub.of(alpha));
        out.of(beta) = B;
        return out;
    }
    Split second = zielonka_rec(game, minus(live, B));
    Split out;
    out.of(alpha) = second.of(alpha);
    out.of(beta) = unite(second.of(beta), B);
    return out;
}

// Vertices of `player` that lose under `choice` are exactly those that reach
// a vertex of opposite parity lying on a cycle through vertices of priority
// at most its own.
Mask wins_under(const DenseGame& game, Player player, const std::vector<std::uint32_t>& choice) {
    const std::size_t n = game.size();
    auto successors = [&](std::size_t v) -> std::vector<std::uint32_t> {
        if (game.owner[v] == player) return {choice[v]};
        return game.successors[v];
    };
    Mask bad(n, 0);
    std::vector<std::uint32_t> stack;
    Mask seen(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (parity_player(game.priority[u]) == player) continue;
        const Priority q = game.priority[u];
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(1, static_cast<std::uint32_t>(u));
        bool cycle = false;
        while (!stack.empty() && !cycle) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            for (std::uint32_t w : successors(v)) {
                if (game.priority[w] > q) continue;
                if (w == u) {
                    cycle = true;
                    break;
                }
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        bad[u] = cycle;
    }
    // Backward reachability of bad vertices in the strategy-restricted graph.
    Mask losing = bad;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (losing[v]) continue;
            for (std::uint32_t w : successors(v)) {
                if (losing[w]) {
                    losing[v] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    Mask winning(n);
    for (std::size_t v = 0; v < n; ++v) winning[v] = !losing[v];
    return winning;
}

}  // namespace

std::vector<char> explicit_attractor(const DenseGame& game, const std::vector<char>& live, Player alpha,
                                     const std::vector<char>& target) {
    const std::size_t n = game.size();
    Mask attracted(n, 0);
    std::vector<std::size_t> remaining(n, 0);
    std::deque<std::uint32_t> queue;
    for (std::size_t v = 0; v < n; ++v) {
        if (!live[v]) continue;
        for (std::uint32_t w : game.successors[v]) remaining[v] += live[w] ? 1 : 0;
        if (target[v]) {
            attracted[v] = 1;
            queue.push_back(static_cast<std::uint32_t>(v));
        }
    }
    while (!queue.empty()) {
        const std::uint32_t w = queue.front();
        queue.pop_front();
        for (std::uint32_t v : game.predecessors[w]) {
            if (!live[v] || attracted[v]) continue;
            if (game.owner[v] == alpha || --remaining[v] == 0) {
                attracted[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return attracted;
}

ExplicitSolution solve_explicit_zielonka(const ExplicitGame& explicit_game) {
    const DenseGame game(explicit_game);
    const Split s = zielonka_rec(game, Mask(game.size(), 1));
    return to_solution(game, s.even);
}

ExplicitSolution solve_bruteforce(const ExplicitGame& explicit_game, std::size_t max_vertices) {
    if (explicit_game.size() > max_vertices) {
        throw GameTooLarge("brute force limited to " + std::to_string(max_vertices) + " vertices, game has " +
                           std::to_string(explicit_game.size()));
    }
    const DenseGame game(explicit_game);
    const std::size_t n = game.size();

    auto strategy_count = [&](Player p) {
        double c = 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (game.owner[v] == p) c *= static_cast<double>(game.successors[v].size());
        }
        return c;
    };
    const Player player =
        strategy_count(Player::Even) <= strategy_count(Player::Odd) ? Player::Even : Player::Odd;

    std::vector<std::size_t> digit(n, 0);
    std::vector<std::uint32_t> choice(n, 0);
    Mask won(n, 0);
    for (;;) {
        for (std::size_t v = 0; v < n; ++v) {
            if (game.owner[v] == player) choice[v] = game.successors[v][digit[v]];
        }
        won = unite(won, wins_under(game, player, choice));
        // Next strategy in mixed-radix order.
        std::size_t v = 0;
        for (; v < n; ++v) {
            if (game.owner[v] != player) continue;
            if (++digit[v] < game.successors[v].size()) break;
            digit[v] = 0;
        }
        if (v == n) break;
    }
    if (player == Player::Even) return to_solution(game, won);
    Mask even(n);
    for (std::size_t v = 0; v < n; ++v) even[v] = !won[v];
    return to_solution(game, even);
}

}  // namespace pgsym
