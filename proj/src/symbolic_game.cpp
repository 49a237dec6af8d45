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

#include "pgsym/symbolic_game.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pgsym {

// ---------------------------------------------------------------------------
// PriorityMap

BddManager& PriorityMap::manager() const {
    if (!manager_) throw std::logic_error("PriorityMap without manager");
    return *manager_;
}

std::vector<Priority> PriorityMap::priorities() const {
    std::vector<Priority> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.priority);
    return out;
}

Priority PriorityMap::min_priority() const {
    if (entries_.empty()) throw std::logic_error("min_priority of an empty priority map");
    return entries_.front().priority;
}

Priority PriorityMap::max_priority() const {
    if (entries_.empty()) throw std::logic_error("max_priority of an empty priority map");
    return entries_.back().priority;
}

std::optional<Priority> PriorityMap::max_below(Priority bound) const {
    std::optional<Priority> best;
    for (const auto& e : entries_) {
        if (e.priority >= bound) break;
        best = e.priority;
    }
    return best;
}

bool PriorityMap::contains(Priority p) const {
    return std::any_of(entries_.begin(), entries_.end(), [p](const Entry& e) { return e.priority == p; });
}

Bdd PriorityMap::block(Priority p) const {
    for (const auto& e : entries_) {
        if (e.priority == p) return e.block;
        if (e.priority > p) break;
    }
    return manager().bdd_false();
}

void PriorityMap::assign(Priority p, Bdd block) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), p,
                               [](const Entry& e, Priority q) { return e.priority < q; });
    const bool present = it != entries_.end() && it->priority == p;
    if (block.is_false()) {
        if (present) entries_.erase(it);
        return;
    }
    if (present) {
        it->block = std::move(block);
    } else {
        entries_.insert(it, Entry{p, std::move(block)});
    }
}

Bdd PriorityMap::support_set() const {
    Bdd acc = manager().bdd_false();
    for (const auto& e : entries_) acc |= e.block;
    return acc;
}

Bdd PriorityMap::union_at_least(Priority m) const {
    Bdd acc = manager().bdd_false();
    for (const auto& e : entries_) {
        if (e.priority >= m) acc |= e.block;
    }
    return acc;
}

Bdd PriorityMap::union_at_most(Priority m) const {
    Bdd acc = manager().bdd_false();
    for (const auto& e : entries_) {
        if (e.priority <= m) acc |= e.block;
    }
    return acc;
}

PriorityMap PriorityMap::restrict_to(const Bdd& U) const {
    PriorityMap out(manager());
    for (const auto& e : entries_) {
        Bdd b = e.block & U;
        if (!b.is_false()) out.entries_.push_back(Entry{e.priority, std::move(b)});
    }
    return out;
}

bool operator==(const PriorityMap& a, const PriorityMap& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        if (a.entries_[i].priority != b.entries_[i].priority || !(a.entries_[i].block == b.entries_[i].block)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// SymbolicGame

namespace {

std::vector<std::pair<Var, Var>> shift_map(unsigned bits, bool to_primed) {
    std::vector<std::pair<Var, Var>> m;
    m.reserve(bits);
    for (unsigned j = 0; j < bits; ++j) {
        if (to_primed) {
            m.emplace_back(unprimed_var(j), primed_var(j));
        } else {
            m.emplace_back(primed_var(j), unprimed_var(j));
        }
    }
    return m;
}

std::uint64_t interleave(std::uint64_t source, std::uint64_t target, unsigned bits) {
    std::uint64_t r = 0;
    for (unsigned j = 0; j < bits; ++j) {
        r |= ((source >> j) & 1u) << (2 * j);
        r |= ((target >> j) & 1u) << (2 * j + 1);
    }
    return r;
}

}  // namespace

Bdd SymbolicGame::prime(const Bdd& U) const {
    const auto m = shift_map(bits, true);
    return manager->rename(U, m);
}

Bdd SymbolicGame::unprime(const Bdd& U) const {
    const auto m = shift_map(bits, false);
    return manager->rename(U, m);
}

Bdd SymbolicGame::set_of_indices(const std::vector<std::uint64_t>& indices) const {
    return manager->from_minterms(x, indices);
}

Bdd SymbolicGame::set_of(const std::vector<VertexId>& wanted) const {
    std::vector<std::uint64_t> indices;
    indices.reserve(wanted.size());
    for (VertexId id : wanted) {
        const auto it = std::lower_bound(ids->begin(), ids->end(), id);
        if (it == ids->end() || *it != id) throw std::out_of_range("unknown vertex id " + std::to_string(id));
        indices.push_back(static_cast<std::uint64_t>(it - ids->begin()));
    }
    return set_of_indices(indices) & vertices;
}

unsigned encoding_bits(std::size_t vertex_count) noexcept {
    unsigned bits = 1;
    while (bits < 64 && (std::uint64_t{1} << bits) < vertex_count) ++bits;
    return bits;
}

SymbolicGame encode(const ExplicitGame& game, BddManager::Options options) {
    validate(game);
    options.variable_count = 2 * encoding_bits(game.size());
    return encode(game, std::make_shared<BddManager>(options));
}

SymbolicGame encode(const ExplicitGame& game, std::shared_ptr<BddManager> manager) {
    validate(game);
    const std::size_t n = game.size();
    const unsigned bits = encoding_bits(n);
    if (bits > 32) throw std::invalid_argument("encode: game too large");
    if (manager->variable_count() < 2 * bits) {
        throw std::invalid_argument("encode: manager has too few variables");
    }

    auto ids = std::make_shared<std::vector<VertexId>>();
    ids->reserve(n);
    for (const auto& v : game.vertices) ids->push_back(v.id);
    std::sort(ids->begin(), ids->end());
    auto compact = [&](VertexId id) {
        return static_cast<std::uint64_t>(std::lower_bound(ids->begin(), ids->end(), id) - ids->begin());
    };

    SymbolicGame g;
    g.manager = manager;
    g.bits = bits;
    std::vector<Var> xs, xps, all;
    for (unsigned j = 0; j < bits; ++j) {
        xs.push_back(unprimed_var(j));
        xps.push_back(primed_var(j));
        all.push_back(unprimed_var(j));
        all.push_back(primed_var(j));
    }
    g.x = VarSet(xs);
    g.x_primed = VarSet(xps);

    std::vector<std::uint64_t> every, evens, odds, edge_patterns;
    std::map<Priority, std::vector<std::uint64_t>> by_priority;
    every.reserve(n);
    for (const auto& v : game.vertices) {
        const std::uint64_t k = compact(v.id);
        every.push_back(k);
        (v.owner == Player::Even ? evens : odds).push_back(k);
        by_priority[v.priority].push_back(k);
        for (VertexId w : v.successors) edge_patterns.push_back(interleave(k, compact(w), bits));
    }
    g.vertices = manager->from_minterms(g.x, std::move(every));
    g.even = manager->from_minterms(g.x, std::move(evens));
    g.odd = manager->from_minterms(g.x, std::move(odds));
    g.priorities = PriorityMap(*manager);
    for (auto& [p, ks] : by_priority) g.priorities.assign(p, manager->from_minterms(g.x, std::move(ks)));
    g.edges = manager->from_minterms(VarSet(all), std::move(edge_patterns));
    g.ids = std::move(ids);
    return g;
}

std::vector<VertexId> decode_set(const SymbolicGame& game, const Bdd& S) {
    if (!(S - game.vertices).is_false()) {
        throw std::invalid_argument("decode_set: set contains non-vertex patterns");
    }
    std::vector<VertexId> out;
    if (S.is_false()) return out;
    std::vector<bool> assignment(2 * game.bits, false);
    for (std::uint64_t k = 0; k < game.ids->size(); ++k) {
        for (unsigned j = 0; j < game.bits; ++j) assignment[unprimed_var(j)] = (k >> j) & 1u;
        if (game.manager->evaluate(S, assignment)) out.push_back((*game.ids)[k]);
    }
    return out;
}

ExplicitGame decode_game(const SymbolicGame& game) {
    ExplicitGame out;
    BddManager& m = *game.manager;
    const std::vector<VertexId> vs = decode_set(game, game.vertices);
    for (VertexId id : vs) {
        const Bdd v = game.set_of({id});
        VertexRecord rec;
        rec.id = id;
        rec.owner = (v & game.odd).is_false() ? Player::Even : Player::Odd;
        for (const auto& e : game.priorities.entries()) {
            if (!(v & e.block).is_false()) rec.priority = e.priority;
        }
        const Bdd succ = game.unprime(m.and_exists(game.edges, v, game.x));
        rec.successors = decode_set(game, succ);
        out.vertices.push_back(std::move(rec));
    }
    return out;
}

SymbolicGame subgame(const SymbolicGame& game, const Bdd& U) {
    SymbolicGame g = game;
    if (U == game.vertices) return g;
    g.vertices = game.vertices & U;
    g.even = game.even & U;
    g.odd = game.odd & U;
    g.edges = game.edges & U & game.prime(U);
    g.priorities = game.priorities.restrict_to(U);
    return g;
}

std::vector<std::pair<Priority, Priority>> compression_map(const std::vector<Priority>& priorities) {
    std::vector<Priority> sorted = priorities;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::pair<Priority, Priority>> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        Priority label;
        if (i == 0) {
            label = sorted[0] & 1u;
        } else {
            const Priority prev = out.back().second;
            label = ((sorted[i] ^ sorted[i - 1]) & 1u) ? prev + 1 : prev;
        }
        out.emplace_back(sorted[i], label);
    }
    return out;
}

SymbolicGame compress_priorities(const SymbolicGame& game) {
    SymbolicGame g = game;
    const auto relabel = compression_map(game.priorities.priorities());
    PriorityMap compressed(*game.manager);
    for (std::size_t i = 0; i < relabel.size(); ++i) {
        const Bdd merged = compressed.block(relabel[i].second) | game.priorities.entries()[i].block;
        compressed.assign(relabel[i].second, merged);
    }
    g.priorities = std::move(compressed);
    return g;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// The witness is completed to every game variable, free ones set to false.
ValidationReport violation(const SymbolicGame& game, ViolationKind kind, std::string message, const Bdd& witness) {
    ValidationReport r;
    r.kind = kind;
    r.message = std::move(message);
    std::vector<int> value(2 * game.bits, 0);
    if (auto path = game.manager->pick_one(witness)) {
        for (const auto& [v, b] : *path) {
            if (v < value.size()) value[v] = b ? 1 : 0;
        }
    }
    for (Var v = 0; v < value.size(); ++v) r.witness.emplace_back(v, value[v] != 0);
    return r;
}

}  // namespace

ValidationReport validate(const SymbolicGame& game) {
    BddManager& m = *game.manager;
    const Bdd overlap = game.even & game.odd;
    if (!overlap.is_false()) {
        return violation(game, ViolationKind::OwnersOverlap, "V0 and V1 intersect", overlap);
    }
    const Bdd owners_gap = (game.even | game.odd) ^ game.vertices;
    if (!owners_gap.is_false()) {
        return violation(game, ViolationKind::OwnersNotCoveringVertices, "V0 ∪ V1 differs from V", owners_gap);
    }
    Bdd covered = m.bdd_false();
    for (const auto& e : game.priorities.entries()) {
        const Bdd clash = covered & e.block;
        if (!clash.is_false()) {
            return violation(game, ViolationKind::PriorityBlocksOverlap,
                             "priority block " + std::to_string(e.priority) + " overlaps a lower block", clash);
        }
        covered |= e.block;
    }
    const Bdd prio_gap = covered ^ game.vertices;
    if (!prio_gap.is_false()) {
        return violation(game, ViolationKind::PriorityBlocksNotCoveringVertices,
                         "union of priority blocks differs from V", prio_gap);
    }
    const Bdd stray = game.edges - (game.vertices & game.prime(game.vertices));
    if (!stray.is_false()) {
        return violation(game, ViolationKind::EdgeOutsideVertices, "an edge leaves V × V", stray);
    }
    const Bdd has_successor = m.and_exists(game.edges, game.prime(game.vertices), game.x_primed);
    const Bdd dead_ends = game.vertices - has_successor;
    if (!dead_ends.is_false()) {
        return violation(game, ViolationKind::NotLeftTotal, "a vertex has no successor in V", dead_ends);
    }
    return {};
}

std::uint64_t witness_index(const ValidationReport& report, bool primed) {
    std::uint64_t k = 0;
    for (const auto& [v, value] : report.witness) {
        if ((v & 1u) == (primed ? 1u : 0u) && value) k |= std::uint64_t{1} << (v / 2);
    }
    return k;
}

}  // namespace pgsym
