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

// Shared helpers for the unit and acceptance tests: truth-table oracles for
// the BDD engine and the running example game.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgsym/bdd.hpp"
#include "pgsym/explicit_game.hpp"
#include "pgsym/pgsolver.hpp"

namespace pgsym::testing {

// ---- truth tables ------------------------------------------------------------

/// Boolean function over variables 0..n-1; bit k of an assignment index is
/// the value of variable k.
struct TruthTable {
    unsigned n = 0;
    std::vector<bool> values;

    explicit TruthTable(unsigned vars = 0, bool value = false) : n(vars), values(std::size_t{1} << vars, value) {}

    static TruthTable variable(unsigned vars, unsigned v) {
        TruthTable t(vars);
        for (std::size_t a = 0; a < t.values.size(); ++a) t.values[a] = (a >> v) & 1u;
        return t;
    }

    bool operator()(std::size_t a) const { return values[a]; }
    std::size_t count() const { return static_cast<std::size_t>(std::count(values.begin(), values.end(), true)); }
    friend bool operator==(const TruthTable&, const TruthTable&) = default;

    template <class F>
    TruthTable zip(const TruthTable& o, F f) const {
        TruthTable t(n);
        for (std::size_t a = 0; a < values.size(); ++a) t.values[a] = f(values[a], o.values[a]);
        return t;
    }
    TruthTable operator&(const TruthTable& o) const { return zip(o, [](bool x, bool y) { return x && y; }); }
    TruthTable operator|(const TruthTable& o) const { return zip(o, [](bool x, bool y) { return x || y; }); }
    TruthTable operator^(const TruthTable& o) const { return zip(o, [](bool x, bool y) { return x != y; }); }
    TruthTable operator-(const TruthTable& o) const { return zip(o, [](bool x, bool y) { return x && !y; }); }
    TruthTable operator~() const {
        TruthTable t(n);
        for (std::size_t a = 0; a < values.size(); ++a) t.values[a] = !values[a];
        return t;
    }

    TruthTable exists(const std::vector<Var>& vars) const {
        TruthTable t = *this;
        for (Var v : vars) {
            TruthTable next(n);
            for (std::size_t a = 0; a < values.size(); ++a) {
                next.values[a] = t.values[a & ~(std::size_t{1} << v)] || t.values[a | (std::size_t{1} << v)];
            }
            t = next;
        }
        return t;
    }
    TruthTable forall(const std::vector<Var>& vars) const { return ~(~*this).exists(vars); }
};

inline TruthTable ite(const TruthTable& c, const TruthTable& t, const TruthTable& e) { return (c & t) | (~c & e); }

inline bool matches(BddManager& m, const Bdd& f, const TruthTable& t) {
    std::vector<bool> assignment(m.variable_count(), false);
    for (std::size_t a = 0; a < t.values.size(); ++a) {
        for (unsigned v = 0; v < t.n; ++v) assignment[v] = (a >> v) & 1u;
        if (m.evaluate(f, assignment) != t(a)) return false;
    }
    return true;
}

/// Number of ROBDD nodes of t: distinct subfunctions, reached by fixing a
/// prefix of the order, that depend on the next variable.
inline std::size_t reference_node_count(const TruthTable& t) {
    std::size_t total = 0;
    std::set<std::vector<bool>> seen;
    for (unsigned level = 0; level < t.n; ++level) {
        for (std::size_t prefix = 0; prefix < (std::size_t{1} << level); ++prefix) {
            // Subfunction over variables level..n-1.
            std::vector<bool> sub;
            const std::size_t rest = std::size_t{1} << (t.n - level);
            sub.reserve(rest);
            for (std::size_t r = 0; r < rest; ++r) sub.push_back(t((r << level) | prefix));
            // It depends on variable `level` iff its two halves differ.
            bool depends = false;
            for (std::size_t r = 0; r < rest; r += 2) {
                if (sub[r] != sub[r + 1]) {
                    depends = true;
                    break;
                }
            }
            if (depends && seen.insert(sub).second) ++total;
        }
    }
    return total;
}

/// Random formula built simultaneously as a BDD and a truth table.
struct Formula {
    Bdd bdd;
    TruthTable table;
};

inline Formula random_formula(BddManager& m, unsigned vars, std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
    const int kind = pick(rng);
    if (kind <= 1 || depth <= 0) {
        const Var v = static_cast<Var>(std::uniform_int_distribution<unsigned>(0, vars - 1)(rng));
        if (kind == 0) return {m.var(v), TruthTable::variable(vars, v)};
        return {m.nvar(v), ~TruthTable::variable(vars, v)};
    }
    Formula a = random_formula(m, vars, rng, depth - 1);
    if (kind == 7) return {~a.bdd, ~a.table};
    Formula b = random_formula(m, vars, rng, depth - 1);
    switch (kind) {
    case 2: return {a.bdd & b.bdd, a.table & b.table};
    case 3: return {a.bdd | b.bdd, a.table | b.table};
    case 4: return {a.bdd ^ b.bdd, a.table ^ b.table};
    case 5: return {a.bdd - b.bdd, a.table - b.table};
    default: {
        Formula c = random_formula(m, vars, rng, depth - 1);
        return {m.ite(a.bdd, b.bdd, c.bdd), ite(a.table, b.table, c.table)};
    }
    }
}

inline std::vector<Var> random_subset(unsigned vars, std::mt19937_64& rng) {
    std::vector<Var> out;
    for (Var v = 0; v < vars; ++v) {
        if (rng() & 1u) out.push_back(v);
    }
    return out;
}

// ---- running example ---------------------------------------------------------

/// The eight-vertex example game; vertex k is u_{k+1}.
inline constexpr const char* kExample =
    "parity 7;\n"
    "0 5 1 1 \"u1\";\n"
    "1 6 0 4,6 \"u2\";\n"
    "2 4 0 1 \"u3\";\n"
    "3 2 1 2,6,7 \"u4\";\n"
    "4 1 0 0,5 \"u5\";\n"
    "5 2 1 1 \"u6\";\n"
    "6 3 1 5,2,7 \"u7\";\n"
    "7 3 1 3 \"u8\";\n";

inline ExplicitGame example() { return parse_pgsolver(kExample); }

inline const std::vector<VertexId> kExampleEven{0, 1, 2, 4, 5};
inline const std::vector<VertexId> kExampleOdd{3, 6, 7};

}  // namespace pgsym::testing
