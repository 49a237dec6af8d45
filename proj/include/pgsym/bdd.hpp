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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgsym {

/// Index of a Boolean variable; the index is also its level in the order.
using Var = std::uint32_t;

class BddManager;

/// Raised when an operation would exceed the manager's node budget even
/// after a garbage collection.
class BddOutOfMemory : public std::runtime_error {
public:
    explicit BddOutOfMemory(std::size_t budget);
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

/// Strictly ascending list of variable indices.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<Var> vars);
    explicit VarSet(std::vector<Var> vars);

    const std::vector<Var>& vars() const noexcept { return vars_; }
    std::size_t size() const noexcept { return vars_.size(); }
    bool empty() const noexcept { return vars_.empty(); }
    bool contains(Var v) const noexcept;
    auto begin() const noexcept { return vars_.begin(); }
    auto end() const noexcept { return vars_.end(); }

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    std::vector<Var> vars_;
};

/// Handle to a node of a BddManager.
///
/// Every live handle protects its node from garbage collection. A handle
/// must not outlive the manager that created it. The default-constructed
/// handle is unbound and only useful as a placeholder.
class Bdd {
public:
    Bdd() noexcept = default;
    Bdd(const Bdd& other) noexcept;
    Bdd(Bdd&& other) noexcept;
    Bdd& operator=(const Bdd& other) noexcept;
    Bdd& operator=(Bdd&& other) noexcept;
    ~Bdd();

    BddManager* manager() const noexcept { return manager_; }
    std::uint32_t id() const noexcept { return node_; }
    bool bound() const noexcept { return manager_ != nullptr; }
    bool is_false() const noexcept { return node_ == 0; }
    bool is_true() const noexcept { return node_ == 1; }
    bool is_terminal() const noexcept { return node_ < 2; }

    /// Node identity; under one manager this is semantic equality.
    friend bool operator==(const Bdd& a, const Bdd& b) noexcept {
        return a.manager_ == b.manager_ && a.node_ == b.node_;
    }

    Bdd operator&(const Bdd& other) const;
    Bdd operator|(const Bdd& other) const;
    Bdd operator^(const Bdd& other) const;
    /// Set difference: this AND NOT other.
    Bdd operator-(const Bdd& other) const;
    Bdd operator~() const;
    Bdd& operator&=(const Bdd& other) { return *this = *this & other; }
    Bdd& operator|=(const Bdd& other) { return *this = *this | other; }
    Bdd& operator-=(const Bdd& other) { return *this = *this - other; }

private:
    friend class BddManager;
    Bdd(BddManager* manager, std::uint32_t node) noexcept;

    BddManager* manager_ = nullptr;
    std::uint32_t node_ = 0;
};

enum class BinaryOp : std::uint8_t { And, Or, Xor, Diff };

/// Store of reduced ordered BDDs without complement edges.
///
/// Nodes are hash-consed in a unique table, so two handles denote the same
/// function iff they reference the same node. The variable order is the
/// index order and is fixed for the lifetime of the manager.
///
/// Garbage collection is mark-sweep from the nodes referenced by live Bdd
/// handles. It runs only at the entry of a public operation, when the number
/// of live nodes exceeds the collection threshold, or when an operation runs
/// into the node budget (the operation is then retried once).
///
/// Not thread-safe: a manager and its handles belong to one thread.
class BddManager {
public:
    struct Options {
        Var variable_count = 0;
        std::optional<std::size_t> node_budget;
        std::size_t gc_threshold = std::size_t{1} << 20;
        /// Number of op-cache slots, rounded up to a power of two.
        std::size_t cache_slots = std::size_t{1} << 18;
    };

    explicit BddManager(Var variable_count);
    explicit BddManager(const Options& options);
    BddManager(const BddManager&) = delete;
    BddManager& operator=(const BddManager&) = delete;
    ~BddManager();

    Var variable_count() const noexcept { return variable_count_; }

    Bdd bdd_false();
    Bdd bdd_true();
    /// The function that is true iff variable `index` is true.
    Bdd var(Var index);
    /// The function that is true iff variable `index` is false.
    Bdd nvar(Var index);
    /// Conjunction of literals: vars[k] takes the value of bit k of `bits`.
    Bdd cube(const VarSet& vars, std::uint64_t bits);
    /// Version of cube() for more than 64 variables.
    Bdd cube(const VarSet& vars, const std::vector<bool>& values);
    /// Characteristic function of a set of assignments. Bit k of every
    /// pattern is the value of vars[k]; vars must have at most 64 entries.
    Bdd from_minterms(const VarSet& vars, std::vector<std::uint64_t> patterns);

    Bdd apply(BinaryOp op, const Bdd& a, const Bdd& b);
    Bdd negate(const Bdd& a);
    Bdd ite(const Bdd& cond, const Bdd& then_bdd, const Bdd& else_bdd);
    Bdd exists(const Bdd& f, const VarSet& vars);
    Bdd forall(const Bdd& f, const VarSet& vars);
    /// exists vars. (a AND b), without building the conjunction.
    Bdd and_exists(const Bdd& a, const Bdd& b, const VarSet& vars);
    /// Substitutes mapping[k].second for mapping[k].first. The mapping must be
    /// injective and order preserving on its domain, and together with the
    /// identity on unmapped variables it must be strictly increasing on the
    /// support of f. Violations throw std::invalid_argument.
    Bdd rename(const Bdd& f, std::span<const std::pair<Var, Var>> mapping);

    /// Number of satisfying assignments over `over`; the support of f must
    /// be contained in `over`, which may hold at most 63 variables.
    std::uint64_t sat_count(const Bdd& f, const VarSet& over);
    /// Number of distinct internal nodes reachable from f.
    std::size_t node_count(const Bdd& f) const;
    VarSet support(const Bdd& f) const;
    /// Evaluates f under a total assignment indexed by variable.
    bool evaluate(const Bdd& f, const std::vector<bool>& assignment) const;
    /// Some path to TRUE as (variable, value) pairs; empty optional for FALSE.
    std::optional<std::vector<std::pair<Var, bool>>> pick_one(const Bdd& f) const;

    /// Top variable of a non-terminal node.
    Var top_var(const Bdd& f) const;
    Bdd low(const Bdd& f);
    Bdd high(const Bdd& f);

    std::string to_dot(const Bdd& f, const std::string& name = "bdd") const;

    std::size_t live_nodes() const noexcept;
    std::size_t peak_live_nodes() const noexcept { return peak_live_; }
    void reset_peak() noexcept { peak_live_ = live_nodes(); }
    std::optional<std::size_t> node_budget() const noexcept { return node_budget_; }
    void set_node_budget(std::optional<std::size_t> budget) noexcept { node_budget_ = budget; }
    std::size_t gc_runs() const noexcept { return gc_runs_; }
    /// Forces a collection; all nodes not reachable from a live handle are freed.
    void collect_garbage();

private:
    friend class Bdd;

    struct Node {
        Var var;
        std::uint32_t low;
        std::uint32_t high;
        std::uint32_t next;
    };
    struct CacheEntry {
        std::uint32_t op;
        std::uint32_t a;
        std::uint32_t b;
        std::uint32_t c;
        std::uint32_t result;
    };
    struct BudgetExceeded {};

    static constexpr Var kTerminalVar = 0xFFFFFFFFu;
    static constexpr Var kFreeVar = 0xFFFFFFFEu;
    static constexpr std::uint32_t kNil = 0;

    void add_ref(std::uint32_t node) noexcept { ++refs_[node]; }
    void release(std::uint32_t node) noexcept { --refs_[node]; }
    Bdd wrap(std::uint32_t node) { return Bdd(this, node); }
    void check_owner(const Bdd& f) const;
    void check_var(Var v) const;
    std::uint32_t cube_node(const VarSet& vars);

    template <class Fn>
    std::uint32_t run(Fn&& fn);

    std::uint32_t mk(Var var, std::uint32_t low, std::uint32_t high);
    std::uint32_t apply_rec(BinaryOp op, std::uint32_t a, std::uint32_t b);
    std::uint32_t not_rec(std::uint32_t a);
    std::uint32_t ite_rec(std::uint32_t f, std::uint32_t g, std::uint32_t h);
    std::uint32_t exists_rec(std::uint32_t f, std::uint32_t cube);
    std::uint32_t and_exists_rec(std::uint32_t a, std::uint32_t b, std::uint32_t cube);
    std::uint32_t minterms_rec(const std::vector<Var>& vars, std::size_t level,
                               std::span<const std::uint64_t> patterns);

    bool cache_lookup(std::uint32_t op, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                      std::uint32_t& result) const;
    void cache_insert(std::uint32_t op, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                      std::uint32_t result);
    void cache_clear();

    void rehash(std::size_t bucket_count);
    void maybe_collect();

    Var variable_count_;
    std::optional<std::size_t> node_budget_;
    std::size_t gc_threshold_;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> refs_;
    std::vector<std::uint32_t> free_list_;
    std::vector<std::uint32_t> buckets_;
    std::vector<CacheEntry> cache_;
    std::size_t cache_used_ = 0;
    std::size_t peak_live_ = 0;
    std::size_t gc_runs_ = 0;
};

}  // namespace pgsym
