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

#include "pgsym/bdd.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pgsym {

namespace {

enum CacheOp : std::uint32_t {
    kOpAnd = 1,
    kOpOr,
    kOpXor,
    kOpDiff,
    kOpNot,
    kOpIte,
    kOpExists,
    kOpAndExists,
};

inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

inline std::uint64_t node_hash(Var var, std::uint32_t low, std::uint32_t high) noexcept {
    return mix64((std::uint64_t{var} << 40) ^ (std::uint64_t{low} << 20) ^ high ^
                 (std::uint64_t{high} << 44));
}

inline std::uint64_t cache_hash(std::uint32_t op, std::uint32_t a, std::uint32_t b,
                                std::uint32_t c) noexcept {
    return mix64(mix64((std::uint64_t{op} << 32) | a) ^ ((std::uint64_t{b} << 32) | c));
}

std::size_t round_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

BddOutOfMemory::BddOutOfMemory(std::size_t budget)
    : std::runtime_error("BDD node budget of " + std::to_string(budget) + " nodes exhausted"),
      budget_(budget) {}

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::initializer_list<Var> vars) : VarSet(std::vector<Var>(vars)) {}

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 1; i < vars_.size(); ++i) {
        if (vars_[i - 1] >= vars_[i]) {
            throw std::invalid_argument("VarSet must be strictly ascending");
        }
    }
}

bool VarSet::contains(Var v) const noexcept {
    return std::binary_search(vars_.begin(), vars_.end(), v);
}

// ---------------------------------------------------------------------------
// Bdd handle

Bdd::Bdd(BddManager* manager, std::uint32_t node) noexcept : manager_(manager), node_(node) {
    manager_->add_ref(node_);
}

Bdd::Bdd(const Bdd& other) noexcept : manager_(other.manager_), node_(other.node_) {
    if (manager_) manager_->add_ref(node_);
}

Bdd::Bdd(Bdd&& other) noexcept : manager_(other.manager_), node_(other.node_) {
    other.manager_ = nullptr;
    other.node_ = 0;
}

Bdd& Bdd::operator=(const Bdd& other) noexcept {
    if (this != &other) {
        if (other.manager_) other.manager_->add_ref(other.node_);
        if (manager_) manager_->release(node_);
        manager_ = other.manager_;
        node_ = other.node_;
    }
    return *this;
}

Bdd& Bdd::operator=(Bdd&& other) noexcept {
    if (this != &other) {
        if (manager_) manager_->release(node_);
        manager_ = other.manager_;
        node_ = other.node_;
        other.manager_ = nullptr;
        other.node_ = 0;
    }
    return *this;
}

Bdd::~Bdd() {
    if (manager_) manager_->release(node_);
}

namespace {
BddManager& owner_of(const Bdd& f) {
    if (!f.bound()) throw std::invalid_argument("operation on an unbound Bdd");
    return *f.manager();
}
}  // namespace

Bdd Bdd::operator&(const Bdd& other) const { return owner_of(*this).apply(BinaryOp::And, *this, other); }
Bdd Bdd::operator|(const Bdd& other) const { return owner_of(*this).apply(BinaryOp::Or, *this, other); }
Bdd Bdd::operator^(const Bdd& other) const { return owner_of(*this).apply(BinaryOp::Xor, *this, other); }
Bdd Bdd::operator-(const Bdd& other) const { return owner_of(*this).apply(BinaryOp::Diff, *this, other); }
Bdd Bdd::operator~() const { return owner_of(*this).negate(*this); }

// ---------------------------------------------------------------------------
// Manager: storage

BddManager::BddManager(Var variable_count) : BddManager([variable_count] {
      Options o;
      o.variable_count = variable_count;
      return o;
  }()) {}

BddManager::BddManager(const Options& options)
    : variable_count_(options.variable_count),
      node_budget_(options.node_budget),
      gc_threshold_(std::max<std::size_t>(options.gc_threshold, 1024)) {
    if (variable_count_ >= kFreeVar) throw std::invalid_argument("too many variables");
    nodes_.reserve(1024);
    nodes_.push_back(Node{kTerminalVar, 0, 0, kNil});
    nodes_.push_back(Node{kTerminalVar, 1, 1, kNil});
    refs_.assign(2, 0);
    buckets_.assign(1024, kNil);
    cache_.assign(round_pow2(std::max<std::size_t>(options.cache_slots, 64)), CacheEntry{});
}

BddManager::~BddManager() = default;

std::size_t BddManager::live_nodes() const noexcept {
    return nodes_.size() - 2 - free_list_.size();
}

void BddManager::check_owner(const Bdd& f) const {
    if (f.manager_ != this) {
        throw std::invalid_argument(f.manager_ ? "Bdd belongs to a different manager"
                                               : "operation on an unbound Bdd");
    }
}

void BddManager::check_var(Var v) const {
    if (v >= variable_count_) {
        throw std::out_of_range("variable index " + std::to_string(v) + " out of range (" +
                                std::to_string(variable_count_) + " variables)");
    }
}

std::uint32_t BddManager::mk(Var var, std::uint32_t low, std::uint32_t high) {
    if (low == high) return low;
    const std::size_t mask = buckets_.size() - 1;
    std::uint32_t& head = buckets_[node_hash(var, low, high) & mask];
    for (std::uint32_t n = head; n != kNil; n = nodes_[n].next) {
        const Node& node = nodes_[n];
        if (node.var == var && node.low == low && node.high == high) return n;
    }
    if (node_budget_ && live_nodes() >= *node_budget_) throw BudgetExceeded{};
    std::uint32_t index;
    if (!free_list_.empty()) {
        index = free_list_.back();
        free_list_.pop_back();
        nodes_[index] = Node{var, low, high, head};
    } else {
        if (nodes_.size() >= 0xFFFFFFF0u) throw BddOutOfMemory(nodes_.size());
        index = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(Node{var, low, high, head});
        refs_.push_back(0);
    }
    head = index;
    const std::size_t live = live_nodes();
    peak_live_ = std::max(peak_live_, live);
    if (live > buckets_.size()) rehash(buckets_.size() * 2);
    return index;
}

void BddManager::rehash(std::size_t bucket_count) {
    buckets_.assign(bucket_count, kNil);
    const std::size_t mask = bucket_count - 1;
    for (std::uint32_t n = 2; n < nodes_.size(); ++n) {
        Node& node = nodes_[n];
        if (node.var == kFreeVar) continue;
        std::uint32_t& head = buckets_[node_hash(node.var, node.low, node.high) & mask];
        node.next = head;
        head = n;
    }
}

void BddManager::collect_garbage() {
    std::vector<char> marked(nodes_.size(), 0);
    marked[0] = marked[1] = 1;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t n = 2; n < nodes_.size(); ++n) {
        if (refs_[n] > 0 && nodes_[n].var != kFreeVar) stack.push_back(n);
    }
    while (!stack.empty()) {
        const std::uint32_t n = stack.back();
        stack.pop_back();
        if (marked[n]) continue;
        marked[n] = 1;
        stack.push_back(nodes_[n].low);
        stack.push_back(nodes_[n].high);
    }
    free_list_.clear();
    // Highest index first, so that allocation reuses low indices first.
    for (std::uint32_t n = static_cast<std::uint32_t>(nodes_.size()); n-- > 2;) {
        if (!marked[n]) {
            nodes_[n] = Node{kFreeVar, 0, 0, kNil};
            free_list_.push_back(n);
        }
    }
    rehash(buckets_.size());
    cache_clear();
    ++gc_runs_;
}

void BddManager::maybe_collect() {
    if (live_nodes() <= gc_threshold_) return;
    collect_garbage();
    if (live_nodes() * 2 > gc_threshold_) gc_threshold_ *= 2;
}

template <class Fn>
std::uint32_t BddManager::run(Fn&& fn) {
    maybe_collect();
    try {
        return fn();
    } catch (const BudgetExceeded&) {
    }
    collect_garbage();
    try {
        return fn();
    } catch (const BudgetExceeded&) {
        throw BddOutOfMemory(node_budget_.value_or(0));
    }
}

// ---------------------------------------------------------------------------
// Operation cache

bool BddManager::cache_lookup(std::uint32_t op, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c, std::uint32_t& result) const {
    const std::size_t mask = cache_.size() - 1;
    for (std::size_t i = cache_hash(op, a, b, c) & mask;; i = (i + 1) & mask) {
        const CacheEntry& e = cache_[i];
        if (e.op == 0) return false;
        if (e.op == op && e.a == a && e.b == b && e.c == c) {
            result = e.result;
            return true;
        }
    }
}

void BddManager::cache_insert(std::uint32_t op, std::uint32_t a, std::uint32_t b,
                              std::uint32_t c, std::uint32_t result) {
    if (2 * (cache_used_ + 1) > cache_.size()) cache_clear();
    const std::size_t mask = cache_.size() - 1;
    for (std::size_t i = cache_hash(op, a, b, c) & mask;; i = (i + 1) & mask) {
        CacheEntry& e = cache_[i];
        if (e.op == 0) {
            e = CacheEntry{op, a, b, c, result};
            ++cache_used_;
            return;
        }
        if (e.op == op && e.a == a && e.b == b && e.c == c) {
            e.result = result;
            return;
        }
    }
}

void BddManager::cache_clear() {
    std::fill(cache_.begin(), cache_.end(), CacheEntry{});
    cache_used_ = 0;
}

// ---------------------------------------------------------------------------
// Constructors of functions

Bdd BddManager::bdd_false() { return wrap(0); }
Bdd BddManager::bdd_true() { return wrap(1); }

Bdd BddManager::var(Var index) {
    check_var(index);
    return wrap(run([&] { return mk(index, 0, 1); }));
}

Bdd BddManager::nvar(Var index) {
    check_var(index);
    return wrap(run([&] { return mk(index, 1, 0); }));
}

Bdd BddManager::cube(const VarSet& vars, std::uint64_t bits) {
    if (vars.size() > 64) throw std::invalid_argument("cube: more than 64 variables");
    std::vector<bool> values(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) values[k] = (bits >> k) & 1u;
    return cube(vars, values);
}

Bdd BddManager::cube(const VarSet& vars, const std::vector<bool>& values) {
    if (values.size() != vars.size()) throw std::invalid_argument("cube: size mismatch");
    for (Var v : vars) check_var(v);
    return wrap(run([&] {
        std::uint32_t r = 1;
        for (std::size_t k = vars.size(); k-- > 0;) {
            r = values[k] ? mk(vars.vars()[k], 0, r) : mk(vars.vars()[k], r, 0);
        }
        return r;
    }));
}

std::uint32_t BddManager::cube_node(const VarSet& vars) {
    std::uint32_t r = 1;
    for (std::size_t k = vars.size(); k-- > 0;) r = mk(vars.vars()[k], 0, r);
    return r;
}

std::uint32_t BddManager::minterms_rec(const std::vector<Var>& vars, std::size_t level,
                                       std::span<const std::uint64_t> patterns) {
    if (patterns.empty()) return 0;
    if (level == vars.size()) return 1;
    // Patterns are sorted with bit `level` as the most significant remaining key.
    const auto split = std::partition_point(patterns.begin(), patterns.end(),
                                            [&](std::uint64_t p) { return ((p >> level) & 1u) == 0; });
    const auto offset = static_cast<std::size_t>(split - patterns.begin());
    const std::uint32_t lo = minterms_rec(vars, level + 1, patterns.first(offset));
    const std::uint32_t hi = minterms_rec(vars, level + 1, patterns.subspan(offset));
    return mk(vars[level], lo, hi);
}

Bdd BddManager::from_minterms(const VarSet& vars, std::vector<std::uint64_t> patterns) {
    const std::size_t width = vars.size();
    if (width > 64) throw std::invalid_argument("from_minterms: more than 64 variables");
    for (Var v : vars) check_var(v);
    if (width < 64) {
        for (std::uint64_t p : patterns) {
            if (p >> width) throw std::invalid_argument("from_minterms: pattern wider than VarSet");
        }
    }
    auto reversed = [width](std::uint64_t p) {
        std::uint64_t r = 0;
        for (std::size_t k = 0; k < width; ++k) r = (r << 1) | ((p >> k) & 1u);
        return r;
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed;
    keyed.reserve(patterns.size());
    for (std::uint64_t p : patterns) keyed.emplace_back(reversed(p), p);
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
    patterns.clear();
    for (const auto& kp : keyed) patterns.push_back(kp.second);
    return wrap(run([&] { return minterms_rec(vars.vars(), 0, patterns); }));
}

// ---------------------------------------------------------------------------
// Boolean operations

std::uint32_t BddManager::not_rec(std::uint32_t a) {
    if (a < 2) return a ^ 1u;
    std::uint32_t r;
    if (cache_lookup(kOpNot, a, 0, 0, r)) return r;
    const Node n = nodes_[a];
    r = mk(n.var, not_rec(n.low), not_rec(n.high));
    cache_insert(kOpNot, a, 0, 0, r);
    return r;
}

std::uint32_t BddManager::apply_rec(BinaryOp op, std::uint32_t a, std::uint32_t b) {
    switch (op) {
    case BinaryOp::And:
        if (a == 0 || b == 0) return 0;
        if (a == 1) return b;
        if (b == 1 || a == b) return a;
        if (a > b) std::swap(a, b);
        break;
    case BinaryOp::Or:
        if (a == 1 || b == 1) return 1;
        if (a == 0) return b;
        if (b == 0 || a == b) return a;
        if (a > b) std::swap(a, b);
        break;
    case BinaryOp::Xor:
        if (a == b) return 0;
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == 1) return not_rec(b);
        if (b == 1) return not_rec(a);
        if (a > b) std::swap(a, b);
        break;
    case BinaryOp::Diff:
        if (a == 0 || b == 1 || a == b) return 0;
        if (b == 0) return a;
        if (a == 1) return not_rec(b);
        break;
    }
    const std::uint32_t opcode = kOpAnd + static_cast<std::uint32_t>(op);
    std::uint32_t r;
    if (cache_lookup(opcode, a, b, 0, r)) return r;
    const Node na = nodes_[a];
    const Node nb = nodes_[b];
    const Var v = std::min(na.var, nb.var);
    const std::uint32_t a0 = na.var == v ? na.low : a;
    const std::uint32_t a1 = na.var == v ? na.high : a;
    const std::uint32_t b0 = nb.var == v ? nb.low : b;
    const std::uint32_t b1 = nb.var == v ? nb.high : b;
    const std::uint32_t lo = apply_rec(op, a0, b0);
    const std::uint32_t hi = apply_rec(op, a1, b1);
    r = mk(v, lo, hi);
    cache_insert(opcode, a, b, 0, r);
    return r;
}

std::uint32_t BddManager::ite_rec(std::uint32_t f, std::uint32_t g, std::uint32_t h) {
    if (f == 1) return g;
    if (f == 0) return h;
    if (g == h) return g;
    if (g == 1 && h == 0) return f;
    if (g == 0 && h == 1) return not_rec(f);
    std::uint32_t r;
    if (cache_lookup(kOpIte, f, g, h, r)) return r;
    const Var v = std::min({nodes_[f].var, nodes_[g].var, nodes_[h].var});
    auto cof = [&](std::uint32_t x, bool hi) {
        const Node& n = nodes_[x];
        if (n.var != v) return x;
        return hi ? n.high : n.low;
    };
    const std::uint32_t lo = ite_rec(cof(f, false), cof(g, false), cof(h, false));
    const std::uint32_t hi = ite_rec(cof(f, true), cof(g, true), cof(h, true));
    r = mk(v, lo, hi);
    cache_insert(kOpIte, f, g, h, r);
    return r;
}

std::uint32_t BddManager::exists_rec(std::uint32_t f, std::uint32_t cube) {
    if (f < 2) return f;
    const Var v = nodes_[f].var;
    while (cube != 1 && nodes_[cube].var < v) cube = nodes_[cube].high;
    if (cube == 1) return f;
    std::uint32_t r;
    if (cache_lookup(kOpExists, f, cube, 0, r)) return r;
    const Node n = nodes_[f];
    if (n.var == nodes_[cube].var) {
        const std::uint32_t rest = nodes_[cube].high;
        const std::uint32_t lo = exists_rec(n.low, rest);
        r = lo == 1 ? 1 : apply_rec(BinaryOp::Or, lo, exists_rec(n.high, rest));
    } else {
        const std::uint32_t lo = exists_rec(n.low, cube);
        const std::uint32_t hi = exists_rec(n.high, cube);
        r = mk(n.var, lo, hi);
    }
    cache_insert(kOpExists, f, cube, 0, r);
    return r;
}

std::uint32_t BddManager::and_exists_rec(std::uint32_t a, std::uint32_t b, std::uint32_t cube) {
    if (a == 0 || b == 0) return 0;
    if (a == 1 && b == 1) return 1;
    if (cube == 1) return apply_rec(BinaryOp::And, a, b);
    if (a == 1 || a == b) return exists_rec(b, cube);
    if (b == 1) return exists_rec(a, cube);
    if (a > b) std::swap(a, b);
    const Node na = nodes_[a];
    const Node nb = nodes_[b];
    const Var v = std::min(na.var, nb.var);
    while (cube != 1 && nodes_[cube].var < v) cube = nodes_[cube].high;
    if (cube == 1) return apply_rec(BinaryOp::And, a, b);
    std::uint32_t r;
    if (cache_lookup(kOpAndExists, a, b, cube, r)) return r;
    const std::uint32_t a0 = na.var == v ? na.low : a;
    const std::uint32_t a1 = na.var == v ? na.high : a;
    const std::uint32_t b0 = nb.var == v ? nb.low : b;
    const std::uint32_t b1 = nb.var == v ? nb.high : b;
    if (nodes_[cube].var == v) {
        const std::uint32_t rest = nodes_[cube].high;
        const std::uint32_t lo = and_exists_rec(a0, b0, rest);
        r = lo == 1 ? 1 : apply_rec(BinaryOp::Or, lo, and_exists_rec(a1, b1, rest));
    } else {
        const std::uint32_t lo = and_exists_rec(a0, b0, cube);
        const std::uint32_t hi = and_exists_rec(a1, b1, cube);
        r = mk(v, lo, hi);
    }
    cache_insert(kOpAndExists, a, b, cube, r);
    return r;
}

Bdd BddManager::apply(BinaryOp op, const Bdd& a, const Bdd& b) {
    check_owner(a);
    check_owner(b);
    return wrap(run([&] { return apply_rec(op, a.node_, b.node_); }));
}

Bdd BddManager::negate(const Bdd& a) {
    check_owner(a);
    return wrap(run([&] { return not_rec(a.node_); }));
}

Bdd BddManager::ite(const Bdd& cond, const Bdd& then_bdd, const Bdd& else_bdd) {
    check_owner(cond);
    check_owner(then_bdd);
    check_owner(else_bdd);
    return wrap(run([&] { return ite_rec(cond.node_, then_bdd.node_, else_bdd.node_); }));
}

Bdd BddManager::exists(const Bdd& f, const VarSet& vars) {
    check_owner(f);
    for (Var v : vars) check_var(v);
    if (vars.empty()) return f;
    return wrap(run([&] { return exists_rec(f.node_, cube_node(vars)); }));
}

Bdd BddManager::forall(const Bdd& f, const VarSet& vars) {
    check_owner(f);
    for (Var v : vars) check_var(v);
    if (vars.empty()) return f;
    return wrap(run([&] { return not_rec(exists_rec(not_rec(f.node_), cube_node(vars))); }));
}

Bdd BddManager::and_exists(const Bdd& a, const Bdd& b, const VarSet& vars) {
    check_owner(a);
    check_owner(b);
    for (Var v : vars) check_var(v);
    return wrap(run([&] { return and_exists_rec(a.node_, b.node_, cube_node(vars)); }));
}

Bdd BddManager::rename(const Bdd& f, std::span<const std::pair<Var, Var>> mapping) {
    check_owner(f);
    std::vector<std::pair<Var, Var>> sorted(mapping.begin(), mapping.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        check_var(sorted[i].first);
        check_var(sorted[i].second);
        if (i > 0 && sorted[i - 1].first == sorted[i].first) {
            throw std::invalid_argument("rename: variable mapped twice");
        }
        if (i > 0 && sorted[i - 1].second >= sorted[i].second) {
            throw std::invalid_argument("rename: mapping is not order preserving");
        }
    }
    auto image = [&](Var v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair<Var, Var>{v, 0});
        return it != sorted.end() && it->first == v ? it->second : v;
    };
    const VarSet supp = support(f);
    for (std::size_t i = 1; i < supp.size(); ++i) {
        if (image(supp.vars()[i - 1]) >= image(supp.vars()[i])) {
            throw std::invalid_argument("rename: mapping does not preserve the order on the support");
        }
    }
    return wrap(run([&] {
        std::unordered_map<std::uint32_t, std::uint32_t> memo;
        auto rec = [&](auto& self, std::uint32_t n) -> std::uint32_t {
            if (n < 2) return n;
            if (auto it = memo.find(n); it != memo.end()) return it->second;
            const Node node = nodes_[n];
            const std::uint32_t lo = self(self, node.low);
            const std::uint32_t hi = self(self, node.high);
            const std::uint32_t r = mk(image(node.var), lo, hi);
            memo.emplace(n, r);
            return r;
        };
        return rec(rec, f.node_);
    }));
}

// ---------------------------------------------------------------------------
// Queries

std::uint64_t BddManager::sat_count(const Bdd& f, const VarSet& over) {
    check_owner(f);
    if (over.size() > 63) throw std::invalid_argument("sat_count: more than 63 variables");
    const VarSet supp = support(f);
    for (Var v : supp) {
        if (!over.contains(v)) {
            throw std::invalid_argument("sat_count: variable " + std::to_string(v) +
                                        " of the support is not counted over");
        }
    }
    const auto& vs = over.vars();
    auto position = [&](std::uint32_t n) -> std::size_t {
        if (n < 2) return vs.size();
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), nodes_[n].var) - vs.begin());
    };
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    auto rec = [&](auto& self, std::uint32_t n) -> std::uint64_t {
        if (n < 2) return n;
        if (auto it = memo.find(n); it != memo.end()) return it->second;
        const Node node = nodes_[n];
        const std::size_t p = position(n);
        const std::uint64_t lo = self(self, node.low) << (position(node.low) - p - 1);
        const std::uint64_t hi = self(self, node.high) << (position(node.high) - p - 1);
        const std::uint64_t r = lo + hi;
        memo.emplace(n, r);
        return r;
    };
    return rec(rec, f.node_) << position(f.node_);
}

std::size_t BddManager::node_count(const Bdd& f) const {
    check_owner(f);
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> stack{f.node_};
    while (!stack.empty()) {
        const std::uint32_t n = stack.back();
        stack.pop_back();
        if (n < 2 || !seen.insert(n).second) continue;
        stack.push_back(nodes_[n].low);
        stack.push_back(nodes_[n].high);
    }
    return seen.size();
}

VarSet BddManager::support(const Bdd& f) const {
    check_owner(f);
    std::unordered_set<std::uint32_t> seen;
    std::vector<Var> vars;
    std::vector<std::uint32_t> stack{f.node_};
    while (!stack.empty()) {
        const std::uint32_t n = stack.back();
        stack.pop_back();
        if (n < 2 || !seen.insert(n).second) continue;
        vars.push_back(nodes_[n].var);
        stack.push_back(nodes_[n].low);
        stack.push_back(nodes_[n].high);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return VarSet(std::move(vars));
}

bool BddManager::evaluate(const Bdd& f, const std::vector<bool>& assignment) const {
    check_owner(f);
    std::uint32_t n = f.node_;
    while (n >= 2) {
        const Node& node = nodes_[n];
        if (node.var >= assignment.size()) throw std::invalid_argument("evaluate: assignment too short");
        n = assignment[node.var] ? node.high : node.low;
    }
    return n == 1;
}

std::optional<std::vector<std::pair<Var, bool>>> BddManager::pick_one(const Bdd& f) const {
    check_owner(f);
    if (f.node_ == 0) return std::nullopt;
    std::vector<std::pair<Var, bool>> path;
    std::uint32_t n = f.node_;
    while (n >= 2) {
        const Node& node = nodes_[n];
        if (node.low != 0) {
            path.emplace_back(node.var, false);
            n = node.low;
        } else {
            path.emplace_back(node.var, true);
            n = node.high;
        }
    }
    return path;
}

Var BddManager::top_var(const Bdd& f) const {
    check_owner(f);
    if (f.is_terminal()) throw std::invalid_argument("top_var of a terminal");
    return nodes_[f.node_].var;
}

Bdd BddManager::low(const Bdd& f) {
    check_owner(f);
    return f.is_terminal() ? f : wrap(nodes_[f.node_].low);
}

Bdd BddManager::high(const Bdd& f) {
    check_owner(f);
    return f.is_terminal() ? f : wrap(nodes_[f.node_].high);
}

std::string BddManager::to_dot(const Bdd& f, const std::string& name) const {
    check_owner(f);
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  n0 [shape=box,label=\"0\"];\n  n1 [shape=box,label=\"1\"];\n";
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> stack{f.node_};
    while (!stack.empty()) {
        const std::uint32_t n = stack.back();
        stack.pop_back();
        if (n < 2 || !seen.insert(n).second) continue;
        order.push_back(n);
        stack.push_back(nodes_[n].high);
        stack.push_back(nodes_[n].low);
    }
    std::sort(order.begin(), order.end());
    for (std::uint32_t n : order) {
        const Node& node = nodes_[n];
        out << "  n" << n << " [label=\"x" << node.var << "\"];\n";
        out << "  n" << n << " -> n" << node.low << " [style=dashed];\n";
        out << "  n" << n << " -> n" << node.high << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace pgsym
