#pragma once

#include "fairdex/value.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fairdex {

// An instance of fair division with additive externalities: n agents, m
// items, and the full tensor V_i(j, a) = value agent i derives when item a
// is held by agent j. Immutable once built; safe to share across workers.
class Instance {
public:
    Instance(int agent_count, std::vector<std::string> item_ids);

    int agent_count() const { return agents_; }
    int item_count() const { return static_cast<int>(items_.size()); }

    const std::vector<std::string>& item_ids() const { return items_; }
    const std::string& item_id(int item) const { return items_[static_cast<std::size_t>(item)]; }
    std::optional<int> find_item(const std::string& id) const;
    int item_index(const std::string& id) const;

    const Value& value(int evaluator, int owner, int item) const
    {
        return tensor_[offset(evaluator, owner, item)];
    }
    void set_value(int evaluator, int owner, int item, Value v);

    bool operator==(const Instance& other) const;

private:
    std::size_t offset(int evaluator, int owner, int item) const;

    int agents_;
    std::vector<std::string> items_;
    std::unordered_map<std::string, int> index_;
    std::vector<Value> tensor_;
};

// A partition of the items into per-agent bundles; stored as the owner of
// each item, with bundles derived. The partition property holds by
// construction.
class Allocation {
public:
    Allocation(int agent_count, std::vector<int> owner_by_item);
    static Allocation from_bundles(int agent_count, int item_count,
        const std::vector<std::vector<int>>& bundles);

    int agent_count() const { return agents_; }
    int item_count() const { return static_cast<int>(owner_.size()); }

    int owner(int item) const { return owner_[static_cast<std::size_t>(item)]; }
    const std::vector<int>& owners() const { return owner_; }
    const std::vector<int>& bundle(int agent) const { return bundles_[static_cast<std::size_t>(agent)]; }
    const std::vector<std::vector<int>>& bundles() const { return bundles_; }

    bool operator==(const Allocation& other) const
    {
        return agents_ == other.agents_ && owner_ == other.owner_;
    }

private:
    int agents_;
    std::vector<int> owner_;
    std::vector<std::vector<int>> bundles_;
};

// V_i(pi) = sum over items of V_i(owner(a), a).
Value value_of_allocation(const Instance& inst, const Allocation& alloc, int agent);

// gap = V_i(pi with bundles of i and j swapped) - V_i(pi); positive means
// agent i envies agent j.
struct EnvyGap {
    int agent = 0;
    int other = 0;
    Value gap;
};
EnvyGap envy_gap(const Instance& inst, const Allocation& alloc, int i, int j);

// Per-item removal effects for an ordered pair: deleting item a everywhere
// turns the envy gap into gap - delta[a]. Items held by third agents have
// delta zero (their removal shifts both sides of the comparison equally).
struct DeltaTable {
    int agent = 0;
    int other = 0;
    std::vector<Value> delta;

    const Value& of(int item) const { return delta[static_cast<std::size_t>(item)]; }
};
DeltaTable delta_table(const Instance& inst, const Allocation& alloc, int i, int j);

// Items grouped by their full valuation signature (V_1(1,a), ..., V_n(n,a));
// two items of the same type are indistinguishable to every agent.
struct ItemType {
    std::vector<Value> signature;
    std::vector<int> members;
};

struct ItemTypePartition {
    std::vector<ItemType> types;   // ordered by first member item
    std::vector<int> type_by_item;

    int type_count() const { return static_cast<int>(types.size()); }
    int multiplicity(int type) const { return static_cast<int>(types[static_cast<std::size_t>(type)].members.size()); }
};
ItemTypePartition item_types(const Instance& inst);

// Number of distinct values appearing anywhere in the tensor.
int distinct_value_count(const Instance& inst);

// Strong-chore: every other owner is at least as good for the evaluating
// agent, some strictly better. Weak-chore: some other owner is strictly
// better. Strong implies weak.
enum class ChoreClass { None, Weak, Strong };

struct ChoreTable {
    int agent_count = 0;
    int item_count = 0;
    std::vector<ChoreClass> entries;    // agent-major

    ChoreClass at(int agent, int item) const
    {
        return entries[static_cast<std::size_t>(agent) * item_count + item];
    }
    bool any_weak_chore() const;
};
ChoreTable classify_chores(const Instance& inst);

// Shifts every V_i(j, a) by -min_j V_i(j, a), making all values nonnegative
// with a zero owner per (agent, item). Swap differences, and hence all
// fairness verdicts, are unchanged.
Instance normalize(const Instance& inst);

// n^m when it fits into 64 bits.
std::optional<std::uint64_t> allocation_count(int agent_count, int item_count);

inline constexpr std::uint64_t default_allocation_budget = 10'000'000;

// Visits every allocation in lexicographic order of the owner vector.
// `visit` returns false to stop early. Throws BudgetError when the total
// number of allocations exceeds `budget`. Returns the number visited.
std::uint64_t for_each_allocation(int agent_count, int item_count, std::uint64_t budget,
    const std::function<bool(const Allocation&)>& visit);

}
