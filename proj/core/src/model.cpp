#include "fairdex/model.hpp"

#include "fairdex/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fairdex {

namespace {

void require(bool condition, const std::string& message)
{
    if (! condition)
        throw InputError(message);
}

void check_pair(const Instance& inst, const Allocation& alloc, int i, int j)
{
    require(alloc.agent_count() == inst.agent_count() && alloc.item_count() == inst.item_count(),
        "allocation does not match the instance");
    require(i >= 0 && i < inst.agent_count() && j >= 0 && j < inst.agent_count(),
        "agent index out of range");
    require(i != j, "envy is defined for distinct agents only");
}

}

Instance::Instance(int agent_count, std::vector<std::string> item_ids) :
    agents_(agent_count),
    items_(std::move(item_ids))
{
    require(agents_ >= 1, "an instance needs at least one agent");
    for (int a = 0; a < item_count(); ++a) {
        auto [_, inserted] = index_.emplace(items_[static_cast<std::size_t>(a)], a);
        require(inserted, "duplicate item identifier '" + items_[static_cast<std::size_t>(a)] + "'");
    }
    tensor_.assign(static_cast<std::size_t>(agents_) * agents_ * items_.size(), Value(0));
}

std::size_t Instance::offset(int evaluator, int owner, int item) const
{
    require(evaluator >= 0 && evaluator < agents_ && owner >= 0 && owner < agents_,
        "agent index out of range");
    require(item >= 0 && item < item_count(), "item index out of range");
    return (static_cast<std::size_t>(evaluator) * agents_ + owner) * items_.size() + item;
}

std::optional<int> Instance::find_item(const std::string& id) const
{
    auto it = index_.find(id);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int Instance::item_index(const std::string& id) const
{
    auto found = find_item(id);
    require(found.has_value(), "unknown item '" + id + "'");
    return *found;
}

void Instance::set_value(int evaluator, int owner, int item, Value v)
{
    tensor_[offset(evaluator, owner, item)] = std::move(v);
}

bool Instance::operator==(const Instance& other) const
{
    return agents_ == other.agents_ && items_ == other.items_ && tensor_ == other.tensor_;
}

Allocation::Allocation(int agent_count, std::vector<int> owner_by_item) :
    agents_(agent_count),
    owner_(std::move(owner_by_item)),
    bundles_(static_cast<std::size_t>(agent_count))
{
    require(agents_ >= 1, "an allocation needs at least one agent");
    for (int a = 0; a < item_count(); ++a) {
        int who = owner_[static_cast<std::size_t>(a)];
        require(who >= 0 && who < agents_, "item owner out of range");
        bundles_[static_cast<std::size_t>(who)].push_back(a);
    }
}

Allocation Allocation::from_bundles(int agent_count, int item_count,
    const std::vector<std::vector<int>>& bundles)
{
    require(static_cast<int>(bundles.size()) == agent_count, "one bundle per agent required");
    std::vector<int> owner(static_cast<std::size_t>(item_count), -1);
    for (int who = 0; who < agent_count; ++who)
        for (int item : bundles[static_cast<std::size_t>(who)]) {
            require(item >= 0 && item < item_count, "item index out of range");
            require(owner[static_cast<std::size_t>(item)] == -1, "item allocated twice");
            owner[static_cast<std::size_t>(item)] = who;
        }
    for (int item = 0; item < item_count; ++item)
        require(owner[static_cast<std::size_t>(item)] != -1, "item left unallocated");
    return Allocation(agent_count, std::move(owner));
}

Value value_of_allocation(const Instance& inst, const Allocation& alloc, int agent)
{
    require(alloc.agent_count() == inst.agent_count() && alloc.item_count() == inst.item_count(),
        "allocation does not match the instance");
    require(agent >= 0 && agent < inst.agent_count(), "agent index out of range");
    Value total = 0;
    for (int a = 0; a < inst.item_count(); ++a)
        total += inst.value(agent, alloc.owner(a), a);
    return total;
}

EnvyGap envy_gap(const Instance& inst, const Allocation& alloc, int i, int j)
{
    check_pair(inst, alloc, i, j);
    Value gap = 0;
    for (int a : alloc.bundle(j))
        gap += inst.value(i, i, a) - inst.value(i, j, a);
    for (int a : alloc.bundle(i))
        gap += inst.value(i, j, a) - inst.value(i, i, a);
    return EnvyGap{i, j, std::move(gap)};
}

DeltaTable delta_table(const Instance& inst, const Allocation& alloc, int i, int j)
{
    check_pair(inst, alloc, i, j);
    DeltaTable table{i, j, std::vector<Value>(static_cast<std::size_t>(inst.item_count()), Value(0))};
    for (int a : alloc.bundle(j))
        table.delta[static_cast<std::size_t>(a)] = inst.value(i, i, a) - inst.value(i, j, a);
    for (int a : alloc.bundle(i))
        table.delta[static_cast<std::size_t>(a)] = inst.value(i, j, a) - inst.value(i, i, a);
    return table;
}

ItemTypePartition item_types(const Instance& inst)
{
    const int n = inst.agent_count();
    ItemTypePartition partition;
    partition.type_by_item.assign(static_cast<std::size_t>(inst.item_count()), -1);
    std::map<std::vector<Value>, int> seen;
    for (int a = 0; a < inst.item_count(); ++a) {
        std::vector<Value> signature;
        signature.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                signature.push_back(inst.value(i, j, a));
        auto [it, inserted] = seen.emplace(signature, partition.type_count());
        if (inserted)
            partition.types.push_back(ItemType{std::move(signature), {}});
        partition.types[static_cast<std::size_t>(it->second)].members.push_back(a);
        partition.type_by_item[static_cast<std::size_t>(a)] = it->second;
    }
    return partition;
}

int distinct_value_count(const Instance& inst)
{
    std::set<Value> values;
    for (int i = 0; i < inst.agent_count(); ++i)
        for (int j = 0; j < inst.agent_count(); ++j)
            for (int a = 0; a < inst.item_count(); ++a)
                values.insert(inst.value(i, j, a));
    return static_cast<int>(values.size());
}

ChoreTable classify_chores(const Instance& inst)
{
    const int n = inst.agent_count();
    const int m = inst.item_count();
    ChoreTable table{n, m, std::vector<ChoreClass>(static_cast<std::size_t>(n) * m, ChoreClass::None)};
    if (n < 2)
        return table;    // no other agent to prefer; classification degenerates to none
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a) {
            const Value& own = inst.value(i, i, a);
            bool weakly_dominated = true;
            bool some_strict = false;
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                const Value& other = inst.value(i, j, a);
                if (own > other)
                    weakly_dominated = false;
                if (own < other)
                    some_strict = true;
            }
            auto& entry = table.entries[static_cast<std::size_t>(i) * m + a];
            if (weakly_dominated && some_strict)
                entry = ChoreClass::Strong;
            else if (some_strict)
                entry = ChoreClass::Weak;
        }
    return table;
}

bool ChoreTable::any_weak_chore() const
{
    return std::any_of(entries.begin(), entries.end(),
        [](ChoreClass c) { return c != ChoreClass::None; });
}

Instance normalize(const Instance& inst)
{
    Instance result(inst.agent_count(), inst.item_ids());
    for (int i = 0; i < inst.agent_count(); ++i)
        for (int a = 0; a < inst.item_count(); ++a) {
            Value shift = inst.value(i, 0, a);
            for (int j = 1; j < inst.agent_count(); ++j)
                shift = std::min(shift, inst.value(i, j, a));
            for (int j = 0; j < inst.agent_count(); ++j)
                result.set_value(i, j, a, inst.value(i, j, a) - shift);
        }
    return result;
}

std::optional<std::uint64_t> allocation_count(int agent_count, int item_count)
{
    std::uint64_t count = 1;
    const auto n = static_cast<std::uint64_t>(agent_count);
    for (int a = 0; a < item_count; ++a) {
        if (count > std::numeric_limits<std::uint64_t>::max() / n)
            return std::nullopt;
        count *= n;
    }
    return count;
}

std::uint64_t for_each_allocation(int agent_count, int item_count, std::uint64_t budget,
    const std::function<bool(const Allocation&)>& visit)
{
    auto total = allocation_count(agent_count, item_count);
    if (! total || *total > budget)
        throw BudgetError("allocation space " + std::to_string(agent_count) + "^" +
            std::to_string(item_count) + " exceeds the budget of " + std::to_string(budget));

    std::vector<int> owner(static_cast<std::size_t>(item_count), 0);
    std::uint64_t visited = 0;
    while (true) {
        ++visited;
        if (! visit(Allocation(agent_count, owner)))
            return visited;
        int pos = item_count - 1;
        while (pos >= 0 && owner[static_cast<std::size_t>(pos)] == agent_count - 1)
            owner[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            return visited;
        ++owner[static_cast<std::size_t>(pos)];
    }
}

}
