#include "fairdex/reductions.hpp"

#include "fairdex/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fairdex {

Instance PlainInstance::to_instance() const
{
    Instance inst(agent_count, items);
    for (int i = 0; i < agent_count; ++i)
        for (int a = 0; a < static_cast<int>(items.size()); ++a)
            inst.set_value(i, i, a, of(i, a));
    return inst;
}

void CorrelatedSpec::validate() const
{
    const auto m = items.size();
    if (base_value.size() != static_cast<std::size_t>(agent_count) * m ||
        mu.size() != static_cast<std::size_t>(agent_count) * m ||
        tau.size() != static_cast<std::size_t>(agent_count) * agent_count)
        throw InputError("correlated spec has inconsistent table sizes");
    for (int i = 0; i < agent_count; ++i)
        for (int j = 0; j < agent_count; ++j)
            if (i != j && pair_coefficient(i, j) <= 0)
                throw InputError("correlated spec requires tau > 0 for every pair of distinct agents");
}

Instance two_valued_to_binary(const Instance& inst)
{
    const int n = inst.agent_count();
    const int m = inst.item_count();
    Instance binary(n, inst.item_ids());
    for (int i = 0; i < n; ++i) {
        std::set<Value> used;
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < m; ++a)
                used.insert(inst.value(i, j, a));
        if (used.size() > 2)
            throw InputError("agent " + std::to_string(i) + " uses " +
                std::to_string(used.size()) + " distinct values; two-valued input required");
        if (used.size() < 2)
            continue;    // a constant row shifts to all zeros
        const Value& low = *used.begin();
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < m; ++a)
                binary.set_value(i, j, a, inst.value(i, j, a) == low ? Value(0) : Value(1));
    }
    return binary;
}

PlainInstance correlated_to_plain(const CorrelatedSpec& spec)
{
    spec.validate();
    PlainInstance plain;
    plain.agent_count = spec.agent_count;
    plain.items = spec.items;
    plain.utility.reserve(spec.base_value.size());
    for (int i = 0; i < spec.agent_count; ++i)
        for (int a = 0; a < static_cast<int>(spec.items.size()); ++a)
            plain.utility.push_back(spec.item_coefficient(i, a) * spec.base(i, a));
    return plain;
}

Instance expand_correlated(const CorrelatedSpec& spec)
{
    spec.validate();
    Instance inst(spec.agent_count, spec.items);
    for (int i = 0; i < spec.agent_count; ++i)
        for (int a = 0; a < static_cast<int>(spec.items.size()); ++a) {
            inst.set_value(i, i, a, spec.base(i, a));
            for (int j = 0; j < spec.agent_count; ++j)
                if (j != i)
                    inst.set_value(i, j, a,
                        (1 - spec.pair_coefficient(i, j) * spec.item_coefficient(i, a)) * spec.base(i, a));
        }
    return inst;
}

CorrelatedSpec build_team_based(const TeamSpec& spec)
{
    if (spec.discount < 0 || spec.discount >= 1)
        throw InputError("team discount must satisfy 0 <= c < 1");
    if (static_cast<int>(spec.team_of.size()) != spec.agent_count)
        throw InputError("team spec needs one team label per agent");
    CorrelatedSpec out;
    out.agent_count = spec.agent_count;
    out.items = spec.items;
    out.base_value = spec.base_value;
    out.mu.assign(static_cast<std::size_t>(spec.agent_count) * spec.items.size(), Value(1));
    out.tau.assign(static_cast<std::size_t>(spec.agent_count) * spec.agent_count, Value(0));
    for (int i = 0; i < spec.agent_count; ++i)
        for (int j = 0; j < spec.agent_count; ++j)
            if (i != j)
                out.tau[static_cast<std::size_t>(i) * spec.agent_count + j] =
                    spec.team_of[static_cast<std::size_t>(i)] == spec.team_of[static_cast<std::size_t>(j)]
                        ? Value(1) - spec.discount
                        : Value(1);
    out.validate();
    return out;
}

CorrelatedSpec build_network_based(const NetworkSpec& spec, bool* negative_externalities)
{
    const int n = spec.agent_count;
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
    for (auto [u, v] : spec.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw InputError("network edge endpoints out of range");
        adjacent[static_cast<std::size_t>(u)].push_back(v);
        adjacent[static_cast<std::size_t>(v)].push_back(u);
    }

    // all-pairs hop distances by BFS from every agent
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
        std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[static_cast<std::size_t>(s)];
        d[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adjacent[static_cast<std::size_t>(u)])
                if (d[static_cast<std::size_t>(v)] == -1) {
                    d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
        }
        for (int t = 0; t < n; ++t)
            if (d[static_cast<std::size_t>(t)] == -1)
                throw InputError("network graph is disconnected; distances are undefined");
    }

    CorrelatedSpec out;
    out.agent_count = n;
    out.items = spec.items;
    out.base_value = spec.base_value;
    out.mu = spec.mu;
    out.tau.assign(static_cast<std::size_t>(n) * n, Value(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                out.tau[static_cast<std::size_t>(i) * n + j] = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    out.validate();

    if (negative_externalities) {
        *negative_externalities = false;
        for (int i = 0; i < n && ! *negative_externalities; ++i)
            for (int j = 0; j < n && ! *negative_externalities; ++j)
                for (int a = 0; a < static_cast<int>(spec.items.size()); ++a)
                    if (i != j && out.pair_coefficient(i, j) * out.item_coefficient(i, a) > 1) {
                        *negative_externalities = true;
                        break;
                    }
    }
    return out;
}

Allocation round_robin_ef1(const PlainInstance& plain)
{
    const int n = plain.agent_count;
    const int m = static_cast<int>(plain.items.size());
    if (n < 1 || plain.utility.size() != static_cast<std::size_t>(n) * m)
        throw InputError("malformed plain instance");
    for (const Value& u : plain.utility)
        if (u < 0)
            throw InputError("round robin requires nonnegative utilities");

    std::vector<int> owner(static_cast<std::size_t>(m), -1);
    std::vector<bool> taken(static_cast<std::size_t>(m), false);
    for (int turn = 0; turn < m; ++turn) {
        const int agent = turn % n;
        int pick = -1;
        for (int a = 0; a < m; ++a) {
            if (taken[static_cast<std::size_t>(a)])
                continue;
            if (pick == -1 || plain.of(agent, a) > plain.of(agent, pick))
                pick = a;
        }
        taken[static_cast<std::size_t>(pick)] = true;
        owner[static_cast<std::size_t>(pick)] = agent;
    }
    return Allocation(n, std::move(owner));
}

}
