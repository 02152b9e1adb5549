#include "fairdex/welfare.hpp"

#include "fairdex/errors.hpp"
#include "fairdex/fairness.hpp"

#include <algorithm>

namespace fairdex {

WelfareReport welfare_report(const Instance& inst, const Allocation& alloc)
{
    WelfareReport report;
    report.utilitarian = 0;
    report.per_agent.reserve(static_cast<std::size_t>(inst.agent_count()));
    bool nonnegative = true;
    for (int i = 0; i < inst.agent_count(); ++i) {
        report.per_agent.push_back(value_of_allocation(inst, alloc, i));
        report.utilitarian += report.per_agent.back();
        if (report.per_agent.back() < 0)
            nonnegative = false;
    }
    if (nonnegative) {
        Value product = 1;
        for (const Value& u : report.per_agent)
            product *= u;
        report.nash = std::move(product);
    }
    return report;
}

Allocation msw_po_greedy(const Instance& inst)
{
    std::vector<int> owner(static_cast<std::size_t>(inst.item_count()), 0);
    for (int a = 0; a < inst.item_count(); ++a) {
        int best = 0;
        Value best_sum;
        for (int j = 0; j < inst.agent_count(); ++j) {
            Value column = 0;
            for (int i = 0; i < inst.agent_count(); ++i)
                column += inst.value(i, j, a);
            if (j == 0 || column > best_sum) {
                best = j;
                best_sum = std::move(column);
            }
        }
        owner[static_cast<std::size_t>(a)] = best;
    }
    return Allocation(inst.agent_count(), std::move(owner));
}

bool is_pareto_optimal(const Instance& inst, const Allocation& alloc, std::uint64_t budget)
{
    std::vector<Value> baseline;
    for (int i = 0; i < inst.agent_count(); ++i)
        baseline.push_back(value_of_allocation(inst, alloc, i));

    bool dominated = false;
    for_each_allocation(inst.agent_count(), inst.item_count(), budget, [&](const Allocation& other) {
        bool weakly_better = true;
        bool strictly_better = false;
        for (int i = 0; i < inst.agent_count() && weakly_better; ++i) {
            Value u = value_of_allocation(inst, other, i);
            if (u < baseline[static_cast<std::size_t>(i)])
                weakly_better = false;
            else if (u > baseline[static_cast<std::size_t>(i)])
                strictly_better = true;
        }
        if (weakly_better && strictly_better) {
            dominated = true;
            return false;
        }
        return true;
    });
    return ! dominated;
}

std::vector<Allocation> max_nash_bruteforce(const Instance& inst, std::uint64_t budget)
{
    std::vector<Allocation> best;
    Value best_nash;
    bool have = false;
    for_each_allocation(inst.agent_count(), inst.item_count(), budget, [&](const Allocation& alloc) {
        Value product = 1;
        for (int i = 0; i < inst.agent_count(); ++i) {
            Value u = value_of_allocation(inst, alloc, i);
            if (u < 0)
                throw InputError("Nash welfare is undefined: agent " + std::to_string(i) +
                    " has negative utility under some allocation");
            product *= u;
        }
        if (! have || product > best_nash) {
            best_nash = product;
            best.clear();
            have = true;
        }
        if (product == best_nash)
            best.push_back(alloc);
        return true;
    });
    return best;
}

bool nash_efx_counterexample_check(const Instance& inst, std::uint64_t budget)
{
    for (const auto& alloc : max_nash_bruteforce(inst, budget))
        if (check_efx(inst, alloc).pass)
            return false;
    return true;
}

}
