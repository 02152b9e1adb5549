#pragma once

#include "fairdex/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fairdex {

struct WelfareReport {
    Value utilitarian;
    std::vector<Value> per_agent;
    std::optional<Value> nash;   // product of utilities; only defined when all are nonnegative
};

WelfareReport welfare_report(const Instance& inst, const Allocation& alloc);

// Gives every item to an agent maximizing the total value the item
// contributes across all evaluators (ties to the smallest index). The
// result maximizes utilitarian welfare and is Pareto optimal.
Allocation msw_po_greedy(const Instance& inst);

// Exhaustive dominance scan: true iff no allocation makes every agent at
// least as well off and someone strictly better off.
bool is_pareto_optimal(const Instance& inst, const Allocation& alloc,
    std::uint64_t budget = default_allocation_budget);

// All Nash-welfare-maximizing allocations, by enumeration. Throws
// InputError as soon as some allocation gives an agent negative utility.
std::vector<Allocation> max_nash_bruteforce(const Instance& inst,
    std::uint64_t budget = default_allocation_budget);

// True iff no Nash-welfare-maximizing allocation passes the EFX check.
bool nash_efx_counterexample_check(const Instance& inst,
    std::uint64_t budget = default_allocation_budget);

}
