#pragma once

#include "fairdex/fairness.hpp"
#include "fairdex/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fairdex {

struct SolveStats {
    std::uint64_t allocations_checked = 0;
    std::uint64_t guesses_explored = 0;
    std::uint64_t feasibility_nodes = 0;
};

struct SolveResult {
    bool exists = false;
    std::optional<Allocation> witness;   // verified against the checker before returning
    SolveStats stats;
};

// One guessed bundle-type per agent: the set of item types with at least
// one representative in that agent's bundle, encoded as a bitmask.
struct BundleTypeGuess {
    std::vector<std::uint64_t> mask;

    bool contains(int agent, int type) const
    {
        return (mask[static_cast<std::size_t>(agent)] >> type & 1u) != 0;
    }
};

BundleTypeGuess guess_of_allocation(const ItemTypePartition& partition, const Allocation& alloc);

// Box-constrained integer feasibility: variables x[t * n + i] counting
// type-t items given to agent i, per-type totals, and per-ordered-pair
// linear fairness constraints with a constant slack bound.
struct IntegerFeasibilityProblem {
    int type_count = 0;
    int agent_count = 0;
    std::vector<int> lower;
    std::vector<int> upper;
    std::vector<int> type_total;   // sum over agents of x[t * n + i] == type_total[t]

    struct PairConstraint {
        int agent = 0;
        int other = 0;
        std::vector<Value> coeff;   // same indexing as the variables
        Value bound;                // sum coeff * x <= bound
    };
    std::vector<PairConstraint> constraints;

    int var(int type, int agent) const { return type * agent_count + agent; }
    bool satisfied_by(const std::vector<int>& x) const;
};

IntegerFeasibilityProblem build_feasibility_problem(const Instance& inst,
    const ItemTypePartition& partition, const BundleTypeGuess& guess, Notion notion);

std::optional<std::vector<int>> solve_integer_feasibility(const IntegerFeasibilityProblem& problem,
    std::uint64_t* nodes = nullptr);

// Turns a feasible point back into a concrete allocation: each type hands
// its items out in declared order, agents in index order.
Allocation expand_feasible_point(const Instance& inst, const ItemTypePartition& partition,
    const std::vector<int>& x);

// Exhaustive search over all n^m allocations; the witness is the first fair
// allocation in lexicographic owner order.
SolveResult brute_force_solve(const Instance& inst, Notion notion,
    std::uint64_t budget = default_allocation_budget);

// Fixed-parameter procedure: guesses every per-agent bundle-type, derives
// the pair slacks from the guess alone, and solves the resulting integer
// feasibility problem. Supports EF, EF1 and EFX.
SolveResult bundle_type_solve(const Instance& inst, Notion notion,
    std::uint64_t budget = default_allocation_budget);

// With more agents than items, the k-th-item-to-k-th-agent allocation is
// always EF2.
SolveResult ef2_trivial(const Instance& inst);

}
