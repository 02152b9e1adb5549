#include "fairdex/solvers.hpp"

#include "fairdex/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fairdex {

namespace {

const Value& type_value(const Instance& inst, const ItemTypePartition& partition,
    int evaluator, int owner, int type)
{
    return inst.value(evaluator, owner, partition.types[static_cast<std::size_t>(type)].members.front());
}

}

BundleTypeGuess guess_of_allocation(const ItemTypePartition& partition, const Allocation& alloc)
{
    BundleTypeGuess guess{std::vector<std::uint64_t>(static_cast<std::size_t>(alloc.agent_count()), 0)};
    for (int a = 0; a < alloc.item_count(); ++a)
        guess.mask[static_cast<std::size_t>(alloc.owner(a))] |=
            std::uint64_t(1) << partition.type_by_item[static_cast<std::size_t>(a)];
    return guess;
}

IntegerFeasibilityProblem build_feasibility_problem(const Instance& inst,
    const ItemTypePartition& partition, const BundleTypeGuess& guess, Notion notion)
{
    if (notion == Notion::EF2)
        throw InputError("the bundle-type formulation covers EF, EF1 and EFX");

    const int n = inst.agent_count();
    const int tau = partition.type_count();
    IntegerFeasibilityProblem problem;
    problem.type_count = tau;
    problem.agent_count = n;
    problem.lower.assign(static_cast<std::size_t>(tau) * n, 0);
    problem.upper.assign(static_cast<std::size_t>(tau) * n, 0);
    problem.type_total.resize(static_cast<std::size_t>(tau));
    for (int t = 0; t < tau; ++t) {
        problem.type_total[static_cast<std::size_t>(t)] = partition.multiplicity(t);
        for (int i = 0; i < n; ++i)
            if (guess.contains(i, t)) {
                problem.lower[static_cast<std::size_t>(problem.var(t, i))] = 1;
                problem.upper[static_cast<std::size_t>(problem.var(t, i))] = partition.multiplicity(t);
            }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            IntegerFeasibilityProblem::PairConstraint constraint;
            constraint.agent = i;
            constraint.other = j;
            constraint.coeff.assign(static_cast<std::size_t>(tau) * n, Value(0));
            for (int t = 0; t < tau; ++t) {
                const Value& own = type_value(inst, partition, i, i, t);
                const Value& other = type_value(inst, partition, i, j, t);
                constraint.coeff[static_cast<std::size_t>(problem.var(t, j))] = own - other;
                constraint.coeff[static_cast<std::size_t>(problem.var(t, i))] = other - own;
            }

            // Removal slack derived from the guessed bundle-types alone: the
            // delta of an item depends only on its type and on which of the
            // two bundles holds it.
            std::vector<Value> removals;
            for (int t = 0; t < tau; ++t) {
                if (guess.contains(j, t))
                    removals.push_back(type_value(inst, partition, i, i, t) - type_value(inst, partition, i, j, t));
                if (guess.contains(i, t))
                    removals.push_back(type_value(inst, partition, i, j, t) - type_value(inst, partition, i, i, t));
            }

            if (notion == Notion::EF) {
                constraint.bound = 0;
            }
            else if (notion == Notion::EF1) {
                bool third_bundle_occupied = false;
                for (int l = 0; l < n; ++l)
                    if (l != i && l != j && guess.mask[static_cast<std::size_t>(l)] != 0)
                        third_bundle_occupied = true;
                if (third_bundle_occupied)
                    removals.push_back(Value(0));    // removing a third-bundle item leaves the gap as is
                constraint.bound = removals.empty() ? Value(0) : *std::max_element(removals.begin(), removals.end());
            }
            else {
                // EFX: the least positive removal must already clear the gap;
                // with no positive removal available the gap is provably
                // nonpositive and the pair needs no constraint.
                Value least_positive;
                bool have = false;
                for (const Value& r : removals)
                    if (r > 0 && (! have || r < least_positive)) {
                        least_positive = r;
                        have = true;
                    }
                if (! have)
                    continue;
                constraint.bound = least_positive;
            }
            problem.constraints.push_back(std::move(constraint));
        }
    return problem;
}

bool IntegerFeasibilityProblem::satisfied_by(const std::vector<int>& x) const
{
    const auto vars = static_cast<std::size_t>(type_count) * agent_count;
    if (x.size() != vars)
        return false;
    for (std::size_t v = 0; v < vars; ++v)
        if (x[v] < lower[v] || x[v] > upper[v])
            return false;
    for (int t = 0; t < type_count; ++t) {
        int total = 0;
        for (int i = 0; i < agent_count; ++i)
            total += x[static_cast<std::size_t>(var(t, i))];
        if (total != type_total[static_cast<std::size_t>(t)])
            return false;
    }
    for (const auto& constraint : constraints) {
        Value sum = 0;
        for (std::size_t v = 0; v < vars; ++v)
            if (x[v] != 0)
                sum += constraint.coeff[v] * x[v];
        if (sum > constraint.bound)
            return false;
    }
    return true;
}

std::optional<std::vector<int>> solve_integer_feasibility(const IntegerFeasibilityProblem& problem,
    std::uint64_t* nodes)
{
    const int n = problem.agent_count;
    const int vars = problem.type_count * n;
    const std::size_t constraint_count = problem.constraints.size();

    // per-variable suffix bounds within its own type group (vars are type-major)
    std::vector<int> suffix_lower(static_cast<std::size_t>(vars), 0);
    std::vector<int> suffix_upper(static_cast<std::size_t>(vars), 0);
    for (int t = 0; t < problem.type_count; ++t)
        for (int i = n - 2; i >= 0; --i) {
            const auto v = static_cast<std::size_t>(problem.var(t, i));
            suffix_lower[v] = suffix_lower[v + 1] + problem.lower[v + 1];
            suffix_upper[v] = suffix_upper[v + 1] + problem.upper[v + 1];
        }

    auto min_contribution = [&](std::size_t c, std::size_t v) {
        const Value& k = problem.constraints[c].coeff[v];
        return std::min(Value(k * problem.lower[v]), Value(k * problem.upper[v]));
    };

    std::vector<Value> partial(constraint_count, Value(0));
    std::vector<Value> optimistic_rest(constraint_count, Value(0));
    for (std::size_t c = 0; c < constraint_count; ++c)
        for (std::size_t v = 0; v < static_cast<std::size_t>(vars); ++v)
            optimistic_rest[c] += min_contribution(c, v);

    std::vector<int> x(static_cast<std::size_t>(vars), 0);
    std::uint64_t node_count = 0;

    std::function<bool(int, int)> descend = [&](int v, int remaining) -> bool {
        if (v == vars)
            return true;
        const auto vi = static_cast<std::size_t>(v);
        if (v % n == 0)
            remaining = problem.type_total[static_cast<std::size_t>(v / n)];
        const int lo = std::max(problem.lower[vi], remaining - suffix_upper[vi]);
        const int hi = std::min(problem.upper[vi], remaining - suffix_lower[vi]);
        for (int val = lo; val <= hi; ++val) {
            ++node_count;
            bool viable = true;
            for (std::size_t c = 0; c < constraint_count; ++c) {
                if (val != 0)
                    partial[c] += problem.constraints[c].coeff[vi] * val;
                optimistic_rest[c] -= min_contribution(c, vi);
                if (partial[c] + optimistic_rest[c] > problem.constraints[c].bound)
                    viable = false;
            }
            x[vi] = val;
            if (viable && descend(v + 1, remaining - val))
                return true;
            for (std::size_t c = 0; c < constraint_count; ++c) {
                if (val != 0)
                    partial[c] -= problem.constraints[c].coeff[vi] * val;
                optimistic_rest[c] += min_contribution(c, vi);
            }
        }
        x[vi] = 0;
        return false;
    };

    bool found = descend(0, 0);
    if (nodes)
        *nodes += node_count;
    if (! found)
        return std::nullopt;
    if (! problem.satisfied_by(x))
        throw std::logic_error("feasibility search returned an invalid point");
    return x;
}

Allocation expand_feasible_point(const Instance& inst, const ItemTypePartition& partition,
    const std::vector<int>& x)
{
    const int n = inst.agent_count();
    std::vector<int> owner(static_cast<std::size_t>(inst.item_count()), -1);
    for (int t = 0; t < partition.type_count(); ++t) {
        const auto& members = partition.types[static_cast<std::size_t>(t)].members;
        std::size_t cursor = 0;
        for (int i = 0; i < n; ++i) {
            int take = x[static_cast<std::size_t>(t * n + i)];
            while (take-- > 0) {
                if (cursor >= members.size())
                    throw InputError("feasible point allocates more items than the type holds");
                owner[static_cast<std::size_t>(members[cursor++])] = i;
            }
        }
        if (cursor != members.size())
            throw InputError("feasible point leaves items of a type unallocated");
    }
    return Allocation(n, std::move(owner));
}

SolveResult brute_force_solve(const Instance& inst, Notion notion, std::uint64_t budget)
{
    SolveResult result;
    for_each_allocation(inst.agent_count(), inst.item_count(), budget, [&](const Allocation& alloc) {
        ++result.stats.allocations_checked;
        if (check_fairness(inst, alloc, notion).pass) {
            result.exists = true;
            result.witness = alloc;
            return false;
        }
        return true;
    });
    return result;
}

SolveResult bundle_type_solve(const Instance& inst, Notion notion, std::uint64_t budget)
{
    if (notion == Notion::EF2)
        throw InputError("the bundle-type solver handles EF, EF1 and EFX");

    SolveResult result;
    const int n = inst.agent_count();
    if (inst.item_count() == 0) {
        result.exists = true;
        result.witness = Allocation(n, {});
        return result;
    }

    const auto partition = item_types(inst);
    const int tau = partition.type_count();
    if (tau > 63)
        throw BudgetError("bundle-type enumeration supports at most 63 item types");

    // per-agent candidate subsets in ascending popcount, numeric within ties
    std::vector<std::uint64_t> subsets(std::size_t(1) << tau);
    std::iota(subsets.begin(), subsets.end(), 0);
    std::stable_sort(subsets.begin(), subsets.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    std::vector<int> holders(static_cast<std::size_t>(tau), 0);
    BundleTypeGuess guess{std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)};
    std::optional<Allocation> witness;

    std::function<bool(int)> assign = [&](int agent) -> bool {
        if (agent == n) {
            for (int t = 0; t < tau; ++t)
                if (holders[static_cast<std::size_t>(t)] == 0)
                    return false;    // items of this type would stay unallocated
            if (++result.stats.guesses_explored > budget)
                throw BudgetError("bundle-type guess budget of " + std::to_string(budget) + " exceeded");
            auto problem = build_feasibility_problem(inst, partition, guess, notion);
            auto point = solve_integer_feasibility(problem, &result.stats.feasibility_nodes);
            if (! point)
                return false;
            auto alloc = expand_feasible_point(inst, partition, *point);
            if (! check_fairness(inst, alloc, notion).pass)
                throw std::logic_error("bundle-type solver produced a witness the checker rejects");
            witness = std::move(alloc);
            return true;
        }
        for (std::uint64_t subset : subsets) {
            bool claimable = true;
            for (int t = 0; t < tau && claimable; ++t)
                if ((subset >> t & 1u) != 0 && holders[static_cast<std::size_t>(t)] + 1 > partition.multiplicity(t))
                    claimable = false;
            if (! claimable)
                continue;
            for (int t = 0; t < tau; ++t)
                if ((subset >> t & 1u) != 0)
                    ++holders[static_cast<std::size_t>(t)];
            guess.mask[static_cast<std::size_t>(agent)] = subset;
            if (assign(agent + 1))
                return true;
            for (int t = 0; t < tau; ++t)
                if ((subset >> t & 1u) != 0)
                    --holders[static_cast<std::size_t>(t)];
        }
        guess.mask[static_cast<std::size_t>(agent)] = 0;
        return false;
    };

    if (assign(0)) {
        result.exists = true;
        result.witness = std::move(witness);
    }
    return result;
}

SolveResult ef2_trivial(const Instance& inst)
{
    if (inst.agent_count() <= inst.item_count())
        throw InputError("ef2_trivial requires more agents than items");
    std::vector<int> owner(static_cast<std::size_t>(inst.item_count()));
    std::iota(owner.begin(), owner.end(), 0);
    Allocation alloc(inst.agent_count(), std::move(owner));
    if (! check_ef2(inst, alloc).pass)
        throw std::logic_error("one-item bundles failed the EF2 check");
    SolveResult result;
    result.exists = true;
    result.witness = std::move(alloc);
    result.stats.allocations_checked = 1;
    return result;
}

}
