#pragma once

#include "fairdex/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fairdex {

// Fair division without externalities: each agent only values their own
// bundle. Embeds into the externality model as V_i(i,a) = U_i(a), zero
// otherwise, so the one checker covers both settings.
struct PlainInstance {
    int agent_count = 0;
    std::vector<std::string> items;
    std::vector<Value> utility;   // agent-major: utility[i * m + a]

    const Value& of(int agent, int item) const
    {
        return utility[static_cast<std::size_t>(agent) * items.size() + item];
    }
    Instance to_instance() const;
};

// Agent-item-correlated valuations: V_i(i,a) = v_{i,a} and
// V_i(j,a) = (1 - tau_{i,j} * mu_{i,a}) * v_{i,a} for j != i, with
// tau_{i,j} > 0 off the diagonal.
struct CorrelatedSpec {
    int agent_count = 0;
    std::vector<std::string> items;
    std::vector<Value> base_value;   // v: agent-major over items
    std::vector<Value> tau;          // n x n, diagonal ignored
    std::vector<Value> mu;           // agent-major over items

    const Value& base(int agent, int item) const
    {
        return base_value[static_cast<std::size_t>(agent) * items.size() + item];
    }
    const Value& pair_coefficient(int i, int j) const
    {
        return tau[static_cast<std::size_t>(i) * agent_count + j];
    }
    const Value& item_coefficient(int agent, int item) const
    {
        return mu[static_cast<std::size_t>(agent) * items.size() + item];
    }
    void validate() const;   // throws InputError unless tau > 0 for all i != j
};

// Agents split into teams; own value v, teammates worth a c-fraction,
// everyone else zero.
struct TeamSpec {
    int agent_count = 0;
    std::vector<std::string> items;
    std::vector<int> team_of;        // team label per agent
    Value discount;                  // c with 0 <= c < 1
    std::vector<Value> base_value;   // agent-major over items
};

// Agents on a graph; the worth of an item held by agent j decays with the
// hop distance from i to j.
struct NetworkSpec {
    int agent_count = 0;
    std::vector<std::string> items;
    std::vector<std::pair<int, int>> edges;
    std::vector<Value> mu;           // agent-major over items
    std::vector<Value> base_value;
};

// Maps each agent's two values {x_i, y_i} to {0, 1}; swap differences scale
// by (y_i - x_i), so EF/EF1/EFX verdicts are untouched. Errors out when an
// agent uses three or more distinct values.
Instance two_valued_to_binary(const Instance& inst);

// U_i(a) = mu_{i,a} * v_{i,a}; swap differences of the correlated instance
// are tau_{i,j} times those of the plain one.
PlainInstance correlated_to_plain(const CorrelatedSpec& spec);

// Materializes the full externality tensor of a correlated spec.
Instance expand_correlated(const CorrelatedSpec& spec);

CorrelatedSpec build_team_based(const TeamSpec& spec);

// Distances are unweighted shortest paths; a disconnected graph is an
// error. When some d_{i,j} * mu_{i,a} exceeds 1 the expanded values go
// negative; permitted, but flagged through the optional out-parameter.
CorrelatedSpec build_network_based(const NetworkSpec& spec, bool* negative_externalities = nullptr);

// Cyclic picking of each agent's favourite remaining item (ties to the
// lowest item index). Requires nonnegative utilities; the result is EF1 on
// the plain instance.
Allocation round_robin_ef1(const PlainInstance& plain);

}
