#pragma once

#include "fairdex/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fairdex {

// Equal-cardinality-partition input: 2n integers; a certificate is a size-n
// index subset whose values sum to half the total.
struct PartitionSeed {
    std::vector<long long> values;

    int half_count() const { return static_cast<int>(values.size()) / 2; }
};

// Minimum-bisection input: a 3-regular graph on 2n vertices plus the cut
// size k the reduction is tuned to.
struct CubicGraphSeed {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    int cut_size = 0;
};

// Multicolored-clique input: k equal color classes, the same number of
// edges between every pair of classes. Vertices are (color, index) pairs.
struct CliqueSeed {
    struct Edge {
        int color_a = 0;
        int vertex_a = 0;
        int color_b = 0;
        int vertex_b = 0;
    };
    int colors = 0;       // k
    int class_size = 0;   // n'
    std::vector<Edge> edges;
};

// Three agents, 2n+2 items ("a1".."a{2n+2}"). Shifted weights go on the
// diagonal for everyone; the two auxiliary items carry the large target
// values, the unit cross rewards and the -M^2 deterrents. Refuses seeds
// whose integers are all equal (then any size-n subset already splits S).
Instance partition_to_efx_instance(const PartitionSeed& seed);

// subset holds 0-based indices into the seed; must be an equal-cardinality,
// equal-sum split. Items of the subset go to agent 0, the rest of the
// weight items to agent 1, both auxiliary items to agent 2.
Allocation partition_witness(const PartitionSeed& seed, const std::vector<int>& subset);

// One agent per edge; item sets X ("x..."), Y ("y...") and Z ("z...") of
// sizes (3n+k)/2, (3n-k)/2 and 3n-k. Exactly 6 distinct values and 3 item
// types, no weak-chores.
Instance bisection_to_efx_instance(const CubicGraphSeed& seed);

// side_x lists the vertices of one half of a bisection with exactly the
// seed's cut size. Edges inside side_x get {x, z}, edges inside the other
// half get {y, z}, cut edges get {x}.
Allocation bisection_witness(const CubicGraphSeed& seed, const std::vector<int>& side_x);

// Vertex-agents (color-major) then edge-agents (class pairs in order, edges
// in input order); k selection-items and one incidence-item per class pair.
// Binary valuations, no chores.
Instance clique_to_ef_instance(const CliqueSeed& seed);

// clique_vertex_by_color[c] is the chosen vertex index of color c; every
// pair must be an edge of the seed. Selection-items go to the chosen
// vertex-agents, incidence-items to the clique's edge-agents.
Allocation clique_witness(const CliqueSeed& seed, const std::vector<int>& clique_vertex_by_color);

// Uniform tensor sampling, deterministic under the seed (byte-identical
// serializations for equal arguments).
Instance random_instance(int agents, int items, const std::vector<Value>& domain, std::uint64_t seed);

// Per-evaluator domains; used to make two-valued instances.
Instance random_instance(int agents, int items, const std::vector<std::vector<Value>>& domain_per_agent,
    std::uint64_t seed);

}
