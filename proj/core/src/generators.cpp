#include "fairdex/generators.hpp"

#include "fairdex/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace fairdex {

namespace {

std::vector<std::string> numbered_ids(const std::string& prefix, int count, int from = 1)
{
    std::vector<std::string> ids;
    ids.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        ids.push_back(prefix + std::to_string(from + i));
    return ids;
}

struct PartitionNumbers {
    int n = 0;
    BigInt big_m;            // (s_max - s_min) * n^2
    std::vector<BigInt> shifted;
    Value half_surplus;      // B = (sum of s_i - s_min) / 2
    Value target;            // M * n + B
};

PartitionNumbers partition_numbers(const PartitionSeed& seed)
{
    const auto& s = seed.values;
    if (s.empty() || s.size() % 2 != 0)
        throw InputError("partition seed needs a nonempty, even-length integer sequence");
    PartitionNumbers out;
    out.n = seed.half_count();
    const auto [min_it, max_it] = std::minmax_element(s.begin(), s.end());
    out.big_m = (BigInt(*max_it) - BigInt(*min_it)) * out.n * out.n;
    if (out.big_m == 0)
        throw InputError("all integers in the seed are equal; any subset of half the indices "
            "is already an equal-cardinality, equal-sum split");
    BigInt surplus = 0;
    for (long long v : s) {
        out.shifted.push_back(out.big_m + BigInt(v) - *min_it);
        surplus += BigInt(v) - *min_it;
    }
    out.half_surplus = Value(surplus, 2);
    out.target = Value(out.big_m * out.n) + out.half_surplus;
    return out;
}

void bisection_validate(const CubicGraphSeed& seed)
{
    const int vertices = seed.vertex_count;
    if (vertices < 4 || vertices % 2 != 0)
        throw InputError("a cubic graph needs an even vertex count of at least 4");
    std::vector<int> degree(static_cast<std::size_t>(vertices), 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : seed.edges) {
        if (u < 0 || u >= vertices || v < 0 || v >= vertices || u == v)
            throw InputError("edge endpoints out of range");
        auto key = std::minmax(u, v);
        if (! seen.insert(key).second)
            throw InputError("duplicate edge in the graph seed");
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    for (int d : degree)
        if (d != 3)
            throw InputError("the graph is not 3-regular");
    const int n = vertices / 2;
    if (seed.cut_size < 0 || seed.cut_size > 3 * n)
        throw InputError("cut size out of range");
    if ((3 * n + seed.cut_size) % 2 != 0)
        throw InputError("3n + k must be even for the item sets to have integer sizes");
}

struct CliqueLayout {
    int pair_count = 0;                      // k choose 2
    int edges_per_pair = 0;                  // m'
    std::map<std::pair<int, int>, std::vector<int>> edges_by_pair;   // -> indices into seed.edges
    std::vector<CliqueSeed::Edge> oriented;  // color_a < color_b

    int vertex_agent(const CliqueSeed& seed, int color, int vertex) const
    {
        return color * seed.class_size + vertex;
    }
    int pair_offset(int i, int j, int k) const
    {
        // pairs (0,1), (0,2), ..., (0,k-1), (1,2), ... in order
        return i * k - i * (i + 1) / 2 + (j - i - 1);
    }
};

CliqueLayout clique_layout(const CliqueSeed& seed)
{
    if (seed.colors < 2 || seed.class_size < 1)
        throw InputError("a clique seed needs at least two colors and nonempty classes");
    CliqueLayout layout;
    layout.pair_count = seed.colors * (seed.colors - 1) / 2;
    std::set<std::tuple<int, int, int, int>> seen;
    for (const auto& e : seed.edges) {
        CliqueSeed::Edge edge = e;
        if (edge.color_a > edge.color_b) {
            std::swap(edge.color_a, edge.color_b);
            std::swap(edge.vertex_a, edge.vertex_b);
        }
        if (edge.color_a < 0 || edge.color_b >= seed.colors || edge.color_a == edge.color_b)
            throw InputError("clique edges must join two distinct color classes");
        if (edge.vertex_a < 0 || edge.vertex_a >= seed.class_size ||
            edge.vertex_b < 0 || edge.vertex_b >= seed.class_size)
            throw InputError("clique edge vertex index out of range");
        if (! seen.insert({edge.color_a, edge.vertex_a, edge.color_b, edge.vertex_b}).second)
            throw InputError("duplicate edge in the clique seed");
        layout.edges_by_pair[{edge.color_a, edge.color_b}].push_back(static_cast<int>(layout.oriented.size()));
        layout.oriented.push_back(edge);
    }
    bool first = true;
    for (int i = 0; i < seed.colors; ++i)
        for (int j = i + 1; j < seed.colors; ++j) {
            auto it = layout.edges_by_pair.find({i, j});
            const int count = it == layout.edges_by_pair.end() ? 0 : static_cast<int>(it->second.size());
            if (first) {
                layout.edges_per_pair = count;
                first = false;
            }
            else if (count != layout.edges_per_pair) {
                throw InputError("every pair of color classes needs the same number of edges");
            }
        }
    if (layout.edges_per_pair == 0)
        throw InputError("clique seed has no edges between some color classes");
    return layout;
}

}

Instance partition_to_efx_instance(const PartitionSeed& seed)
{
    const auto numbers = partition_numbers(seed);
    const int n = numbers.n;
    const int weight_items = 2 * n;
    const int aux1 = weight_items;       // a_{2n+1}
    const int aux2 = weight_items + 1;   // a_{2n+2}

    Instance inst(3, numbered_ids("a", weight_items + 2));
    for (int j = 0; j < weight_items; ++j)
        for (int i = 0; i < 3; ++i)
            inst.set_value(i, i, j, Value(numbers.shifted[static_cast<std::size_t>(j)]));

    inst.set_value(0, 0, aux1, numbers.target);
    inst.set_value(1, 1, aux2, numbers.target);
    inst.set_value(0, 0, aux2, Value(1));
    inst.set_value(1, 1, aux1, Value(1));
    const Value deterrent = Value(-numbers.big_m * numbers.big_m);
    inst.set_value(0, 1, aux2, deterrent);
    inst.set_value(1, 0, aux1, deterrent);
    inst.set_value(2, 2, aux1, numbers.target / 2);
    inst.set_value(2, 2, aux2, numbers.target / 2);
    return inst;
}

Allocation partition_witness(const PartitionSeed& seed, const std::vector<int>& subset)
{
    const int two_n = static_cast<int>(seed.values.size());
    const int n = seed.half_count();
    if (static_cast<int>(subset.size()) != n)
        throw InputError("the certificate must pick exactly half of the indices");
    std::set<int> chosen;
    BigInt in_sum = 0, total = 0;
    for (int idx : subset) {
        if (idx < 0 || idx >= two_n)
            throw InputError("certificate index out of range");
        if (! chosen.insert(idx).second)
            throw InputError("certificate index repeated");
        in_sum += seed.values[static_cast<std::size_t>(idx)];
    }
    for (long long v : seed.values)
        total += v;
    if (2 * in_sum != total)
        throw InputError("the certificate is not an equal-sum split");

    std::vector<int> owner(static_cast<std::size_t>(two_n + 2), 1);
    for (int idx : chosen)
        owner[static_cast<std::size_t>(idx)] = 0;
    owner[static_cast<std::size_t>(two_n)] = 2;
    owner[static_cast<std::size_t>(two_n + 1)] = 2;
    return Allocation(3, std::move(owner));
}

Instance bisection_to_efx_instance(const CubicGraphSeed& seed)
{
    bisection_validate(seed);
    const int n = seed.vertex_count / 2;
    const int k = seed.cut_size;
    const int agents = 3 * n;   // one per edge of the cubic graph
    const int size_x = (3 * n + k) / 2;
    const int size_y = (3 * n - k) / 2;
    const int size_z = 3 * n - k;

    std::vector<std::string> ids = numbered_ids("x", size_x);
    for (auto& id : numbered_ids("y", size_y))
        ids.push_back(std::move(id));
    for (auto& id : numbered_ids("z", size_z))
        ids.push_back(std::move(id));

    Instance inst(agents, std::move(ids));
    const Value value_x(10 * n * n);
    const Value value_x_far(10 * n * n - 4 * n);
    const Value value_y(5 * n * n);
    const Value value_y_far(5 * n * n - 4 * n);

    auto disjoint = [&](int i, int j) {
        auto [a1, b1] = seed.edges[static_cast<std::size_t>(i)];
        auto [a2, b2] = seed.edges[static_cast<std::size_t>(j)];
        return a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2;
    };

    for (int item = 0; item < size_x + size_y; ++item) {
        const bool in_x = item < size_x;
        for (int i = 0; i < agents; ++i) {
            inst.set_value(i, i, item, in_x ? value_x : value_y);
            for (int j = 0; j < agents; ++j)
                if (i != j && disjoint(i, j))
                    inst.set_value(i, j, item, in_x ? value_x_far : value_y_far);
        }
    }
    for (int item = size_x + size_y; item < inst.item_count(); ++item)
        for (int i = 0; i < agents; ++i)
            inst.set_value(i, i, item, Value(1));
    return inst;
}

Allocation bisection_witness(const CubicGraphSeed& seed, const std::vector<int>& side_x)
{
    bisection_validate(seed);
    const int n = seed.vertex_count / 2;
    const int k = seed.cut_size;
    if (static_cast<int>(side_x.size()) != n)
        throw InputError("the bisection side must contain exactly half of the vertices");
    std::vector<bool> in_x(static_cast<std::size_t>(seed.vertex_count), false);
    std::set<int> unique;
    for (int v : side_x) {
        if (v < 0 || v >= seed.vertex_count)
            throw InputError("bisection vertex out of range");
        if (! unique.insert(v).second)
            throw InputError("bisection vertex repeated");
        in_x[static_cast<std::size_t>(v)] = true;
    }
    int crossing = 0;
    for (auto [u, v] : seed.edges)
        if (in_x[static_cast<std::size_t>(u)] != in_x[static_cast<std::size_t>(v)])
            ++crossing;
    if (crossing != k)
        throw InputError("the bisection cuts " + std::to_string(crossing) +
            " edges; the seed expects exactly " + std::to_string(k));

    const int size_x = (3 * n + k) / 2;
    const int size_y = (3 * n - k) / 2;
    int next_x = 0, next_y = size_x, next_z = size_x + size_y;
    std::vector<int> owner(static_cast<std::size_t>(size_x + size_y + (3 * n - k)), -1);
    for (int agent = 0; agent < 3 * n; ++agent) {
        auto [u, v] = seed.edges[static_cast<std::size_t>(agent)];
        const bool u_in = in_x[static_cast<std::size_t>(u)];
        const bool v_in = in_x[static_cast<std::size_t>(v)];
        if (u_in && v_in) {
            owner[static_cast<std::size_t>(next_x++)] = agent;
            owner[static_cast<std::size_t>(next_z++)] = agent;
        }
        else if (! u_in && ! v_in) {
            owner[static_cast<std::size_t>(next_y++)] = agent;
            owner[static_cast<std::size_t>(next_z++)] = agent;
        }
        else {
            owner[static_cast<std::size_t>(next_x++)] = agent;
        }
    }
    return Allocation(3 * n, std::move(owner));
}

Instance clique_to_ef_instance(const CliqueSeed& seed)
{
    const auto layout = clique_layout(seed);
    const int k = seed.colors;
    const int vertex_agents = k * seed.class_size;
    const int agents = vertex_agents + layout.pair_count * layout.edges_per_pair;

    std::vector<std::string> ids = numbered_ids("sel", k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            ids.push_back("inc" + std::to_string(i + 1) + "_" + std::to_string(j + 1));

    Instance inst(agents, std::move(ids));
    auto edge_agent = [&](int edge_index) {
        const auto& e = layout.oriented[static_cast<std::size_t>(edge_index)];
        int position = 0;
        for (int idx : layout.edges_by_pair.at({e.color_a, e.color_b})) {
            if (idx == edge_index)
                break;
            ++position;
        }
        return vertex_agents + layout.pair_offset(e.color_a, e.color_b, k) * layout.edges_per_pair + position;
    };

    // selection-item sel_{c}: worth 1 to color-c vertex-agents whenever any
    // color-c vertex-agent holds it
    for (int c = 0; c < k; ++c)
        for (int l = 0; l < seed.class_size; ++l) {
            const int evaluator = layout.vertex_agent(seed, c, l);
            for (int l2 = 0; l2 < seed.class_size; ++l2)
                inst.set_value(evaluator, layout.vertex_agent(seed, c, l2), c, Value(1));
        }

    // incidence-item inc_{i,j}
    int item = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++item) {
            const auto& pair_edges = layout.edges_by_pair.at({i, j});
            // edge-agents of the matching group value it under any owner of that group
            for (int e1 : pair_edges)
                for (int e2 : pair_edges)
                    inst.set_value(edge_agent(e1), edge_agent(e2), item, Value(1));
            // vertex-agents of an endpoint color value holding it themselves,
            // or its placement on a group edge-agent missing their vertex
            for (int c : {i, j})
                for (int l = 0; l < seed.class_size; ++l) {
                    const int evaluator = layout.vertex_agent(seed, c, l);
                    inst.set_value(evaluator, evaluator, item, Value(1));
                    for (int e : pair_edges) {
                        const auto& edge = layout.oriented[static_cast<std::size_t>(e)];
                        const bool incident = (edge.color_a == c && edge.vertex_a == l) ||
                            (edge.color_b == c && edge.vertex_b == l);
                        if (! incident)
                            inst.set_value(evaluator, edge_agent(e), item, Value(1));
                    }
                }
        }
    return inst;
}

Allocation clique_witness(const CliqueSeed& seed, const std::vector<int>& clique_vertex_by_color)
{
    const auto layout = clique_layout(seed);
    const int k = seed.colors;
    if (static_cast<int>(clique_vertex_by_color.size()) != k)
        throw InputError("a multicolored clique picks exactly one vertex per color");
    for (int v : clique_vertex_by_color)
        if (v < 0 || v >= seed.class_size)
            throw InputError("clique vertex index out of range");

    const int vertex_agents = k * seed.class_size;
    const int agents = vertex_agents + layout.pair_count * layout.edges_per_pair;
    std::vector<int> owner(static_cast<std::size_t>(k + layout.pair_count), -1);

    for (int c = 0; c < k; ++c)
        owner[static_cast<std::size_t>(c)] = layout.vertex_agent(seed, c, clique_vertex_by_color[static_cast<std::size_t>(c)]);

    int item = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++item) {
            const auto& pair_edges = layout.edges_by_pair.at({i, j});
            int found = -1, position = 0;
            for (int e : pair_edges) {
                const auto& edge = layout.oriented[static_cast<std::size_t>(e)];
                if (edge.vertex_a == clique_vertex_by_color[static_cast<std::size_t>(i)] &&
                    edge.vertex_b == clique_vertex_by_color[static_cast<std::size_t>(j)]) {
                    found = position;
                    break;
                }
                ++position;
            }
            if (found == -1)
                throw InputError("the chosen vertices of colors " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " are not adjacent; not a clique");
            owner[static_cast<std::size_t>(item)] =
                vertex_agents + layout.pair_offset(i, j, k) * layout.edges_per_pair + found;
        }
    return Allocation(agents, std::move(owner));
}

Instance random_instance(int agents, int items, const std::vector<Value>& domain, std::uint64_t seed)
{
    return random_instance(agents, items,
        std::vector<std::vector<Value>>(static_cast<std::size_t>(agents), domain), seed);
}

Instance random_instance(int agents, int items, const std::vector<std::vector<Value>>& domain_per_agent,
    std::uint64_t seed)
{
    if (static_cast<int>(domain_per_agent.size()) != agents)
        throw InputError("one value domain per agent required");
    for (const auto& domain : domain_per_agent)
        if (domain.empty())
            throw InputError("value domains must be nonempty");

    Instance inst(agents, numbered_ids("g", items));
    // modulo reduction keeps a fixed seed byte-identical across standard libraries
    std::mt19937_64 rng(seed);
    for (int i = 0; i < agents; ++i) {
        const auto& domain = domain_per_agent[static_cast<std::size_t>(i)];
        for (int j = 0; j < agents; ++j)
            for (int a = 0; a < items; ++a)
                inst.set_value(i, j, a, domain[static_cast<std::size_t>(rng() % domain.size())]);
    }
    return inst;
}

}
