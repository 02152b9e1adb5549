#include "fairdex/serialization.hpp"

#include "fairdex/errors.hpp"
#include "fairdex/value.hpp"

#include <fstream>
#include <map>
#include <set>

namespace fairdex {

namespace {

const Json& field(const Json& doc, const char* name)
{
    auto it = doc.find(name);
    if (it == doc.end())
        throw InputError(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const Json& node, const char* what)
{
    if (! node.is_number_integer() && ! node.is_number_unsigned())
        throw InputError(std::string(what) + " must be an integer");
    return node.get<int>();
}

std::vector<std::string> parse_items(const Json& doc)
{
    const Json& node = field(doc, "items");
    if (! node.is_array())
        throw InputError("'items' must be an array of identifiers");
    std::vector<std::string> items;
    for (const auto& entry : node) {
        if (! entry.is_string())
            throw InputError("item identifiers must be strings");
        items.push_back(entry.get<std::string>());
    }
    return items;
}

Value default_of(const Json& doc, const char* name, const Value& fallback)
{
    auto it = doc.find(name);
    return it == doc.end() ? fallback : json_to_value(*it);
}

// agent-major (agent, item) -> value table with a default
std::vector<Value> parse_agent_item_table(const Json& doc, const char* name, const Instance& shape,
    const Value& fallback)
{
    std::vector<Value> table(static_cast<std::size_t>(shape.agent_count()) * shape.item_count(), fallback);
    auto it = doc.find(name);
    if (it == doc.end())
        return table;
    if (! it->is_array())
        throw InputError(std::string("'") + name + "' must be an array of [agent, item, value] entries");
    std::set<std::pair<int, int>> seen;
    for (const auto& entry : *it) {
        if (! entry.is_array() || entry.size() != 3)
            throw InputError(std::string("'") + name + "' entries must be [agent, item, value]");
        int agent = int_field(entry[0], "agent index");
        if (agent < 0 || agent >= shape.agent_count())
            throw InputError("agent index out of range");
        if (! entry[1].is_string())
            throw InputError("item references must be identifiers");
        int item = shape.item_index(entry[1].get<std::string>());
        if (! seen.insert({agent, item}).second)
            throw InputError(std::string("duplicate entry in '") + name + "'");
        table[static_cast<std::size_t>(agent) * shape.item_count() + item] = json_to_value(entry[2]);
    }
    return table;
}

void append_agent_item_table(Json& doc, const char* name, const char* default_name,
    const std::vector<std::string>& items, int agents, const std::vector<Value>& table,
    const Value& fallback)
{
    doc[default_name] = format_value(fallback);
    Json entries = Json::array();
    for (int i = 0; i < agents; ++i)
        for (int a = 0; a < static_cast<int>(items.size()); ++a) {
            const Value& v = table[static_cast<std::size_t>(i) * items.size() + a];
            if (v != fallback)
                entries.push_back(Json::array({i, items[static_cast<std::size_t>(a)], format_value(v)}));
        }
    doc[name] = std::move(entries);
}

}

Value json_to_value(const Json& node)
{
    if (node.is_string())
        return parse_value(node.get<std::string>());
    if (node.is_number_integer())
        return Value(node.get<std::int64_t>());
    if (node.is_number_unsigned())
        return Value(node.get<std::uint64_t>());
    throw InputError("values must be exact strings (\"3\", \"-16\", \"9/2\") or integers");
}

Instance InstanceDocument::materialize() const
{
    switch (kind) {
    case DocumentKind::Externality: return *instance;
    case DocumentKind::Plain: return plain->to_instance();
    case DocumentKind::Correlated: return expand_correlated(*correlated);
    }
    throw InputError("unknown document kind");
}

InstanceDocument parse_instance_document(const Json& doc)
{
    if (! doc.is_object())
        throw InputError("instance document must be a JSON object");
    if (auto it = doc.find("schema"); it != doc.end() && *it != instance_schema)
        throw InputError("unsupported instance schema");

    std::string kind = "externality";
    if (auto it = doc.find("kind"); it != doc.end()) {
        if (! it->is_string())
            throw InputError("'kind' must be a string");
        kind = it->get<std::string>();
    }

    InstanceDocument out;
    if (auto it = doc.find("meta"); it != doc.end())
        out.meta = *it;

    const int agents = int_field(field(doc, "agents"), "'agents'");
    if (agents < 1)
        throw InputError("'agents' must be at least 1");
    auto items = parse_items(doc);
    Instance shape(agents, items);   // validates identifier uniqueness, resolves item lookups

    if (kind == "externality") {
        out.kind = DocumentKind::Externality;
        Value fallback = default_of(doc, "default_value", Value(0));
        Instance inst(agents, items);
        for (int i = 0; i < agents; ++i)
            for (int j = 0; j < agents; ++j)
                for (int a = 0; a < inst.item_count(); ++a)
                    inst.set_value(i, j, a, fallback);
        if (auto it = doc.find("values"); it != doc.end()) {
            if (! it->is_array())
                throw InputError("'values' must be an array of [i, j, item, value] entries");
            std::set<std::tuple<int, int, int>> seen;
            for (const auto& entry : *it) {
                if (! entry.is_array() || entry.size() != 4)
                    throw InputError("'values' entries must be [i, j, item, value]");
                int i = int_field(entry[0], "agent index");
                int j = int_field(entry[1], "agent index");
                if (i < 0 || i >= agents || j < 0 || j >= agents)
                    throw InputError("agent index out of range");
                if (! entry[2].is_string())
                    throw InputError("item references must be identifiers");
                int a = inst.item_index(entry[2].get<std::string>());
                if (! seen.insert({i, j, a}).second)
                    throw InputError("duplicate valuation entry");
                inst.set_value(i, j, a, json_to_value(entry[3]));
            }
        }
        out.instance = std::move(inst);
        return out;
    }

    if (kind == "plain") {
        out.kind = DocumentKind::Plain;
        PlainInstance plain;
        plain.agent_count = agents;
        plain.items = items;
        plain.utility = parse_agent_item_table(doc, "utilities", shape, default_of(doc, "default_value", Value(0)));
        out.plain = std::move(plain);
        return out;
    }

    if (kind == "correlated") {
        out.kind = DocumentKind::Correlated;
        CorrelatedSpec spec;
        spec.agent_count = agents;
        spec.items = items;
        spec.base_value = parse_agent_item_table(doc, "base_values", shape, default_of(doc, "default_base", Value(0)));
        spec.mu = parse_agent_item_table(doc, "mu", shape, default_of(doc, "default_mu", Value(1)));
        spec.tau.assign(static_cast<std::size_t>(agents) * agents, default_of(doc, "default_tau", Value(1)));
        if (auto it = doc.find("tau"); it != doc.end()) {
            if (! it->is_array())
                throw InputError("'tau' must be an array of [i, j, value] entries");
            std::set<std::pair<int, int>> seen;
            for (const auto& entry : *it) {
                if (! entry.is_array() || entry.size() != 3)
                    throw InputError("'tau' entries must be [i, j, value]");
                int i = int_field(entry[0], "agent index");
                int j = int_field(entry[1], "agent index");
                if (i < 0 || i >= agents || j < 0 || j >= agents)
                    throw InputError("agent index out of range");
                if (! seen.insert({i, j}).second)
                    throw InputError("duplicate tau entry");
                spec.tau[static_cast<std::size_t>(i) * agents + j] = json_to_value(entry[2]);
            }
        }
        spec.validate();
        out.correlated = std::move(spec);
        return out;
    }

    throw InputError("unknown instance kind '" + kind + "'");
}

InstanceDocument load_instance_document(const std::string& path)
{
    return parse_instance_document(load_json_file(path));
}

Json instance_to_json(const Instance& inst)
{
    // sparse encoding against the most frequent tensor entry
    std::map<Value, std::size_t> frequency;
    for (int i = 0; i < inst.agent_count(); ++i)
        for (int j = 0; j < inst.agent_count(); ++j)
            for (int a = 0; a < inst.item_count(); ++a)
                ++frequency[inst.value(i, j, a)];
    Value fallback = 0;
    std::size_t best = 0;
    for (const auto& [value, count] : frequency)
        if (count > best) {
            fallback = value;
            best = count;
        }

    Json doc;
    doc["schema"] = instance_schema;
    doc["kind"] = "externality";
    doc["agents"] = inst.agent_count();
    doc["items"] = inst.item_ids();
    doc["default_value"] = format_value(fallback);
    Json entries = Json::array();
    for (int i = 0; i < inst.agent_count(); ++i)
        for (int j = 0; j < inst.agent_count(); ++j)
            for (int a = 0; a < inst.item_count(); ++a)
                if (inst.value(i, j, a) != fallback)
                    entries.push_back(Json::array({i, j, inst.item_id(a), format_value(inst.value(i, j, a))}));
    doc["values"] = std::move(entries);
    return doc;
}

Json plain_to_json(const PlainInstance& plain)
{
    Json doc;
    doc["schema"] = instance_schema;
    doc["kind"] = "plain";
    doc["agents"] = plain.agent_count;
    doc["items"] = plain.items;
    append_agent_item_table(doc, "utilities", "default_value", plain.items, plain.agent_count,
        plain.utility, Value(0));
    return doc;
}

Json correlated_to_json(const CorrelatedSpec& spec)
{
    Json doc;
    doc["schema"] = instance_schema;
    doc["kind"] = "correlated";
    doc["agents"] = spec.agent_count;
    doc["items"] = spec.items;
    append_agent_item_table(doc, "base_values", "default_base", spec.items, spec.agent_count,
        spec.base_value, Value(0));
    doc["default_tau"] = "1";
    Json taus = Json::array();
    for (int i = 0; i < spec.agent_count; ++i)
        for (int j = 0; j < spec.agent_count; ++j)
            if (i != j && spec.pair_coefficient(i, j) != 1)
                taus.push_back(Json::array({i, j, format_value(spec.pair_coefficient(i, j))}));
    doc["tau"] = std::move(taus);
    append_agent_item_table(doc, "mu", "default_mu", spec.items, spec.agent_count, spec.mu, Value(1));
    return doc;
}

Allocation parse_allocation(const Json& doc, const Instance& inst)
{
    if (! doc.is_object())
        throw InputError("allocation document must be a JSON object");
    if (auto it = doc.find("schema"); it != doc.end() && *it != allocation_schema)
        throw InputError("unsupported allocation schema");
    const Json& assignment = field(doc, "assignment");
    if (! assignment.is_object())
        throw InputError("'assignment' must map item identifiers to agent indices");
    std::vector<int> owner(static_cast<std::size_t>(inst.item_count()), -1);
    for (const auto& [id, node] : assignment.items()) {
        auto item = inst.find_item(id);
        if (! item)
            throw InputError("allocation mentions unknown item '" + id + "'");
        int agent = int_field(node, "owning agent");
        if (agent < 0 || agent >= inst.agent_count())
            throw InputError("owning agent out of range for item '" + id + "'");
        owner[static_cast<std::size_t>(*item)] = agent;
    }
    for (int a = 0; a < inst.item_count(); ++a)
        if (owner[static_cast<std::size_t>(a)] == -1)
            throw InputError("allocation misses item '" + inst.item_id(a) + "'");
    return Allocation(inst.agent_count(), std::move(owner));
}

Allocation load_allocation(const std::string& path, const Instance& inst)
{
    return parse_allocation(load_json_file(path), inst);
}

Json allocation_to_json(const Allocation& alloc, const Instance& inst)
{
    Json assignment = Json::object();
    for (int a = 0; a < inst.item_count(); ++a)
        assignment[inst.item_id(a)] = alloc.owner(a);
    Json doc;
    doc["schema"] = allocation_schema;
    doc["assignment"] = std::move(assignment);
    return doc;
}

Json verdict_to_json(const FairnessVerdict& verdict, const Instance& inst)
{
    Json pairs = Json::array();
    for (const auto& pair : verdict.pairs) {
        Json entry;
        entry["agent"] = pair.agent;
        entry["other"] = pair.other;
        entry["pass"] = pair.pass;
        entry["gap"] = format_value(pair.gap);
        Json witness = Json::array();
        for (int item : pair.witness)
            witness.push_back(inst.item_id(item));
        entry["witness"] = std::move(witness);
        pairs.push_back(std::move(entry));
    }
    Json doc;
    doc["notion"] = to_string(verdict.notion);
    doc["pass"] = verdict.pass;
    doc["pairs"] = std::move(pairs);
    if (verdict.first_violation) {
        const auto& pair = verdict.pairs[*verdict.first_violation];
        doc["first_violation"] = Json{{"agent", pair.agent}, {"other", pair.other}};
    }
    return doc;
}

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open '" + path + "'");
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded())
        throw InputError("'" + path + "' is not valid JSON");
    return doc;
}

void write_json_file(const std::string& path, const Json& doc)
{
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

}
