#pragma once

#include "fairdex/fairness.hpp"
#include "fairdex/model.hpp"
#include "fairdex/reductions.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace fairdex {

// Documents keep insertion order so serialization is canonical: agents
// ascending, items in declared order.
using Json = nlohmann::ordered_json;

inline constexpr const char* instance_schema = "fairdex/instance-v1";
inline constexpr const char* allocation_schema = "fairdex/allocation-v1";
inline constexpr const char* report_schema = "fairdex/report-v1";

// One envelope for all instance flavours, discriminated by "kind":
// a full externality tensor, a plain (no-externalities) utility table, or
// an agent-item-correlated spec. Values are strings ("3", "-16", "9/2",
// "0.25"); missing entries take the declared default.
enum class DocumentKind { Externality, Plain, Correlated };

struct InstanceDocument {
    DocumentKind kind = DocumentKind::Externality;
    std::optional<Instance> instance;
    std::optional<PlainInstance> plain;
    std::optional<CorrelatedSpec> correlated;
    Json meta;   // informational block written by generators; not part of the canonical form

    // The full externality tensor: as-is, embedded, or expanded.
    Instance materialize() const;
};

InstanceDocument parse_instance_document(const Json& doc);
InstanceDocument load_instance_document(const std::string& path);

Json instance_to_json(const Instance& inst);
Json plain_to_json(const PlainInstance& plain);
Json correlated_to_json(const CorrelatedSpec& spec);

Allocation parse_allocation(const Json& doc, const Instance& inst);
Allocation load_allocation(const std::string& path, const Instance& inst);
Json allocation_to_json(const Allocation& alloc, const Instance& inst);

Json verdict_to_json(const FairnessVerdict& verdict, const Instance& inst);

Value json_to_value(const Json& node);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}
