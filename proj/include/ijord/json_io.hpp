#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ijord/jordan.hpp"
#include "ijord/params.hpp"

namespace ijord {

// Versioned JSON descriptor formats.  Parsing is strict: unknown fields are
// rejected, and every document carries {"version": "1", "kind": ...} with
// kind one of simple_cuspidal, general_cuspidal, lparam_registry,
// enumeration_request.

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json poly_to_json(const MonicPoly& p);
MonicPoly poly_from_json(const nlohmann::json& j, const FiniteField& field);

nlohmann::json descriptor_to_json(const SimpleCuspidalDescriptor& desc);
SimpleCuspidalDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json general_to_json(const std::vector<GeneralPart>& parts);
std::vector<GeneralPart> general_from_json(const nlohmann::json& j);

nlohmann::json multiset_to_json(const IJordMultiset& ms); // aggregated entries
nlohmann::json report_to_json(const IJordReport& rep);
nlohmann::json general_report_to_json(const IJordGeneralReport& rep);

nlohmann::json registry_to_json(const EndoRegistry& reg);
EndoRegistry registry_from_json(const nlohmann::json& j);

struct EnumerationRequest {
    long long n_half = 0;
    EndoRegistry registry;
    long long node_budget = 2'000'000;
};

EnumerationRequest enumeration_request_from_json(const nlohmann::json& j);

// Parses any descriptor-file kind and dispatches; used by the CLI.
enum class DescriptorKind { SimpleCuspidal, GeneralCuspidal, LParamRegistry, EnumerationRequest };
DescriptorKind descriptor_kind(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

} // namespace ijord
