#pragma once

#include "radii/audit.hpp"
#include "radii/campaign.hpp"
#include "radii/constructions.hpp"
#include "radii/successive_radii.hpp"

#include <json.hpp>

#include <string>

namespace radii {

using Json = nlohmann::ordered_json;

/// Body from its JSON description. Errors are InvalidInput naming the field.
Body parse_body(const Json& j);
Body load_body(const std::string& path);

Json to_json(const Vector& v);
Json to_json(const Frame& f);
Json to_json(const RadiusEstimate& e);
Json to_json(const RadiiProfile& p);
Json to_json(const SearchConfig& c);
Json to_json(const CertifyConfig& c);
Json to_json(const HexagonWitness& w);
Json to_json(const SquareWitness& w);
Json to_json(const SymmetricSectionBound& b);
Json to_json(const ParallelogramWitness& w);
Json to_json(const TrapezoidWitness& w);
Json to_json(const TouchingSet& t);
Json to_json(const PerelmanConstant& c);
Json to_json(const PerelmanPipeline& p);
Json to_json(const CheckResult& c);
/// Timing fields appear only when `timing` is set, so default output is
/// byte-identical across runs.
Json to_json(const AuditReport& r, bool timing = false);
Json to_json(const CampaignReport& r, bool timing = false);

/// Serializes with every number printed as %.17g (non-finite values as null).
std::string dump_json(const Json& j, int indent = 2);

}  // namespace radii
