#pragma once

#include <json.hpp>

#include "curveh1/family.hpp"

namespace curveh1 {

using Json = nlohmann::ordered_json;

/// JSON report documents. All integers are exact; rationals are "p/q"
/// strings. Every document round-trips through its parser.
Json to_json(const OracleResult& r);
Json to_json(const AlgebraicPoint& p);
Json to_json(const SingularityRecord& r);
Json to_json(const TopologyReport& t);
Json to_json(const H1Report& r);
Json to_json(const FiberRecord& r);
Json to_json(const FamilyReport& r);

OracleResult oracle_from_json(const Json& j);
AlgebraicPoint point_from_json(const Json& j);
SingularityRecord singularity_from_json(const Json& j);
TopologyReport topology_from_json(const Json& j);
H1Report h1_from_json(const Json& j);
FiberRecord fiber_from_json(const Json& j);
FamilyReport family_from_json(const Json& j);

bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b);
bool operator==(const SingularityRecord& a, const SingularityRecord& b);
bool operator==(const TopologyReport& a, const TopologyReport& b);
bool operator==(const H1Report& a, const H1Report& b);
bool operator==(const FiberRecord& a, const FiberRecord& b);
bool operator==(const FamilyReport& a, const FamilyReport& b);

/// Human-readable renderings used by the command-line tool.
std::string render_text(const H1Report& r);
std::string render_text(const OracleResult& r);
std::string render_text(const FamilyReport& r);

}  // namespace curveh1
