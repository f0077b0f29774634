#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cheeger/arcgeom.hpp"
#include "cheeger/cantor.hpp"
#include "cheeger/cmcprofile.hpp"
#include "cheeger/constructions.hpp"
#include "cheeger/solver.hpp"

// JSON forms. Numbers use the shortest decimal that reads back to the same double.
namespace cheeger {

using Json = nlohmann::json;

Json to_json(const ArcEdge& e);
Json to_json(const ArcGon& g);
Json to_json(const RegionSet& s);
// open chain: {"edges": [...], "closed": false}
Json to_json(const Profile& p);
Json to_json(const CantorStage& s);
Json to_json(const DimensionReport& d);
Json to_json(const CheegerSolution& s);
Json to_json(const ContactSet& c);
Json to_json(const SelfCheegerReport& r);

ArcEdge edge_from_json(const Json& j);
// accepts {"edges": ...} or a document carrying one under "domain"
ArcGon arcgon_from_json(const Json& j);
CantorStage cantor_stage_from_json(const Json& j);
ContactSet contact_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace cheeger
