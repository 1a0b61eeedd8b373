#pragma once

#include "imprim/classifier.hpp"
#include "imprim/constructions.hpp"
#include "imprim/design.hpp"
#include "imprim/graph.hpp"
#include "imprim/permgroup.hpp"
#include "imprim/quotient.hpp"

#include <json.hpp>

#include <string>

namespace imprim {

using Json = nlohmann::json;

// Records:
//   graph   {"edges": [[u, v], ...], "vertices": n}
//   group   {"degree": n, "generators": [[images], ...]}
//   triple  {"graph": graph, "group": group, "partition": [[...], ...]}
//   design  {"blocks": [[...], ...], "points": n}
// Decoders throw SchemaError carrying a JSON-pointer style path.

Json encode_graph(const Graph & g);
Graph decode_graph(const Json & j, const std::string & path = "");

Json encode_group(const GeneratedGroup & g);
GeneratedGroup decode_group(const Json & j, const std::string & path = "");

Json encode_triple(const SymmetricTriple & t);
SymmetricTriple decode_triple(const Json & j, const std::string & path = "");

Json encode_design(const IncidenceStructure & d);
IncidenceStructure decode_design(const Json & j, const std::string & path = "");

Json encode_orbits(const std::vector<ThreeArcOrbit> & orbits);
Json encode_report(const ClassificationReport & report);

/// Compact dump; keys come out in alphabetical order.
std::string canonical_dump(const Json & j);

/// Parses text, turning parse failures into SchemaError at path "".
Json parse_json(const std::string & text);

} // namespace imprim
