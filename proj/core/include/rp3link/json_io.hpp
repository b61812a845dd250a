#pragma once

#include <string>

#include <json.hpp>

#include "rp3link/certificate.hpp"
#include "rp3link/construction.hpp"
#include "rp3link/graph.hpp"
#include "rp3link/signing.hpp"

namespace rp3link {

using Json = nlohmann::ordered_json;

/// Graph JSON: {"vertices": ["1","2",...], "edges": [["1","2"],...]}.
/// Numeric labels are accepted and normalized to strings.
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// Signing JSON: {"graph": <graph object or descriptor string>,
/// "negative_edges": [["1","2"],...]}; unlisted edges are +.
/// Returns the signing plus the construction when a descriptor was used.
struct LoadedSigning {
    EdgeSigning signing;
    Construction construction;  // parts empty when the graph came inline
};
LoadedSigning signing_from_json(const Json& j);
Json signing_to_json(const EdgeSigning& s);

Json cycle_to_json(const Cycle& c, const Graph& g);
Json certificate_to_json(const Certificate& c, const Graph& g);
Json violation_to_json(const Violation& v, const Graph& g);

Json load_json_file(const std::string& path);

}  // namespace rp3link
