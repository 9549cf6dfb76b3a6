#pragma once

#include <json.hpp>
#include <string>

#include "m0k/complex.hpp"
#include "m0k/graph.hpp"
#include "m0k/ring.hpp"

namespace m0k {

using nlohmann::json;

/// {"labels": [...], "facets": [[...],...]} or {"labels": [...],
/// "weights": ["1","1/4",...]}.  Weights must be exact rational strings;
/// floats are rejected.
SimplicialComplex parse_complex(const json& j);
SimplicialComplex load_complex_file(const std::string& path);
json complex_to_json(const SimplicialComplex& k);

/// {"blocks": [["1","2"],...], "splits": [[["1"],["2","3"]],...]} with the
/// side containing the first ground label listed first.
json graph_to_json(const GroundSet& g, const KStableGraph& graph);
KStableGraph parse_graph(const GroundSet& g, const json& j);

/// [{"monomial": [[generator-id, exponent],...], "coeff": "-3"}, ...]
json element_to_json(const RingElement& x);
RingElement parse_element(const GeneratorTable& table, const json& j);

}  // namespace m0k
