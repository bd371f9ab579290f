#pragma once

#include <string>

#include "json.hpp"

#include "hocolim/coslice.hpp"

namespace hocolim {

using Json = nlohmann::ordered_json;

/// Parse failures and schema violations surface as ValidationError with the
/// JSON path of the offending value.
Json read_json_file(const std::string& path);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

TwoComplex complex_from_json(const Json& j);
Json complex_to_json(const TwoComplex& x);

/// {"vertices": {v: v'}, "edges": {e: [{"edge", "sign"}]}}
CellMap cellmap_from_json(const Json& j, const ComplexPtr& source, const ComplexPtr& target);
Json cellmap_to_json(const CellMap& f);

/// A word is stored as its list of steps; the start is supplied by context.
EdgeWord word_from_json(const Json& j, const TwoComplex& x, std::size_t start);
Json word_to_json(const TwoComplex& x, const EdgeWord& w);

SetDiagram set_diagram_from_json(const Json& j);
/// Same schema plus "base": [elements] and "basepoints": {v: {a: x}}.
CosliceSetDiagram coslice_set_diagram_from_json(const Json& j);
Json set_diagram_to_json(const SetDiagram& d);
Json coslice_set_diagram_to_json(const CosliceSetDiagram& d);
UnderSet under_set_from_json(const Json& j, const FinSet& base);
FinFun finfun_from_json(const Json& j, const FinSet& dom, const FinSet& cod);

/// Plain diagram of complexes: {shape, objects: {v: {complex}}, arrows}. Any
/// "base", "basepoint" or "pointedness" fields are ignored.
DiagramCx diagram_cx_from_json(const Json& j);
ADiagramCx adiagram_from_json(const Json& j);
Json adiagram_to_json(const ADiagramCx& d);

Json group_to_json(const FgAbelianGroup& g);
Json matrix_to_json(const IntMatrix& m);
Json invariants_to_json(const ComplexInvariants& inv);
Json map_check_to_json(const MapCheck& m);

/// FNV-1a 64-bit of the text, as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace hocolim
