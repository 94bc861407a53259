// JSON and DOT serialization of weights, decompositions, reports and graphs.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "supercrystal/decomposition.hpp"
#include "supercrystal/module_realization.hpp"
#include "supercrystal/super_crystal.hpp"

namespace supercrystal {

using Json = nlohmann::json;

/// {"omega": [c0, ..., cN]} with the signed coefficients.
Json weight_to_json(const Weight& w);
/// Throws std::invalid_argument on malformed input.
Weight weight_from_json(const Json& j);
/// Exact rational strings "p/q" (or "p").
Json ortho_to_json(const OrthoVector& x);

/// {"cap", "complete_below", "components": [{"weight", "multiplicity"}], "weight_multiplicities": [...]}.
Json summary_to_json(const DecompositionSummary& s);
/// Inverse of summary_to_json.
DecompositionSummary summary_from_json(const Json& j);

/// {"status": "match"|"diff", "missing", "extra", "multiplicity_mismatches"}.
Json compare_to_json(const CompareReport& r);

/// List of {relation, family, N, basisLabel, defect}.
Json relation_report_to_json(const RelationReport& r);

Json labels_to_json(const std::vector<SuperComponentLabel>& labels, const AlgebraType& type);

/// Parses "(+-)_3 x (++)_0"; throws std::invalid_argument on malformed input.
Word parse_word(const std::string& text);

/// {"family", "n", "vertices": [{"id", "word", "weight"}], "edges": [{"source", "target", "index"}]}.
Json graph_to_json(const SuperGraph& g);
/// Rebuilds the vertex set of graph_to_json output.
SuperGraph graph_from_json(const Json& j);
/// Graphviz digraph of the f-edges; 0-edges are dashed.
std::string graph_to_dot(const SuperGraph& g);
/// One line per vertex and per edge.
std::string graph_to_text(const SuperGraph& g);

}  // namespace supercrystal
