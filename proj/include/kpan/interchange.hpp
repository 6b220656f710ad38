// Graph interchange documents.
//
// Deletion form:  {"parts":[n1,...,nk],"deleted_edges":[[u,v],...]}
// Explicit form:  {"parts":[n1,...,nk],"edges":[[u,v],...]}
//
// Vertex indices follow the contiguous labelling of the parts in the order
// they are listed. Unsorted part lists are accepted and relabelled into the
// normalised (non-increasing) order; the writer always emits sorted parts.
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kpan/graph.hpp"

namespace kpan {

enum class GraphForm { Deletion, Explicit };

KGraph parse_graph(std::string_view text);
KGraph graph_from_json(const nlohmann::json& doc);

nlohmann::json graph_to_json(const KGraph& g, GraphForm form = GraphForm::Deletion);
std::string serialize_graph(const KGraph& g, GraphForm form = GraphForm::Deletion);

nlohmann::json edges_to_json(std::span<const Edge> edges);

}  // namespace kpan
