#include "kpan/interchange.hpp"

#include <vector>

namespace kpan {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw GraphError(GraphErrorKind::MalformedDocument, "malformed graph document: " + why);
}

std::vector<Edge> read_pairs(const json& list, const char* key, int p,
                             const std::vector<Vertex>& relabel) {
    if (!list.is_array()) malformed(std::string("\"") + key + "\" must be an array");
    std::vector<Edge> out;
    out.reserve(list.size());
    for (const json& pair : list) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            malformed(std::string("entries of \"") + key + "\" must be [u,v] integer pairs");
        }
        const auto u = pair[0].get<long long>();
        const auto v = pair[1].get<long long>();
        if (u < 0 || v < 0 || u >= p || v >= p) {
            throw GraphError(GraphErrorKind::VertexOutOfRange,
                             "pair [" + std::to_string(u) + "," + std::to_string(v) +
                                 "] out of range for order " + std::to_string(p));
        }
        if (u == v) {
            throw GraphError(GraphErrorKind::IntraPartEdge,
                             "pair [" + std::to_string(u) + "," + std::to_string(v) + "] is a loop");
        }
        out.emplace_back(relabel[u], relabel[v]);
    }
    return out;
}

}  // namespace

KGraph graph_from_json(const json& doc) {
    if (!doc.is_object()) malformed("document must be an object");
    if (!doc.contains("parts")) malformed("missing \"parts\"");
    const json& parts_json = doc.at("parts");
    if (!parts_json.is_array() || parts_json.empty()) malformed("\"parts\" must be a non-empty array");
    std::vector<int> parts;
    for (const json& n : parts_json) {
        if (!n.is_number_integer()) malformed("\"parts\" entries must be integers");
        parts.push_back(n.get<int>());
    }
    const bool has_deleted = doc.contains("deleted_edges");
    const bool has_edges = doc.contains("edges");
    if (has_deleted == has_edges) {
        malformed("exactly one of \"deleted_edges\" or \"edges\" is required");
    }

    PartProfile profile(parts);
    const int p = profile.order();

    // Map file labels (listed part order) to normalised labels.
    std::vector<int> file_begin(parts.size(), 0);
    for (std::size_t i = 1; i < parts.size(); ++i) file_begin[i] = file_begin[i - 1] + parts[i - 1];
    std::vector<Vertex> relabel(p);
    Vertex next = 0;
    for (int slot : profile.original_index()) {
        for (int j = 0; j < parts[slot]; ++j) relabel[file_begin[slot] + j] = next++;
    }

    if (has_edges) {
        return KGraph(profile, read_pairs(doc.at("edges"), "edges", p, relabel));
    }
    EdgeSet del;
    for (const Edge& e : read_pairs(doc.at("deleted_edges"), "deleted_edges", p, relabel)) {
        del.add(e);
    }
    return delete_edges(complete_kpartite(profile), del);
}

KGraph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(e.what());
    }
    return graph_from_json(doc);
}

json edges_to_json(std::span<const Edge> edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json graph_to_json(const KGraph& g, GraphForm form) {
    json doc;
    doc["parts"] = g.profile().parts();
    if (form == GraphForm::Deletion) {
        doc["deleted_edges"] = edges_to_json(missing_edges(g));
    } else {
        doc["edges"] = edges_to_json(g.edges());
    }
    return doc;
}

std::string serialize_graph(const KGraph& g, GraphForm form) {
    return graph_to_json(g, form).dump();
}

}  // namespace kpan
