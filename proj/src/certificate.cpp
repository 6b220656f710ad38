#include "kpan/certificate.hpp"

#include <algorithm>
#include <cstdlib>

namespace kpan {

std::optional<std::string> certificate_defect(const KGraph& g, const CycleCertificate& cert) {
    const auto& c = cert.cycle;
    const int t = static_cast<int>(c.size());
    if (t < 3) return "cycle has " + std::to_string(t) + " vertices, need at least 3";
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : c) {
        if (v < 0 || v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
        if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
        seen[v] = true;
    }
    for (int i = 0; i < t; ++i) {
        const Vertex a = c[i];
        const Vertex b = c[(i + 1) % t];
        if (!g.adjacent(a, b)) {
            return "consecutive vertices " + std::to_string(a) + " and " + std::to_string(b) +
                   " are not adjacent";
        }
    }
    if (cert.chord) {
        const Edge e = *cert.chord;
        const auto pa = std::find(c.begin(), c.end(), e.u);
        const auto pb = std::find(c.begin(), c.end(), e.v);
        if (pa == c.end() || pb == c.end()) return "chord " + to_string(e) + " leaves the cycle";
        const int gap = static_cast<int>(std::abs(pa - pb));
        if (gap == 0 || gap == 1 || gap == t - 1) {
            return "chord " + to_string(e) + " joins consecutive cycle vertices";
        }
        if (!g.adjacent(e.u, e.v)) return "chord " + to_string(e) + " is not an edge";
    }
    return std::nullopt;
}

nlohmann::json certificate_to_json(const CycleCertificate& cert) {
    nlohmann::json doc;
    doc["cycle"] = cert.cycle;
    if (cert.chord) {
        doc["chord"] = {cert.chord->u, cert.chord->v};
    } else {
        doc["chord"] = nullptr;
    }
    return doc;
}

CycleCertificate certificate_from_json(const nlohmann::json& doc) {
    CycleCertificate cert;
    cert.cycle = doc.at("cycle").get<std::vector<Vertex>>();
    const auto& chord = doc.at("chord");
    if (!chord.is_null()) cert.chord = Edge(chord.at(0).get<Vertex>(), chord.at(1).get<Vertex>());
    return cert;
}

}  // namespace kpan
