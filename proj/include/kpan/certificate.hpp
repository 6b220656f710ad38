// Cycle certificates and their validator.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpan/graph.hpp"

namespace kpan {

/// A cycle v0, v1, ..., v_{t-1}, v0 and, optionally, one chord.
struct CycleCertificate {
    std::vector<Vertex> cycle;
    std::optional<Edge> chord;

    int length() const noexcept { return static_cast<int>(cycle.size()); }

    friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

/// Checks a certificate against g from scratch. Returns a description of the
/// first defect, or nullopt when the certificate is sound.
///
/// A sound certificate has t >= 3 distinct in-range vertices, every cyclically
/// consecutive pair adjacent in g, and, if a chord is given, a chord that is an
/// edge of g joining two non-consecutive cycle vertices.
std::optional<std::string> certificate_defect(const KGraph& g, const CycleCertificate& cert);

inline bool is_valid_certificate(const KGraph& g, const CycleCertificate& cert) {
    return !certificate_defect(g, cert).has_value();
}

/// {"cycle":[v0,...],"chord":[a,b]|null}
nlohmann::json certificate_to_json(const CycleCertificate& cert);
CycleCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace kpan
