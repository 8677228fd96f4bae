#ifndef GEOCYCLE_IO_HPP
#define GEOCYCLE_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geocycle/cycles.hpp"

namespace geocycle {

// Input document: {"vertices": [{"id": "a", "x": "1/2", "y": "3"}, ...],
//                  "edges": [["a", "b"], ...]}
// Coordinates are rational strings (or JSON integers); floats are
// rejected. Returns the drawing plus load-time warnings (isolated
// vertices). Throws ParseError / GeneralPositionError / DuplicatePointError.
struct LoadedGraph {
    GeometricGraph drawing;
    std::vector<std::string> warnings;
};

LoadedGraph parse_geometric_graph(const std::string& json_text);
LoadedGraph load_geometric_graph(const std::string& path);

// Render-independent serialization; parse(serialize(g)) reproduces the
// ids, coordinates and edges exactly.
std::string serialize_geometric_graph(const GeometricGraph& g);

// Certificate document: the vertex map to a canonical target's labels
// plus the edge coloring that produced it (when the decider used one).
struct CertificateDocument {
    std::string target;                        // "c3" | "c4" | "c5" | "k5"
    std::vector<std::pair<std::string, std::string>> vertex_map;  // id -> target id
    std::optional<ThicknessColoring> coloring;  // aligned with the source drawing
};

std::string serialize_certificate(const GeometricGraph& g, const std::string& target,
                                  const VertexMap& map,
                                  const std::optional<ThicknessColoring>& coloring);
CertificateDocument parse_certificate(const std::string& json_text,
                                      const GeometricGraph& g);

// Resolves a certificate's id-to-id map against the drawing and target.
VertexMap certificate_to_vertex_map(const CertificateDocument& cert,
                                    const GeometricGraph& g,
                                    const GeometricGraph& target);

struct DecisionReport {
    std::string target;
    std::string answer;  // yes | no | inconclusive | error
    std::optional<std::string> certificate_json;
    std::vector<std::string> evidence;
    std::optional<bool> oracle_agreement;
    int exit_code = 0;
};

std::string serialize_report(const DecisionReport& report);

} // namespace geocycle

#endif
