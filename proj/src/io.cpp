#include "geocycle/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geocycle/errors.hpp"

namespace geocycle {

using nlohmann::json;

namespace {

Rational coordinate_from_json(const json& value, const std::string& where) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(mpz_class(std::to_string(value.get<long long>())));
    if (value.is_number_float())
        throw ParseError("floating point coordinate at " + where +
                         "; use a rational string like \"1/3\"");
    throw ParseError("coordinate at " + where + " must be a rational string");
}

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON");
    return doc;
}

} // namespace

LoadedGraph parse_geometric_graph(const std::string& json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("expected an object with 'vertices' and 'edges'");

    AbstractGraph graph;
    std::vector<Point> coords;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v.contains("x") || !v.contains("y"))
            throw ParseError("each vertex needs 'id', 'x' and 'y'");
        std::string id = v["id"].get<std::string>();
        graph.add_vertex(id);
        coords.emplace_back(coordinate_from_json(v["x"], "vertex '" + id + "'"),
                            coordinate_from_json(v["y"], "vertex '" + id + "'"));
    }
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair of vertex ids");
        graph.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }

    LoadedGraph out{GeometricGraph(std::move(graph), std::move(coords)), {}};
    for (int v : out.drawing.graph().isolated_vertices())
        out.warnings.push_back("vertex '" + out.drawing.graph().vertex_id(v) +
                               "' is isolated");
    return out;
}

LoadedGraph load_geometric_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_geometric_graph(buffer.str());
}

std::string serialize_geometric_graph(const GeometricGraph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        doc["vertices"].push_back({{"id", g.graph().vertex_id(v)},
                                   {"x", format_rational(g.coord(v).x)},
                                   {"y", format_rational(g.coord(v).y)}});
    }
    doc["edges"] = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.graph().edge(e);
        doc["edges"].push_back({g.graph().vertex_id(u), g.graph().vertex_id(v)});
    }
    return doc.dump(2) + "\n";
}

std::string serialize_certificate(const GeometricGraph& g, const std::string& target,
                                  const VertexMap& map,
                                  const std::optional<ThicknessColoring>& coloring) {
    auto name = canonical_name_from(target);
    if (!name) throw InputError("unknown target '" + target + "'");
    const auto& t = canonical_target(*name);
    json doc;
    doc["target"] = target;
    json m = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        m[g.graph().vertex_id(v)] = t.graph.graph().vertex_id(map[v]);
    doc["map"] = m;
    if (coloring) {
        json eps = json::object();
        eps["modulus"] = coloring->modulus;
        eps["kind"] = coloring->kind == ThicknessColoring::Kind::cycle ? "cycle" : "clique";
        json edges = json::array();
        for (int e = 0; e < g.edge_count(); ++e) {
            if (coloring->colors[e] == -1) continue;
            const auto& [u, v] = g.graph().edge(e);
            edges.push_back({{"edge", {g.graph().vertex_id(u), g.graph().vertex_id(v)}},
                             {"color", coloring->colors[e]}});
        }
        eps["edges"] = edges;
        doc["edge_coloring"] = eps;
    }
    return doc.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& json_text,
                                      const GeometricGraph& g) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("target") || !doc.contains("map"))
        throw ParseError("certificate needs 'target' and 'map'");
    CertificateDocument cert;
    cert.target = doc["target"].get<std::string>();
    for (const auto& [key, value] : doc["map"].items())
        cert.vertex_map.emplace_back(key, value.get<std::string>());
    if (doc.contains("edge_coloring")) {
        const auto& eps = doc["edge_coloring"];
        ThicknessColoring coloring;
        coloring.modulus = eps.at("modulus").get<int>();
        coloring.kind = eps.at("kind").get<std::string>() == "cycle"
                            ? ThicknessColoring::Kind::cycle
                            : ThicknessColoring::Kind::clique;
        coloring.colors.assign(g.edge_count(), -1);
        for (const auto& entry : eps.at("edges")) {
            auto u = g.graph().vertex_index(entry.at("edge").at(0).get<std::string>());
            auto v = g.graph().vertex_index(entry.at("edge").at(1).get<std::string>());
            if (!u || !v) throw ParseError("edge coloring references unknown vertex");
            auto e = g.graph().edge_index(*u, *v);
            if (!e) throw ParseError("edge coloring references unknown edge");
            coloring.colors[*e] = entry.at("color").get<int>();
        }
        cert.coloring = std::move(coloring);
    }
    return cert;
}

VertexMap certificate_to_vertex_map(const CertificateDocument& cert,
                                    const GeometricGraph& g,
                                    const GeometricGraph& target) {
    VertexMap f(g.vertex_count(), -1);
    for (const auto& [from, to] : cert.vertex_map) {
        auto u = g.graph().vertex_index(from);
        if (!u) throw ParseError("certificate maps unknown vertex '" + from + "'");
        auto h = target.graph().vertex_index(to);
        if (!h) throw ParseError("certificate maps into unknown target vertex '" + to + "'");
        f[*u] = *h;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f[v] == -1)
            throw ParseError("certificate misses vertex '" + g.graph().vertex_id(v) + "'");
    return f;
}

std::string serialize_report(const DecisionReport& report) {
    json doc;
    doc["target"] = report.target;
    doc["answer"] = report.answer;
    if (report.certificate_json)
        doc["certificate"] = parse_json(*report.certificate_json);
    else
        doc["certificate"] = nullptr;
    doc["evidence"] = report.evidence;
    if (report.oracle_agreement)
        doc["oracle_agreement"] = *report.oracle_agreement;
    else
        doc["oracle_agreement"] = nullptr;
    doc["exit_code"] = report.exit_code;
    return doc.dump(2) + "\n";
}

} // namespace geocycle
