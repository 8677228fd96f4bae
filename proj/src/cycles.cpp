#include "geocycle/cycles.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "geocycle/errors.hpp"

namespace geocycle {

std::string to_string(CanonicalName name) {
    switch (name) {
        case CanonicalName::C3_plane: return "C3_plane";
        case CanonicalName::C4_plane: return "C4_plane";
        case CanonicalName::C4_crossed: return "C4_crossed";
        case CanonicalName::C5_convex: return "C5_convex";
        case CanonicalName::K5_convex: return "K5_convex";
    }
    return "?";
}

std::optional<CanonicalName> canonical_name_from(const std::string& text) {
    if (text == "C3_plane" || text == "c3") return CanonicalName::C3_plane;
    if (text == "C4_plane") return CanonicalName::C4_plane;
    if (text == "C4_crossed" || text == "c4") return CanonicalName::C4_crossed;
    if (text == "C5_convex" || text == "c5") return CanonicalName::C5_convex;
    if (text == "K5_convex" || text == "k5") return CanonicalName::K5_convex;
    return std::nullopt;
}

namespace {

Point parabola(int j) { return Point(Rational(j), Rational(j * j)); }

GeometricGraph cycle_drawing(int n, const std::vector<int>& position_of_vertex) {
    AbstractGraph g = make_cycle(n);
    std::vector<Point> coords;
    coords.reserve(n);
    for (int k = 0; k < n; ++k) coords.push_back(parabola(position_of_vertex[k]));
    return GeometricGraph(std::move(g), std::move(coords));
}

CanonicalTarget build_target(CanonicalName name) {
    switch (name) {
        case CanonicalName::C3_plane: {
            AbstractGraph g = make_cycle(3);
            std::vector<Point> coords{Point(0, 0), Point(1, 0), Point(0, 1)};
            return {name, GeometricGraph(std::move(g), std::move(coords)), {}, {}};
        }
        case CanonicalName::C4_plane:
            return {name, cycle_drawing(4, {0, 1, 2, 3}), {}, {}};
        case CanonicalName::C4_crossed:
            // convex points visited out of convex order: one crossing,
            // between the cycle edges 1-2 and 3-0
            return {name, cycle_drawing(4, {0, 1, 3, 2}), {}, {}};
        case CanonicalName::C5_convex: {
            // vertex k sits at convex position 2k mod 5, so consecutive
            // cycle vertices are two convex steps apart and every edge
            // crosses exactly its two non-neighbors
            CanonicalTarget t{name, cycle_drawing(5, {0, 2, 4, 1, 3}), {}, {}};
            t.vertex_labels = {0, 1, 2, 3, 4};
            for (int e = 0; e < 5; ++e) {
                int k = t.graph.graph().edge(e).first;  // edge {k, k+1}
                if ((k + 1) % 5 != t.graph.graph().edge(e).second) k = t.graph.graph().edge(e).second;
                t.edge_labels.push_back(((3 * k - 1) % 5 + 5) % 5);
            }
            return t;
        }
        case CanonicalName::K5_convex: {
            AbstractGraph g = make_clique(5);
            std::vector<Point> coords;
            for (int j = 0; j < 5; ++j) coords.push_back(parabola(j));
            return {name, GeometricGraph(std::move(g), std::move(coords)), {}, {}};
        }
    }
    throw std::logic_error("unknown canonical target");
}

} // namespace

const CanonicalTarget& canonical_target(CanonicalName name) {
    static const std::array<CanonicalTarget, 5> cache = {
        build_target(CanonicalName::C3_plane), build_target(CanonicalName::C4_plane),
        build_target(CanonicalName::C4_crossed), build_target(CanonicalName::C5_convex),
        build_target(CanonicalName::K5_convex)};
    return cache[static_cast<int>(name)];
}

void validate_coloring(const GeometricGraph& g, const ThicknessColoring& eps) {
    if (static_cast<int>(eps.colors.size()) != g.edge_count())
        throw InvalidColoringError("color count does not match edge count");
    if (eps.modulus <= 0) throw InvalidColoringError("modulus must be positive");
    for (int e = 0; e < g.edge_count(); ++e)
        if (eps.colors[e] != -1 && (eps.colors[e] < 0 || eps.colors[e] >= eps.modulus))
            throw InvalidColoringError("color of edge " + g.graph().edge_name(e) +
                                       " out of range");
    for (const auto& [e, f] : g.crossings()) {
        int ce = eps.colors[e], cf = eps.colors[f];
        if (ce == -1 || cf == -1)
            throw InvalidColoringError("crossing edge left uncolored");
        if (eps.kind == ThicknessColoring::Kind::clique) {
            if (ce == cf)
                throw InvalidColoringError("crossing edges " + g.graph().edge_name(e) +
                                           " and " + g.graph().edge_name(f) +
                                           " share color " + std::to_string(ce));
        } else {
            int d = ((ce - cf) % eps.modulus + eps.modulus) % eps.modulus;
            if (d != 1 && d != eps.modulus - 1)
                throw InvalidColoringError("crossing edges " + g.graph().edge_name(e) +
                                           " and " + g.graph().edge_name(f) +
                                           " have non-consecutive colors");
        }
    }
}

int thickness(const GeometricGraph& g) {
    if (g.edge_count() == 0) return 0;
    AbstractGraph ex = edge_crossing_graph(g);
    auto chi = chromatic_number(ex, 8);
    if (!chi) throw std::runtime_error("thickness exceeds 8");
    return *chi;
}

std::vector<MonochromaticSubgraph> monochromatic_subgraphs(const GeometricGraph& g,
                                                           const ThicknessColoring& eps) {
    validate_coloring(g, eps);
    std::map<int, MonochromaticSubgraph> by_color;
    for (int e = 0; e < g.edge_count(); ++e) {
        int c = eps.colors[e];
        if (c == -1) continue;
        auto& sub = by_color.try_emplace(c, MonochromaticSubgraph{c, {}, {}}).first->second;
        sub.edges.push_back(e);
    }
    std::vector<MonochromaticSubgraph> out;
    for (auto& [c, sub] : by_color) {
        std::set<int> vs;
        for (int e : sub.edges) {
            vs.insert(g.graph().edge(e).first);
            vs.insert(g.graph().edge(e).second);
        }
        sub.vertices.assign(vs.begin(), vs.end());
        out.push_back(std::move(sub));
    }
    return out;
}

namespace {

void require_no_isolated(const GeometricGraph& g, const char* op) {
    auto isolated = g.graph().isolated_vertices();
    if (!isolated.empty())
        throw IsolatedVertexError(std::string(op) + " requires a drawing without isolated vertices ('" +
                                  g.graph().vertex_id(isolated.front()) + "' is isolated)");
}

Decision no_decision(std::vector<std::string> lines) {
    Decision d;
    d.yes = false;
    d.evidence.lines = std::move(lines);
    return d;
}

Decision yes_decision(const GeometricGraph& g, CanonicalName target, VertexMap f,
                      Evidence evidence) {
    const auto& t = canonical_target(target);
    auto check = verify_map(g, t.graph, f, HomKind::geometric);
    if (!check)
        throw std::logic_error("constructed certificate failed verification: " +
                               check.violation);
    Decision d;
    d.yes = true;
    d.certificate = std::move(f);
    d.evidence = std::move(evidence);
    return d;
}

// Certificate table for the crossed C4: the image is chosen from the
// bipartition class of the vertex and the side of its crossing component,
// so that the two component sides land on the crossing edge pair 1-2, 3-0.
int c4_image(int gpart, int cpart) {
    static const int table[2][2] = {{2, 0}, {1, 3}};
    return table[gpart][cpart];
}

} // namespace

Decision decide_c3(const GeometricGraph& g, SearchBudget* budget) {
    require_no_isolated(g, "decide_c3");
    if (!g.is_plane()) {
        auto [e, f] = *g.crossings().begin();
        return no_decision({"drawing is not plane: " + g.graph().edge_name(e) + " crosses " +
                            g.graph().edge_name(f)});
    }
    const auto& triangle = canonical_target(CanonicalName::C3_plane);
    auto coloring = find_homomorphism(g.graph(), triangle.graph.graph(), budget);
    if (!coloring)
        return no_decision({"underlying graph admits no proper 3-coloring"});
    Evidence ev;
    ev.lines.push_back("plane drawing with a 3-coloring of the underlying graph");
    return yes_decision(g, CanonicalName::C3_plane, *coloring, std::move(ev));
}

Decision decide_c4_thm1(const GeometricGraph& g, SearchBudget*) {
    require_no_isolated(g, "decide_c4_thm1");
    auto gpart = g.graph().bipartition();
    if (!gpart) return no_decision({"underlying graph is not bipartite"});

    auto cx = crossing_component_graph(g);
    for (std::size_t c = 0; c < cx.components.size(); ++c) {
        if (cx.components[c].internal_crossing)
            return no_decision({"crossing component X" + std::to_string(c) +
                                " is not a plane subgraph"});
    }
    auto cpart = cx.graph.bipartition();
    if (!cpart) return no_decision({"crossing component graph is not bipartite"});

    VertexMap f(g.vertex_count());
    std::vector<int> comp_of_vertex(g.vertex_count(), -1);
    for (std::size_t c = 0; c < cx.components.size(); ++c)
        for (int v : cx.components[c].vertices) comp_of_vertex[v] = static_cast<int>(c);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int side = comp_of_vertex[v] == -1 ? 0 : (*cpart)[comp_of_vertex[v]];
        f[v] = c4_image((*gpart)[v], side);
    }
    Evidence ev;
    ev.lines.push_back("bipartite, plane crossing components, bipartite component graph");
    return yes_decision(g, CanonicalName::C4_crossed, std::move(f), std::move(ev));
}

Decision decide_c4_thm2(const GeometricGraph& g, SearchBudget* budget) {
    require_no_isolated(g, "decide_c4_thm2");
    auto gpart = g.graph().bipartition();
    if (!gpart) return no_decision({"underlying graph is not bipartite"});

    auto cx = crossing_component_graph(g);
    int k = static_cast<int>(cx.components.size());
    if (k > 24)
        throw std::runtime_error("too many crossing components for exhaustive 2-coloring");

    // Disjoint monochromatic subgraphs force a per-component coloring, so
    // searching component colorings is exhaustive.
    for (long mask = 0; mask < (1L << k); ++mask) {
        if (budget) budget->tick();
        auto color_of = [&](int e) { return (mask >> cx.component_of_edge(e)) & 1; };
        bool valid = true;
        for (const auto& [e, f] : g.crossings())
            if (color_of(e) == color_of(f)) { valid = false; break; }
        if (!valid) continue;

        std::array<std::set<int>, 2> vertex_sets;
        for (int c = 0; c < k; ++c)
            for (int v : cx.components[c].vertices)
                vertex_sets[(mask >> c) & 1].insert(v);
        bool disjoint = true;
        for (int v : vertex_sets[0])
            if (vertex_sets[1].count(v)) { disjoint = false; break; }
        if (!disjoint) continue;

        VertexMap f(g.vertex_count());
        std::vector<int> comp_of_vertex(g.vertex_count(), -1);
        for (int c = 0; c < k; ++c)
            for (int v : cx.components[c].vertices) comp_of_vertex[v] = c;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int side = comp_of_vertex[v] == -1 ? 0 : static_cast<int>((mask >> comp_of_vertex[v]) & 1);
            f[v] = c4_image((*gpart)[v], side);
        }
        Evidence ev;
        ev.lines.push_back("thickness edge 2-coloring with vertex-disjoint monochromatic subgraphs");
        ThicknessColoring eps;
        eps.kind = ThicknessColoring::Kind::clique;
        eps.modulus = 2;
        eps.colors.assign(g.edge_count(), -1);
        for (int c = 0; c < k; ++c)
            for (int e : cx.components[c].edges) eps.colors[e] = static_cast<int>((mask >> c) & 1);
        ev.coloring = std::move(eps);
        return yes_decision(g, CanonicalName::C4_crossed, std::move(f), std::move(ev));
    }
    return no_decision({"no thickness edge 2-coloring has vertex-disjoint monochromatic subgraphs"});
}

namespace {

constexpr int kMod = 5;

int mod5(int x) { return ((x % kMod) + kMod) % kMod; }

// colors of already-colored edges at v, deduplicated
std::vector<int> colors_at(const GeometricGraph& g, const std::vector<int>& color, int v) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (color[e] == -1) continue;
        if (g.graph().edge(e).first != v && g.graph().edge(e).second != v) continue;
        if (std::find(out.begin(), out.end(), color[e]) == out.end()) out.push_back(color[e]);
    }
    return out;
}

// Conditions (1) and (2): at most two subgraph memberships per vertex,
// with non-consecutive colors.
bool vertex_conditions_ok(const GeometricGraph& g, const std::vector<int>& color, int v) {
    auto cs = colors_at(g, color, v);
    if (cs.size() > 2) return false;
    if (cs.size() == 2) {
        int d = mod5(cs[0] - cs[1]);
        if (d == 1 || d == 4) return false;
    }
    return true;
}

// Condition (3): every monochromatic subgraph is bipartite with a
// partition putting (i+2)-shared vertices on one side and (i+3)-shared on
// the other. Fills the partition choice used by the certificate.
bool condition3(const GeometricGraph& g, const std::vector<int>& color, C5Partitions& parts) {
    parts.components.clear();
    std::vector<std::vector<int>> vertex_colors(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        for (int v : {g.graph().edge(e).first, g.graph().edge(e).second}) {
            auto& vc = vertex_colors[v];
            if (std::find(vc.begin(), vc.end(), color[e]) == vc.end())
                vc.push_back(color[e]);
        }
    auto has_color = [&](int v, int c) {
        const auto& vc = vertex_colors[v];
        return std::find(vc.begin(), vc.end(), c) != vc.end();
    };

    for (int i = 0; i < kMod; ++i) {
        // adjacency restricted to edges of color i
        std::vector<std::vector<int>> adj(g.vertex_count());
        std::vector<int> members;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (color[e] != i) continue;
            auto [u, v] = g.graph().edge(e);
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!adj[v].empty()) members.push_back(v);

        std::vector<int> side(g.vertex_count(), -1);
        for (int s : members) {
            if (side[s] != -1) continue;
            side[s] = 0;
            std::deque<int> queue{s};
            std::vector<int> component{s};
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : adj[u]) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                        component.push_back(w);
                    } else if (side[w] == side[u]) {
                        return false;  // odd cycle in the i-subgraph
                    }
                }
            }
            // orientation: vertices shared with the (i+2)-subgraph must sit
            // on one side, those shared with the (i+3)-subgraph on the other
            std::set<int> plus2_sides, plus3_sides;
            for (int v : component) {
                if (has_color(v, mod5(i + 2))) plus2_sides.insert(side[v]);
                if (has_color(v, mod5(i + 3))) plus3_sides.insert(side[v]);
            }
            int chosen = -1;
            for (int s0 : {0, 1}) {
                bool ok2 = plus2_sides.empty() ||
                           (plus2_sides.size() == 1 && *plus2_sides.begin() == s0);
                bool ok3 = plus3_sides.empty() ||
                           (plus3_sides.size() == 1 && *plus3_sides.begin() == 1 - s0);
                if (ok2 && ok3) { chosen = s0; break; }
            }
            if (chosen == -1) return false;
            C5Partitions::Component part;
            part.color = i;
            std::sort(component.begin(), component.end());
            for (int v : component)
                (side[v] == chosen ? part.plus2_side : part.plus3_side).push_back(v);
            parts.components.push_back(std::move(part));
        }
    }
    return true;
}

// Sanity check asserted on every accepted cycle coloring with modulus > 3.
void assert_no_crossing_triangle(const GeometricGraph& g) {
    std::vector<int> ce = g.crossing_edges();
    for (std::size_t a = 0; a < ce.size(); ++a)
        for (std::size_t b = a + 1; b < ce.size(); ++b)
            for (std::size_t c = b + 1; c < ce.size(); ++c)
                if (g.edges_cross(ce[a], ce[b]) && g.edges_cross(ce[b], ce[c]) &&
                    g.edges_cross(ce[a], ce[c]))
                    throw std::logic_error(
                        "accepted a C5-coloring on a drawing with three mutually crossing edges");
}

} // namespace

VertexMap construct_c5_certificate(const GeometricGraph& g, const ThicknessColoring& eps,
                                   const C5Partitions& partitions) {
    if (eps.kind != ThicknessColoring::Kind::cycle || eps.modulus != kMod)
        throw std::logic_error("certificate construction expects a C5 coloring");
    VertexMap f(g.vertex_count(), -1);
    std::vector<std::vector<int>> vertex_colors(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (eps.colors[e] == -1)
            throw std::logic_error("certificate construction needs a total coloring");
        for (int v : {g.graph().edge(e).first, g.graph().edge(e).second}) {
            auto& vc = vertex_colors[v];
            if (std::find(vc.begin(), vc.end(), eps.colors[e]) == vc.end())
                vc.push_back(eps.colors[e]);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& vc = vertex_colors[v];
        if (vc.empty())
            throw std::logic_error("vertex '" + g.graph().vertex_id(v) +
                                   "' is in no monochromatic subgraph");
        if (vc.size() > 2)
            throw std::logic_error("vertex '" + g.graph().vertex_id(v) +
                                   "' is in more than two monochromatic subgraphs");
        if (vc.size() == 2) {
            int d = mod5(vc[0] - vc[1]);
            if (d == 1 || d == 4)
                throw std::logic_error("intersecting subgraphs have consecutive colors");
            f[v] = mod5(vc[0] + vc[1]);
        }
    }
    for (const auto& part : partitions.components) {
        for (int v : part.plus2_side)
            if (f[v] == -1) f[v] = mod5(2 * part.color + 2);
        for (int v : part.plus3_side)
            if (f[v] == -1) f[v] = mod5(2 * part.color + 3);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f[v] == -1)
            throw std::logic_error("partition choice does not cover vertex '" +
                                   g.graph().vertex_id(v) + "'");

    // translate labels to vertex indices of the canonical convex C5
    const auto& target = canonical_target(CanonicalName::C5_convex);
    std::array<int, kMod> index_of_label{};
    for (int v = 0; v < kMod; ++v) index_of_label[target.vertex_labels[v]] = v;
    for (auto& image : f) image = index_of_label[image];
    return f;
}

Decision decide_c5(const GeometricGraph& g, SearchBudget* budget) {
    require_no_isolated(g, "decide_c5");
    SearchBudget local_budget;
    SearchBudget* bud = budget ? budget : &local_budget;

    // crossing part of EX; its homomorphisms to C5 are the coloring seeds
    std::vector<int> ce = g.crossing_edges();
    std::vector<int> nce;
    {
        std::set<int> in_ce(ce.begin(), ce.end());
        for (int e = 0; e < g.edge_count(); ++e)
            if (!in_ce.count(e)) nce.push_back(e);
    }
    AbstractGraph exx;
    for (int e : ce) exx.add_vertex(g.graph().edge_name(e));
    {
        std::map<int, int> pos;
        for (std::size_t i = 0; i < ce.size(); ++i) pos[ce[i]] = static_cast<int>(i);
        for (const auto& [e, f] : g.crossings()) exx.add_edge(pos[e], pos[f]);
    }
    AbstractGraph c5 = make_cycle(kMod);

    long long seeds = 0;
    std::optional<Decision> result;
    std::vector<int> color(g.edge_count(), -1);

    // extend a seed coloring over the non-crossing edges, then test (3)
    std::function<bool(std::size_t)> extend = [&](std::size_t idx) -> bool {
        if (idx == nce.size()) {
            C5Partitions parts;
            if (!condition3(g, color, parts)) return false;
            assert_no_crossing_triangle(g);
            ThicknessColoring eps;
            eps.kind = ThicknessColoring::Kind::cycle;
            eps.modulus = kMod;
            eps.colors = color;
            VertexMap f = construct_c5_certificate(g, eps, parts);
            Evidence ev;
            ev.lines.push_back("thickness edge C5-coloring satisfying the three subgraph conditions");
            ev.coloring = eps;
            result = yes_decision(g, CanonicalName::C5_convex, std::move(f), std::move(ev));
            return true;
        }
        int e = nce[idx];
        auto [u, v] = g.graph().edge(e);
        for (int c = 0; c < kMod; ++c) {
            bud->tick();
            color[e] = c;
            if (vertex_conditions_ok(g, color, u) && vertex_conditions_ok(g, color, v) &&
                extend(idx + 1))
                return true;
            color[e] = -1;
        }
        return false;
    };

    enumerate_homomorphisms(exx, c5, [&](const VertexMap& seed) {
        ++seeds;
        for (std::size_t i = 0; i < ce.size(); ++i) color[ce[i]] = seed[i];
        bool done = false;
        bool vertex_ok = true;
        for (int v = 0; v < g.vertex_count() && vertex_ok; ++v)
            vertex_ok = vertex_conditions_ok(g, color, v);
        if (vertex_ok) done = extend(0);
        for (int e : ce) color[e] = -1;
        std::fill(color.begin(), color.end(), -1);
        return !done;
    }, bud);

    if (result) return *result;
    return no_decision({"no thickness edge C5-coloring satisfies the subgraph conditions (" +
                        std::to_string(seeds) + " colorings of the crossing part examined)"});
}

Decision decide_k5(const GeometricGraph& g, SearchBudget* budget) {
    const auto& target = canonical_target(CanonicalName::K5_convex);
    auto f = find_homomorphism(g, target.graph, HomKind::geometric, budget);
    if (!f)
        return no_decision({"exhaustive search found no geometric homomorphism into the convex K5"});
    Evidence ev;
    ev.lines.push_back("geometric homomorphism into the convex K5 found by search");
    return yes_decision(g, CanonicalName::K5_convex, std::move(*f), std::move(ev));
}

K5NecessaryReport check_k5_necessary(const GeometricGraph& g, SearchBudget* budget) {
    auto sub = crossing_subgraph(g);
    Decision d = decide_c5(sub.drawing, budget);
    K5NecessaryReport report{d.yes ? K5Verdict::inconclusive : K5Verdict::not_5_geocolorable,
                             std::move(d)};
    return report;
}

} // namespace geocycle
