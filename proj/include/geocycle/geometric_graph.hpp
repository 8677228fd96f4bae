#ifndef GEOCYCLE_GEOMETRIC_GRAPH_HPP
#define GEOCYCLE_GEOMETRIC_GRAPH_HPP

#include <set>
#include <utility>
#include <vector>

#include "geocycle/geometry.hpp"
#include "geocycle/graph.hpp"

namespace geocycle {

// Unordered pairs of edge indices whose straight segments properly cross.
using CrossingSet = std::set<std::pair<int, int>>;

// A simple graph drawn with straight-line edges, vertices in general
// position. Construction validates general position and throws on
// violation; isolated vertices are legal but recorded as a warning
// (the cycle deciders reject them separately).
class GeometricGraph {
public:
    GeometricGraph(AbstractGraph graph, std::vector<Point> coords);

    const AbstractGraph& graph() const { return graph_; }
    const std::vector<Point>& coords() const { return coords_; }
    const Point& coord(int v) const { return coords_[v]; }
    Segment segment(int e) const;

    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

    const CrossingSet& crossings() const { return crossings_; }
    bool is_plane() const { return crossings_.empty(); }
    bool edges_cross(int e, int f) const;

    // Edge indices that participate in at least one crossing, ascending.
    std::vector<int> crossing_edges() const;

    bool has_isolated_vertices() const { return !graph_.isolated_vertices().empty(); }

private:
    AbstractGraph graph_;
    std::vector<Point> coords_;
    CrossingSet crossings_;
};

// Recomputes the crossing pair set from scratch (the constructor caches it).
CrossingSet crossing_set(const GeometricGraph& g);

// EX(G): one vertex per edge of the drawing, named by edge name, adjacent
// when the edges cross. Non-crossing edges become isolated vertices.
AbstractGraph edge_crossing_graph(const GeometricGraph& g);

// The geometric subgraph induced by the crossing edges, coordinates
// inherited. `vertex_origin[i]` / `edge_origin[i]` map its indices back to
// the source drawing.
struct CrossingSubgraph {
    GeometricGraph drawing;
    std::vector<int> vertex_origin;
    std::vector<int> edge_origin;
};
CrossingSubgraph crossing_subgraph(const GeometricGraph& g);

// One vertex per connected component of the crossing subgraph; edges
// between components whose member edges cross. A component that crosses
// itself is flagged rather than given a loop.
struct CrossingComponents {
    struct Component {
        std::vector<int> edges;     // edge indices of the source drawing
        std::vector<int> vertices;  // vertex indices of the source drawing
        bool internal_crossing = false;
    };
    AbstractGraph graph;  // vertex ids "X0", "X1", ...
    std::vector<Component> components;
    int component_of_edge(int e) const;

private:
    friend CrossingComponents crossing_component_graph(const GeometricGraph&);
    std::vector<int> edge_component_;
};
CrossingComponents crossing_component_graph(const GeometricGraph& g);

// All vertex pairs {u, v} such that an edge at u crosses an edge at v.
std::set<std::pair<int, int>> co_crossing_pairs(const GeometricGraph& g);

} // namespace geocycle

#endif
