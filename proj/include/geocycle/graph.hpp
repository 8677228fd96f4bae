#ifndef GEOCYCLE_GRAPH_HPP
#define GEOCYCLE_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geocycle {

// Simple undirected graph. Vertices carry stable string ids assigned at
// load; internally everything runs on dense indices. Edges are stored as
// index pairs (u < v) in insertion order, which keeps derived structures
// (edge-crossing graph, colorings, certificates) deterministic.
class AbstractGraph {
public:
    AbstractGraph() = default;

    int add_vertex(const std::string& id);
    // Throws InputError on loops, duplicate edges or unknown endpoints.
    int add_edge(int u, int v);
    int add_edge(const std::string& u, const std::string& v);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int v) const { return ids_[v]; }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    std::optional<int> vertex_index(const std::string& id) const;

    const std::pair<int, int>& edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::string edge_name(int e) const;
    std::optional<int> edge_index(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

    std::vector<int> isolated_vertices() const;

    // 2-coloring with no monochromatic edge, or nullopt if an odd cycle
    // exists. Each connected component is colored independently with its
    // smallest-index vertex in class 0.
    std::optional<std::vector<int>> bipartition() const;

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const;

    bool same_labeled_graph(const AbstractGraph& other) const;

private:
    std::vector<std::string> ids_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Convenience constructors used by targets and tests.
AbstractGraph make_cycle(int n, const std::string& prefix = "");
AbstractGraph make_clique(int n, const std::string& prefix = "");
AbstractGraph make_path(int n, const std::string& prefix = "");

} // namespace geocycle

#endif
