#include "geocycle/graph.hpp"

#include <algorithm>
#include <deque>

#include "geocycle/errors.hpp"

namespace geocycle {

int AbstractGraph::add_vertex(const std::string& id) {
    if (vertex_index(id))
        throw InputError("duplicate vertex id '" + id + "'");
    ids_.push_back(id);
    adj_.emplace_back();
    return vertex_count() - 1;
}

int AbstractGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop at vertex '" + ids_[u] + "'");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
        throw InputError("duplicate edge " + ids_[u] + "-" + ids_[v]);
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return edge_count() - 1;
}

int AbstractGraph::add_edge(const std::string& u, const std::string& v) {
    auto iu = vertex_index(u);
    auto iv = vertex_index(v);
    if (!iu) throw InputError("unknown vertex '" + u + "'");
    if (!iv) throw InputError("unknown vertex '" + v + "'");
    return add_edge(*iu, *iv);
}

std::optional<int> AbstractGraph::vertex_index(const std::string& id) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (ids_[v] == id) return v;
    return std::nullopt;
}

std::string AbstractGraph::edge_name(int e) const {
    const auto& [u, v] = edges_[e];
    return ids_[u] + "-" + ids_[v];
}

std::optional<int> AbstractGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].first == u && edges_[e].second == v) return e;
    return std::nullopt;
}

std::vector<int> AbstractGraph::isolated_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (adj_[v].empty()) out.push_back(v);
    return out;
}

std::optional<std::vector<int>> AbstractGraph::bipartition() const {
    std::vector<int> color(vertex_count(), -1);
    for (int s = 0; s < vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<std::vector<int>> AbstractGraph::components() const {
    std::vector<int> comp(vertex_count(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::deque<int> queue{s};
        comp[s] = c;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            out[c].push_back(u);
            for (int v : adj_[u])
                if (comp[v] == -1) {
                    comp[v] = c;
                    queue.push_back(v);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

bool AbstractGraph::same_labeled_graph(const AbstractGraph& other) const {
    if (ids_ != other.ids_) return false;
    auto key = [](std::vector<std::pair<int, int>> es) {
        std::sort(es.begin(), es.end());
        return es;
    };
    return key(edges_) == key(other.edges_);
}

AbstractGraph make_cycle(int n, const std::string& prefix) {
    AbstractGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

AbstractGraph make_clique(int n, const std::string& prefix) {
    AbstractGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

AbstractGraph make_path(int n, const std::string& prefix) {
    AbstractGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

} // namespace geocycle
