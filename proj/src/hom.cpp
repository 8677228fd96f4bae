#include "geocycle/hom.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "geocycle/errors.hpp"

namespace geocycle {

std::string to_string(HomKind kind) {
    switch (kind) {
        case HomKind::abstract: return "abstract";
        case HomKind::geometric: return "geometric";
        case HomKind::injective_geometric: return "injective_geometric";
        case HomKind::geometric_isomorphism: return "geometric_isomorphism";
    }
    return "?";
}

void SearchBudget::tick() {
    if (--left_ < 0) throw BudgetExceededError(initial_);
}

namespace {

// Common search instance for abstract and geometric kinds. Crossing pairs
// are empty in the abstract case.
struct Instance {
    int gn = 0, hn = 0;
    std::vector<std::vector<int>> gadj, hadj;
    std::vector<std::pair<int, int>> gedges, hedges;
    std::vector<std::pair<int, int>> gcross;  // crossing edge-index pairs
    std::vector<std::vector<bool>> hadj_mat;
    // target edge index by endpoint pair, -1 if absent
    std::vector<std::vector<int>> hedge_at;
    std::vector<std::vector<bool>> hcross_mat;  // by target edge indices
    bool geometric = false;
    bool injective = false;

    void build_target_tables() {
        hadj_mat.assign(hn, std::vector<bool>(hn, false));
        hedge_at.assign(hn, std::vector<int>(hn, -1));
        for (std::size_t e = 0; e < hedges.size(); ++e) {
            auto [u, v] = hedges[e];
            hadj_mat[u][v] = hadj_mat[v][u] = true;
            hedge_at[u][v] = hedge_at[v][u] = static_cast<int>(e);
        }
        hcross_mat.assign(hedges.size(), std::vector<bool>(hedges.size(), false));
    }
};

Instance make_instance(const AbstractGraph& g, const AbstractGraph& h) {
    Instance inst;
    inst.gn = g.vertex_count();
    inst.hn = h.vertex_count();
    for (int v = 0; v < inst.gn; ++v) inst.gadj.push_back(g.neighbors(v));
    for (int v = 0; v < inst.hn; ++v) inst.hadj.push_back(h.neighbors(v));
    inst.gedges = g.edges();
    inst.hedges = h.edges();
    inst.build_target_tables();
    return inst;
}

Instance make_instance(const GeometricGraph& g, const GeometricGraph& h, HomKind kind) {
    Instance inst = make_instance(g.graph(), h.graph());
    inst.geometric = kind != HomKind::abstract;
    inst.injective =
        kind == HomKind::injective_geometric || kind == HomKind::geometric_isomorphism;
    if (inst.geometric) {
        inst.gcross.assign(g.crossings().begin(), g.crossings().end());
        for (const auto& [e, f] : h.crossings())
            inst.hcross_mat[e][f] = inst.hcross_mat[f][e] = true;
    }
    return inst;
}

// Backtracking searcher; search order is supplied by the caller so that
// find (degree-descending) and enumerate (id-lexicographic) can share it.
class Searcher {
public:
    Searcher(const Instance& inst, std::vector<int> order, SearchBudget* budget)
        : inst_(inst), order_(std::move(order)), budget_(budget),
          map_(inst.gn, -1), used_(inst.hn, false) {
        // crossing pairs indexed by the later-assigned edge for early cuts
        cross_by_edge_.resize(inst_.gedges.size());
        for (std::size_t i = 0; i < inst_.gcross.size(); ++i) {
            cross_by_edge_[inst_.gcross[i].first].push_back(static_cast<int>(i));
            cross_by_edge_[inst_.gcross[i].second].push_back(static_cast<int>(i));
        }
        edges_at_.resize(inst_.gn);
        for (std::size_t e = 0; e < inst_.gedges.size(); ++e) {
            edges_at_[inst_.gedges[e].first].push_back(static_cast<int>(e));
            edges_at_[inst_.gedges[e].second].push_back(static_cast<int>(e));
        }
    }

    // visit returns false to stop; search returns true if stopped early
    bool run(const HomVisitor& visit) { return expand(0, visit); }

private:
    int image_edge(int e) const {
        auto [u, v] = inst_.gedges[e];
        if (map_[u] < 0 || map_[v] < 0) return -1;
        return inst_.hedge_at[map_[u]][map_[v]];
    }

    bool consistent(int v) const {
        for (int u : inst_.gadj[v]) {
            if (map_[u] >= 0 && !inst_.hadj_mat[map_[u]][map_[v]]) return false;
        }
        if (!inst_.geometric) return true;
        for (int e : edges_at_[v]) {
            if (image_edge(e) < 0) continue;
            for (int ci : cross_by_edge_[e]) {
                auto [e1, e2] = inst_.gcross[ci];
                int i1 = image_edge(e1);
                int i2 = image_edge(e2);
                if (i1 >= 0 && i2 >= 0 && !inst_.hcross_mat[i1][i2]) return false;
            }
        }
        return true;
    }

    bool expand(std::size_t depth, const HomVisitor& visit) {
        if (depth == order_.size()) return !visit(map_);
        int v = order_[depth];
        for (int h = 0; h < inst_.hn; ++h) {
            if (inst_.injective && used_[h]) continue;
            if (budget_) budget_->tick();
            map_[v] = h;
            used_[h] = true;
            if (consistent(v) && expand(depth + 1, visit)) return true;
            map_[v] = -1;
            used_[h] = false;
        }
        return false;
    }

    const Instance& inst_;
    std::vector<int> order_;
    SearchBudget* budget_;
    VertexMap map_;
    std::vector<bool> used_;
    std::vector<std::vector<int>> cross_by_edge_;
    std::vector<std::vector<int>> edges_at_;
};

std::vector<int> degree_order(const Instance& inst) {
    std::vector<int> cocross_deg(inst.gn, 0);
    for (const auto& [e, f] : inst.gcross) {
        for (int v : {inst.gedges[e].first, inst.gedges[e].second,
                      inst.gedges[f].first, inst.gedges[f].second})
            ++cocross_deg[v];
    }
    std::vector<int> order(inst.gn);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.gadj[a].size() + cocross_deg[a] > inst.gadj[b].size() + cocross_deg[b];
    });
    return order;
}

std::vector<int> id_order(const std::vector<std::string>& ids) {
    std::vector<int> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ids[a] < ids[b]; });
    return order;
}

std::optional<VertexMap> search_one(const Instance& inst, std::vector<int> order,
                                    SearchBudget* budget) {
    std::optional<VertexMap> found;
    Searcher searcher(inst, std::move(order), budget);
    searcher.run([&](const VertexMap& f) {
        found = f;
        return false;
    });
    return found;
}

VerifyResult fail(std::string why) { return VerifyResult{false, std::move(why)}; }

VerifyResult verify_instance(const GeometricGraph& g, const GeometricGraph& h,
                             const VertexMap& f, HomKind kind) {
    const auto& ga = g.graph();
    const auto& ha = h.graph();
    if (static_cast<int>(f.size()) != ga.vertex_count())
        return fail("map is not total on the source vertex set");
    for (int v = 0; v < ga.vertex_count(); ++v)
        if (f[v] < 0 || f[v] >= ha.vertex_count())
            return fail("image of '" + ga.vertex_id(v) + "' is out of range");

    for (int e = 0; e < ga.edge_count(); ++e) {
        auto [u, v] = ga.edge(e);
        if (f[u] == f[v] || !ha.has_edge(f[u], f[v]))
            return fail("edge " + ga.edge_name(e) + " maps to non-edge " +
                        ha.vertex_id(f[u]) + "-" + ha.vertex_id(f[v]));
    }
    if (kind == HomKind::abstract) return {};

    auto image_edge = [&](int e) {
        auto [u, v] = ga.edge(e);
        return *ha.edge_index(f[u], f[v]);
    };
    for (const auto& [e1, e2] : g.crossings()) {
        if (!h.edges_cross(image_edge(e1), image_edge(e2)))
            return fail("crossing " + ga.edge_name(e1) + " x " + ga.edge_name(e2) +
                        " maps to non-crossing edges");
    }
    if (kind == HomKind::geometric) return {};

    for (int u = 0; u < ga.vertex_count(); ++u)
        for (int v = u + 1; v < ga.vertex_count(); ++v)
            if (f[u] == f[v])
                return fail("vertices '" + ga.vertex_id(u) + "' and '" + ga.vertex_id(v) +
                            "' have the same image");
    if (kind == HomKind::injective_geometric) return {};

    // geometric isomorphism: bijective with both conditions biconditional
    if (ga.vertex_count() != ha.vertex_count())
        return fail("orders differ, no bijection exists");
    for (int u = 0; u < ga.vertex_count(); ++u)
        for (int v = u + 1; v < ga.vertex_count(); ++v)
            if (!ga.has_edge(u, v) && ha.has_edge(f[u], f[v]))
                return fail("non-edge " + ga.vertex_id(u) + "-" + ga.vertex_id(v) +
                            " maps to an edge");
    for (int e1 = 0; e1 < ga.edge_count(); ++e1)
        for (int e2 = e1 + 1; e2 < ga.edge_count(); ++e2)
            if (!g.edges_cross(e1, e2) && h.edges_cross(image_edge(e1), image_edge(e2)))
                return fail("non-crossing pair " + ga.edge_name(e1) + ", " +
                            ga.edge_name(e2) + " maps to a crossing");
    return {};
}

} // namespace

VerifyResult verify_map(const GeometricGraph& g, const GeometricGraph& h,
                        const VertexMap& f, HomKind kind) {
    return verify_instance(g, h, f, kind);
}

VerifyResult verify_map(const AbstractGraph& g, const AbstractGraph& h,
                        const VertexMap& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        return fail("map is not total on the source vertex set");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (f[v] < 0 || f[v] >= h.vertex_count())
            return fail("image of '" + g.vertex_id(v) + "' is out of range");
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (f[u] == f[v] || !h.has_edge(f[u], f[v]))
            return fail("edge " + g.edge_name(e) + " maps to non-edge " +
                        h.vertex_id(f[u]) + "-" + h.vertex_id(f[v]));
    }
    return {};
}

std::optional<VertexMap> find_homomorphism(const GeometricGraph& g,
                                           const GeometricGraph& h, HomKind kind,
                                           SearchBudget* budget) {
    if (kind == HomKind::geometric_isomorphism) {
        // try all bijections with the biconditional check; no shortcut
        if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
            g.crossings().size() != h.crossings().size())
            return std::nullopt;
        std::optional<VertexMap> found;
        Instance inst = make_instance(g, h, HomKind::injective_geometric);
        Searcher searcher(inst, id_order(g.graph().vertex_ids()), budget);
        searcher.run([&](const VertexMap& f) {
            if (verify_instance(g, h, f, HomKind::geometric_isomorphism)) {
                found = f;
                return false;
            }
            return true;
        });
        return found;
    }
    Instance inst = make_instance(g, h, kind);
    return search_one(inst, degree_order(inst), budget);
}

std::optional<VertexMap> find_homomorphism(const AbstractGraph& g,
                                           const AbstractGraph& h,
                                           SearchBudget* budget) {
    Instance inst = make_instance(g, h);
    return search_one(inst, degree_order(inst), budget);
}

void enumerate_homomorphisms(const GeometricGraph& g, const GeometricGraph& h,
                             HomKind kind, const HomVisitor& visit,
                             SearchBudget* budget) {
    Instance inst = make_instance(g, h, kind);
    Searcher searcher(inst, id_order(g.graph().vertex_ids()), budget);
    if (kind == HomKind::geometric_isomorphism) {
        searcher.run([&](const VertexMap& f) {
            if (verify_instance(g, h, f, kind)) return visit(f);
            return true;
        });
        return;
    }
    searcher.run(visit);
}

void enumerate_homomorphisms(const AbstractGraph& g, const AbstractGraph& h,
                             const HomVisitor& visit, SearchBudget* budget) {
    Instance inst = make_instance(g, h);
    Searcher searcher(inst, id_order(g.vertex_ids()), budget);
    searcher.run(visit);
}

std::set<std::pair<int, int>> identifiable_pairs(const GeometricGraph& g) {
    auto cocross = co_crossing_pairs(g);
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.graph().has_edge(u, v)) continue;
            if (cocross.count({u, v})) continue;
            out.insert({u, v});
        }
    }
    return out;
}

AbstractGraph strong_product(const AbstractGraph& a, const AbstractGraph& b) {
    AbstractGraph p;
    for (int u = 0; u < a.vertex_count(); ++u)
        for (int v = 0; v < b.vertex_count(); ++v)
            p.add_vertex(a.vertex_id(u) + "|" + b.vertex_id(v));
    auto index = [&](int u, int v) { return u * b.vertex_count() + v; };
    auto close = [](const AbstractGraph& g, int x, int y) {
        return x == y || g.has_edge(x, y);
    };
    int n = p.vertex_count();
    for (int i = 0; i < n; ++i) {
        int u1 = i / b.vertex_count(), v1 = i % b.vertex_count();
        for (int j = i + 1; j < n; ++j) {
            int u2 = j / b.vertex_count(), v2 = j % b.vertex_count();
            if (close(a, u1, u2) && close(b, v1, v2)) p.add_edge(index(u1, v1), index(u2, v2));
        }
    }
    return p;
}

namespace {

bool k_colorable(const AbstractGraph& g, int k) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(n, -1);
    // symmetry breaking: a vertex may only open one new color
    std::function<bool(int, int)> assign = [&](int i, int used) {
        if (i == n) return true;
        int v = order[i];
        unsigned forbidden = 0;
        for (int u : g.neighbors(v))
            if (color[u] >= 0) forbidden |= 1u << color[u];
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (forbidden & (1u << c)) continue;
            color[v] = c;
            if (assign(i + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return assign(0, 0);
}

} // namespace

std::optional<int> chromatic_number(const AbstractGraph& g, int cap) {
    if (cap > 8) throw std::invalid_argument("chromatic_number cap must be at most 8");
    if (g.vertex_count() == 0) return 0;
    for (int k = 1; k <= cap; ++k)
        if (k_colorable(g, k)) return k;
    return std::nullopt;
}

} // namespace geocycle
