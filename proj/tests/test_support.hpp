#ifndef GEOCYCLE_TEST_SUPPORT_HPP
#define GEOCYCLE_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "geocycle/cycles.hpp"
#include "geocycle/errors.hpp"
#include "geocycle/io.hpp"

namespace geocycle::testing {

inline GeometricGraph drawing_from(const std::vector<std::pair<long, long>>& pts,
                                   const std::vector<std::pair<int, int>>& edges,
                                   const std::string& prefix = "v") {
    AbstractGraph g;
    std::vector<Point> coords;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        g.add_vertex(prefix + std::to_string(i));
        coords.emplace_back(Rational(pts[i].first), Rational(pts[i].second));
    }
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return GeometricGraph(std::move(g), std::move(coords));
}

inline GeometricGraph load_fixture(const std::string& name) {
    return load_geometric_graph(std::string(GEOCYCLE_FIXTURE_DIR) + "/" + name).drawing;
}

// Canonical targets, short names.
inline const GeometricGraph& c3_plane() {
    return canonical_target(CanonicalName::C3_plane).graph;
}
inline const GeometricGraph& c4_plane() {
    return canonical_target(CanonicalName::C4_plane).graph;
}
inline const GeometricGraph& c4_crossed() {
    return canonical_target(CanonicalName::C4_crossed).graph;
}
inline const GeometricGraph& c5_convex() {
    return canonical_target(CanonicalName::C5_convex).graph;
}
inline const GeometricGraph& k5_convex() {
    return canonical_target(CanonicalName::K5_convex).graph;
}

// The plane convex realization of C5 (not a canonical target).
inline GeometricGraph c5_plane() {
    return drawing_from({{0, 0}, {1, 1}, {2, 4}, {3, 9}, {4, 16}},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// Deterministic corpus of random drawings: 4-7 vertices, 4-9 edges,
// integer coordinates in a small box, general position, no isolated
// vertices. Self-contained so that expected values do not depend on
// library internals.
class CorpusGenerator {
public:
    explicit CorpusGenerator(std::uint64_t seed, long box = 50) : rng_(seed), box_(box) {}

    GeometricGraph next() {
        for (;;) {
            int n = 4 + static_cast<int>(rng_() % 4);
            int max_edges = n * (n - 1) / 2;
            int m = 4 + static_cast<int>(rng_() % 6);
            if (m > max_edges) m = max_edges;

            std::vector<std::pair<int, int>> all;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
            for (std::size_t i = all.size(); i > 1; --i)
                std::swap(all[i - 1], all[rng_() % i]);
            std::vector<std::pair<int, int>> edges(all.begin(), all.begin() + m);

            std::vector<int> degree(n, 0);
            for (const auto& [u, v] : edges) {
                ++degree[u];
                ++degree[v];
            }
            bool covered = true;
            for (int v = 0; v < n; ++v)
                if (degree[v] == 0) covered = false;
            if (!covered) continue;

            std::vector<Point> pts;
            for (int i = 0; i < n; ++i)
                pts.emplace_back(Rational(static_cast<long>(rng_() % (box_ + 1))),
                                 Rational(static_cast<long>(rng_() % (box_ + 1))));
            bool distinct = true;
            for (int i = 0; i < n && distinct; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (pts[i] == pts[j]) { distinct = false; break; }
            if (!distinct) continue;
            try {
                if (!validate_general_position(pts, edges).ok()) continue;
            } catch (const DegeneracyError&) {
                continue;
            }

            AbstractGraph g;
            for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
            for (const auto& [u, v] : edges) g.add_edge(u, v);
            return GeometricGraph(std::move(g), std::move(pts));
        }
    }

private:
    std::mt19937_64 rng_;
    long box_;
};

} // namespace geocycle::testing

#endif
