#include "geocycle/realizations.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "geocycle/errors.hpp"

namespace geocycle {

namespace {

// All automorphisms of a small graph, by brute force over permutations.
std::vector<std::vector<int>> automorphisms(const AbstractGraph& g) {
    int n = g.vertex_count();
    std::set<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (const auto& [u, v] : edges) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            if (!edges.count({a, b})) { ok = false; break; }
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

std::string crossing_signature(const GeometricGraph& g) {
    const auto& ga = g.graph();
    static std::map<std::string, std::vector<std::vector<int>>> auto_cache;
    std::string graph_key;
    {
        std::ostringstream key;
        key << ga.vertex_count();
        for (const auto& [u, v] : ga.edges()) key << ';' << u << ',' << v;
        graph_key = key.str();
    }
    auto it = auto_cache.find(graph_key);
    if (it == auto_cache.end())
        it = auto_cache.emplace(graph_key, automorphisms(ga)).first;
    const auto& autos = it->second;

    std::string best;
    for (const auto& perm : autos) {
        std::set<std::pair<int, int>> mapped;
        for (const auto& [e, f] : g.crossings()) {
            auto map_edge = [&](int k) {
                auto [u, v] = ga.edge(k);
                return *ga.edge_index(perm[u], perm[v]);
            };
            int a = map_edge(e), b = map_edge(f);
            if (a > b) std::swap(a, b);
            mapped.insert({a, b});
        }
        std::ostringstream sig;
        for (const auto& [a, b] : mapped) sig << a << 'x' << b << ';';
        std::string s = mapped.empty() ? "plane" : sig.str();
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::vector<RealizationClass> sample_realizations(const AbstractGraph& graph,
                                                  long long trials, std::uint64_t seed) {
    if (graph.vertex_count() > 7)
        throw InputError("sampling supports at most 7 vertices");
    constexpr long kBox = 1'000'000;
    std::mt19937_64 rng(seed);
    auto draw_coord = [&] { return static_cast<long>(rng() % (kBox + 1)); };

    int n = graph.vertex_count();
    std::vector<RealizationClass> classes;
    std::map<std::string, int> index_of_signature;
    long long produced = 0;
    long long attempts = 0;
    const long long max_attempts = trials * 50 + 1000;
    while (produced < trials) {
        if (++attempts > max_attempts)
            throw std::runtime_error("rejection sampling failed to produce placements");
        std::vector<Point> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            long x = draw_coord(), y = draw_coord();
            pts.emplace_back(Rational(x), Rational(y));
        }
        bool distinct = true;
        for (int i = 0; i < n && distinct; ++i)
            for (int j = i + 1; j < n; ++j)
                if (pts[i] == pts[j]) { distinct = false; break; }
        if (!distinct) continue;
        if (!validate_general_position(pts, graph.edges()).ok()) continue;
        ++produced;
        GeometricGraph drawing(graph, std::move(pts));
        std::string sig = crossing_signature(drawing);
        auto it = index_of_signature.find(sig);
        if (it == index_of_signature.end()) {
            index_of_signature.emplace(sig, static_cast<int>(classes.size()));
            classes.push_back({std::move(drawing), sig, 1});
        } else {
            ++classes[it->second].times_seen;
        }
    }
    std::sort(classes.begin(), classes.end(), [](const RealizationClass& a, const RealizationClass& b) {
        if (a.representative.crossings().size() != b.representative.crossings().size())
            return a.representative.crossings().size() < b.representative.crossings().size();
        return a.signature < b.signature;
    });
    return classes;
}

HomPoset build_poset(const std::vector<RealizationClass>& classes, SearchBudget* budget) {
    int k = static_cast<int>(classes.size());
    HomPoset poset;
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            auto witness = find_homomorphism(classes[i].representative,
                                             classes[j].representative,
                                             HomKind::injective_geometric, budget);
            if (witness) {
                below[i][j] = true;
                poset.order.emplace_back(i, j);
            }
        }
    }
    // distinct classes are never mutually related
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (below[i][j] && below[j][i])
                throw std::logic_error("antisymmetry violated between classes " +
                                       std::to_string(i) + " and " + std::to_string(j));

    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (int m = 0; m < k && cover; ++m)
                if (m != i && m != j && below[i][m] && below[m][j]) cover = false;
            if (cover) poset.hasse.emplace_back(i, j);
        }
    }
    for (int i = 0; i < k; ++i) {
        bool max = true;
        for (int j = 0; j < k; ++j)
            if (below[i][j]) max = false;
        if (max) poset.maximal.push_back(i);
    }
    poset.is_chain = true;
    for (int i = 0; i < k && poset.is_chain; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && !below[i][j] && !below[j][i]) poset.is_chain = false;
    return poset;
}

} // namespace geocycle
