#include <doctest.h>

#include <algorithm>
#include <set>

#include "geocycle/cycles.hpp"
#include "geocycle/errors.hpp"
#include "test_support.hpp"

using namespace geocycle;
using namespace geocycle::testing;

namespace {

int mod5(int x) { return ((x % 5) + 5) % 5; }

// the C5-coloring pulled back from the canonical labeling: edge color =
// edge label
ThicknessColoring canonical_c5_coloring() {
    const auto& t = canonical_target(CanonicalName::C5_convex);
    ThicknessColoring eps;
    eps.kind = ThicknessColoring::Kind::cycle;
    eps.modulus = 5;
    eps.colors = t.edge_labels;
    return eps;
}

} // namespace

TEST_CASE("canonical targets satisfy their invariants") {
    SUBCASE("C3_plane: no crossings") {
        CHECK(c3_plane().crossings().empty());
        CHECK(c3_plane().vertex_count() == 3);
    }
    SUBCASE("C4_plane: no crossings") {
        CHECK(c4_plane().crossings().empty());
    }
    SUBCASE("C4_crossed: exactly one crossing") {
        CHECK(c4_crossed().crossings().size() == 1);
    }
    SUBCASE("C5_convex: five crossings forming a 5-cycle in EX") {
        CHECK(c5_convex().crossings().size() == 5);
        AbstractGraph ex = edge_crossing_graph(c5_convex());
        for (int v = 0; v < 5; ++v) CHECK(ex.degree(v) == 2);
        CHECK(ex.components().size() == 1);
    }
    SUBCASE("K5_convex: exactly five crossings among ten edges") {
        CHECK(k5_convex().edge_count() == 10);
        CHECK(k5_convex().crossings().size() == 5);
    }
    SUBCASE("identical across calls") {
        const auto& a = canonical_target(CanonicalName::C5_convex);
        const auto& b = canonical_target(CanonicalName::C5_convex);
        CHECK(&a == &b);
    }
}

TEST_CASE("C5_convex incidence arithmetic, all labels mod 5") {
    const auto& t = canonical_target(CanonicalName::C5_convex);
    const auto& g = t.graph.graph();
    REQUIRE(t.vertex_labels.size() == 5);
    REQUIRE(t.edge_labels.size() == 5);

    // edge labeled i joins vertices labeled 2i+2 and 2i+3
    for (int e = 0; e < 5; ++e) {
        int i = t.edge_labels[e];
        std::set<int> got{t.vertex_labels[g.edge(e).first], t.vertex_labels[g.edge(e).second]};
        CHECK(got == std::set<int>{mod5(2 * i + 2), mod5(2 * i + 3)});
    }
    // vertex labeled k is incident with edges labeled 3k-1 and 3k+1
    for (int v = 0; v < 5; ++v) {
        int k = t.vertex_labels[v];
        std::set<int> got;
        for (int e = 0; e < 5; ++e)
            if (g.edge(e).first == v || g.edge(e).second == v) got.insert(t.edge_labels[e]);
        CHECK(got == std::set<int>{mod5(3 * k - 1), mod5(3 * k + 1)});
    }
    // vertex label equals the sum of its incident edge labels
    for (int v = 0; v < 5; ++v) {
        int sum = 0;
        for (int e = 0; e < 5; ++e)
            if (g.edge(e).first == v || g.edge(e).second == v) sum += t.edge_labels[e];
        CHECK(mod5(sum) == t.vertex_labels[v]);
    }
}

TEST_CASE("thickness") {
    CHECK(thickness(c5_plane()) == 1);
    CHECK(thickness(c4_crossed()) == 2);
    CHECK(thickness(c5_convex()) == 3);
    CHECK(thickness(k5_convex()) == 3);
}

TEST_CASE("validate_coloring and monochromatic_subgraphs") {
    SUBCASE("the canonical coloring of the convex C5 has five 1-edge subgraphs") {
        auto subs = monochromatic_subgraphs(c5_convex(), canonical_c5_coloring());
        CHECK(subs.size() == 5);
        for (const auto& sub : subs) {
            CHECK(sub.edges.size() == 1);
            CHECK(sub.vertices.size() == 2);
        }
    }
    SUBCASE("one color over a plane drawing gives the whole drawing") {
        ThicknessColoring eps;
        eps.kind = ThicknessColoring::Kind::clique;
        eps.modulus = 1;
        eps.colors.assign(c5_plane().edge_count(), 0);
        auto subs = monochromatic_subgraphs(c5_plane(), eps);
        REQUIRE(subs.size() == 1);
        CHECK(subs[0].edges.size() == 5);
        CHECK(subs[0].vertices.size() == 5);
    }
    SUBCASE("a valid 2-coloring of the crossed C4 separates the crossing pair") {
        ThicknessColoring eps;
        eps.kind = ThicknessColoring::Kind::clique;
        eps.modulus = 2;
        eps.colors = {0, 1, 0, 0};  // edges 1-2 and 3-0 are the crossing pair
        auto subs = monochromatic_subgraphs(c4_crossed(), eps);
        REQUIRE(subs.size() == 2);
        CHECK(subs[0].edges.size() == 3);
        CHECK(subs[1].edges == std::vector<int>{1});
    }
    SUBCASE("invalid colorings are rejected") {
        ThicknessColoring eps;
        eps.kind = ThicknessColoring::Kind::clique;
        eps.modulus = 2;
        eps.colors = {0, 0, 0, 0};  // crossing pair shares a color
        CHECK_THROWS_AS(monochromatic_subgraphs(c4_crossed(), eps), InvalidColoringError);
        eps.colors = {0, 1, 0};
        CHECK_THROWS_AS(validate_coloring(c4_crossed(), eps), InvalidColoringError);
        ThicknessColoring cyc;
        cyc.kind = ThicknessColoring::Kind::cycle;
        cyc.modulus = 5;
        cyc.colors = {0, 2, 0, 0};  // crossing colors 2 and 0 are not consecutive
        CHECK_THROWS_AS(validate_coloring(c4_crossed(), cyc), InvalidColoringError);
        cyc.colors = {0, 1, 0, 0};
        CHECK_NOTHROW(validate_coloring(c4_crossed(), cyc));
    }
}

TEST_CASE("decide_c3") {
    Decision d = decide_c3(c3_plane());
    CHECK(d.yes);
    CHECK(decide_c3(c4_crossed()).yes == false);
    // plane convex C5 is 3-colorable and plane; agrees with the oracle
    Decision d5 = decide_c3(c5_plane());
    CHECK(d5.yes);
    CHECK(find_homomorphism(c5_plane(), c3_plane(), HomKind::geometric).has_value());
    CHECK(verify_map(c5_plane(), c3_plane(), *d5.certificate, HomKind::geometric).ok);
}

TEST_CASE("decide_c4 by both characterizations") {
    SUBCASE("plane C4 maps into the crossed C4") {
        CHECK(decide_c4_thm1(c4_plane()).yes);
        CHECK(decide_c4_thm2(c4_plane()).yes);
    }
    SUBCASE("convex C5 fails both ways") {
        CHECK_FALSE(decide_c4_thm1(c5_convex()).yes);
        CHECK_FALSE(decide_c4_thm2(c5_convex()).yes);
    }
    SUBCASE("crossed C4 maps to itself") {
        CHECK(decide_c4_thm1(c4_crossed()).yes);
        CHECK(decide_c4_thm2(c4_crossed()).yes);
    }
    SUBCASE("chained crossing pairs with a path component graph") {
        GeometricGraph g = load_fixture("p3chain.json");
        Decision d1 = decide_c4_thm1(g);
        Decision d2 = decide_c4_thm2(g);
        CHECK(d1.yes);
        CHECK(d2.yes);
        CHECK(find_homomorphism(g, c4_crossed(), HomKind::geometric).has_value());
        REQUIRE(d2.evidence.coloring.has_value());
        // the two-coloring is recorded on exactly the crossing edges
        int colored = 0;
        for (int c : d2.evidence.coloring->colors)
            if (c != -1) ++colored;
        CHECK(colored == 4);
    }
}

TEST_CASE("decide_c5") {
    SUBCASE("convex C5 maps to itself") {
        Decision d = decide_c5(c5_convex());
        CHECK(d.yes);
        REQUIRE(d.evidence.coloring.has_value());
        validate_coloring(c5_convex(), *d.evidence.coloring);
    }
    SUBCASE("crossed C4 does not map to the convex C5") {
        // independent oracle: exhaustive check over all 5^4 vertex maps
        const GeometricGraph& g = c4_crossed();
        const GeometricGraph& h = c5_convex();
        bool any = false;
        for (int code = 0; code < 625 && !any; ++code) {
            VertexMap f{code % 5, (code / 5) % 5, (code / 25) % 5, (code / 125) % 5};
            if (verify_map(g, h, f, HomKind::geometric).ok) any = true;
        }
        CHECK_FALSE(any);
        CHECK_FALSE(decide_c5(g).yes);
    }
    SUBCASE("plane convex C5 is C5-geocolorable") {
        CHECK(decide_c5(c5_plane()).yes);
    }
    SUBCASE("single crossing pair") {
        GeometricGraph g = drawing_from({{0, 0}, {2, 2}, {0, 2}, {2, 0}}, {{0, 1}, {2, 3}});
        Decision d = decide_c5(g);
        CHECK(d.yes);
    }
    SUBCASE("isolated vertices are rejected with a distinct error") {
        AbstractGraph a;
        a.add_vertex("a");
        a.add_vertex("b");
        a.add_vertex("lone");
        a.add_edge("a", "b");
        GeometricGraph g(std::move(a), {Point(0, 0), Point(1, 0), Point(0, 1)});
        CHECK_THROWS_AS(decide_c5(g), IsolatedVertexError);
        CHECK_THROWS_AS(decide_c3(g), IsolatedVertexError);
        CHECK_THROWS_AS(decide_c4_thm1(g), IsolatedVertexError);
        CHECK_THROWS_AS(decide_c4_thm2(g), IsolatedVertexError);
    }
    SUBCASE("budget exhaustion raises") {
        SearchBudget tiny(3);
        CHECK_THROWS_AS(decide_c5(load_fixture("heptagram.json"), &tiny),
                        BudgetExceededError);
    }
}

TEST_CASE("construct_c5_certificate") {
    SUBCASE("the canonical coloring reproduces the canonical labels") {
        const auto& t = canonical_target(CanonicalName::C5_convex);
        // every vertex lies in exactly two subgraphs, so no partitions needed
        VertexMap f = construct_c5_certificate(t.graph, canonical_c5_coloring(), {});
        for (int v = 0; v < 5; ++v) CHECK(f[v] == v);
        CHECK(verify_map(t.graph, t.graph, f, HomKind::geometric).ok);
    }
    SUBCASE("single crossing pair colored 1 and 2") {
        GeometricGraph g = drawing_from({{0, 0}, {2, 2}, {0, 2}, {2, 0}}, {{0, 1}, {2, 3}});
        ThicknessColoring eps;
        eps.kind = ThicknessColoring::Kind::cycle;
        eps.modulus = 5;
        eps.colors = {1, 2};
        C5Partitions parts;
        parts.components.push_back({1, {0}, {1}});  // edge colored 1: labels 4 / 0
        parts.components.push_back({2, {2}, {3}});  // edge colored 2: labels 1 / 2
        VertexMap f = construct_c5_certificate(g, eps, parts);
        const auto& t = canonical_target(CanonicalName::C5_convex);
        std::set<int> first{t.vertex_labels[f[0]], t.vertex_labels[f[1]]};
        std::set<int> second{t.vertex_labels[f[2]], t.vertex_labels[f[3]]};
        CHECK(first == std::set<int>{4, 0});
        CHECK(second == std::set<int>{1, 2});
        CHECK(verify_map(g, t.graph, f, HomKind::geometric).ok);
    }
    SUBCASE("one plane component colored 0 alternates labels 2 and 3") {
        GeometricGraph g = drawing_from({{0, 0}, {1, 1}, {2, 0}, {3, 1}},
                                        {{0, 1}, {1, 2}, {2, 3}});
        ThicknessColoring eps;
        eps.kind = ThicknessColoring::Kind::cycle;
        eps.modulus = 5;
        eps.colors = {0, 0, 0};
        C5Partitions parts;
        parts.components.push_back({0, {0, 2}, {1, 3}});
        VertexMap f = construct_c5_certificate(g, eps, parts);
        const auto& t = canonical_target(CanonicalName::C5_convex);
        CHECK(t.vertex_labels[f[0]] == 2);
        CHECK(t.vertex_labels[f[1]] == 3);
        CHECK(t.vertex_labels[f[2]] == 2);
        CHECK(t.vertex_labels[f[3]] == 3);
    }
    SUBCASE("condition violations signal a bug upstream") {
        GeometricGraph g = drawing_from({{0, 0}, {2, 2}, {0, 2}, {2, 0}}, {{0, 1}, {2, 3}});
        ThicknessColoring eps;
        eps.kind = ThicknessColoring::Kind::cycle;
        eps.modulus = 5;
        eps.colors = {1, 2};
        CHECK_THROWS_AS(construct_c5_certificate(g, eps, {}), std::logic_error);
    }
}

TEST_CASE("decide_k5") {
    SUBCASE("the convex K5 maps to itself") {
        CHECK(decide_k5(k5_convex()).yes);
    }
    SUBCASE("the convex C5 is a subdrawing of the convex K5") {
        Decision d = decide_k5(c5_convex());
        CHECK(d.yes);
        CHECK(verify_map(c5_convex(), k5_convex(), *d.certificate, HomKind::geometric).ok);
    }
    SUBCASE("the counterexample fixture is not 5-geocolorable") {
        CHECK_FALSE(decide_k5(load_fixture("heptagram.json")).yes);
    }
    SUBCASE("isolated vertices are allowed") {
        AbstractGraph a;
        a.add_vertex("a");
        a.add_vertex("b");
        a.add_vertex("lone");
        a.add_edge("a", "b");
        GeometricGraph g(std::move(a), {Point(0, 0), Point(1, 0), Point(0, 1)});
        CHECK(decide_k5(g).yes);
    }
}

TEST_CASE("check_k5_necessary") {
    CHECK(check_k5_necessary(c5_plane()).verdict == K5Verdict::inconclusive);
    CHECK(check_k5_necessary(c5_convex()).verdict == K5Verdict::inconclusive);
    auto report = check_k5_necessary(load_fixture("heptagram.json"));
    CHECK(report.verdict == K5Verdict::not_5_geocolorable);
    CHECK_FALSE(report.crossing_subgraph_decision.yes);
}

TEST_CASE("certificates to the convex C5 obey the crossing-pair image law") {
    const auto& t = canonical_target(CanonicalName::C5_convex);
    CorpusGenerator corpus(5150);
    int yes_count = 0;
    for (int round = 0; round < 120 && yes_count < 8; ++round) {
        GeometricGraph g = corpus.next();
        Decision d = decide_c5(g);
        if (!d.yes) continue;
        ++yes_count;
        const VertexMap& f = *d.certificate;
        for (const auto& [e1, e2] : g.crossings()) {
            auto label_pair = [&](int e) {
                auto [u, v] = g.graph().edge(e);
                int a = t.vertex_labels[f[u]], b = t.vertex_labels[f[v]];
                // image is an edge of the convex C5, so labels are consecutive
                if (mod5(b - a) == 1) return a;
                REQUIRE(mod5(a - b) == 1);
                return b;
            };
            int j1 = label_pair(e1), j2 = label_pair(e2);
            bool law = mod5(j2 - j1) == 2 || mod5(j1 - j2) == 2;
            CHECK(law);
        }
    }
    CHECK(yes_count >= 3);
}
