#ifndef GEOCYCLE_CYCLES_HPP
#define GEOCYCLE_CYCLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "geocycle/hom.hpp"

namespace geocycle {

enum class CanonicalName { C3_plane, C4_plane, C4_crossed, C5_convex, K5_convex };

std::string to_string(CanonicalName name);
std::optional<CanonicalName> canonical_name_from(const std::string& text);

// A fixed rational-coordinate drawing, identical across runs. Vertices sit
// in convex position on the parabola y = x^2; the crossed realizations
// visit them in the order that produces the required crossing structure.
// Labels (residues mod 5) are populated for C5_convex, where vertex k is
// incident with edges labeled 3k-1 and 3k+1, edge i joins vertices 2i+2
// and 2i+3, and each vertex label is the sum of its incident edge labels.
struct CanonicalTarget {
    CanonicalName name;
    GeometricGraph graph;
    std::vector<int> vertex_labels;
    std::vector<int> edge_labels;
};

const CanonicalTarget& canonical_target(CanonicalName name);

// Edge coloring of a drawing. `colors[e]` is the color of edge e, or -1
// for an edge left uncolored (allowed only for non-crossing edges, used
// when a coloring lives on the crossing subgraph). clique kind: crossing
// edges receive distinct colors. cycle kind: crossing edges receive
// consecutive colors mod `modulus`.
struct ThicknessColoring {
    enum class Kind { clique, cycle };
    std::vector<int> colors;
    int modulus = 0;
    Kind kind = Kind::clique;
};

// Throws InvalidColoringError if the coloring violates its invariants.
void validate_coloring(const GeometricGraph& g, const ThicknessColoring& eps);

// Minimum number of colors in a thickness edge coloring: the chromatic
// number of EX(G). Zero for an edgeless drawing.
int thickness(const GeometricGraph& g);

struct MonochromaticSubgraph {
    int color;
    std::vector<int> edges;
    std::vector<int> vertices;
};

// The plane subgraph induced by each used color, ascending by color.
std::vector<MonochromaticSubgraph> monochromatic_subgraphs(const GeometricGraph& g,
                                                           const ThicknessColoring& eps);

struct Evidence {
    std::vector<std::string> lines;
    std::optional<ThicknessColoring> coloring;
};

struct Decision {
    bool yes = false;
    std::optional<VertexMap> certificate;  // into the matching canonical target
    Evidence evidence;
};

// Partition choices backing a C5 certificate: for each monochromatic
// component, which vertices take label 2i+2 and which take 2i+3.
struct C5Partitions {
    struct Component {
        int color;
        std::vector<int> plus2_side;
        std::vector<int> plus3_side;
    };
    std::vector<Component> components;
};

// Deciders for C_n-geocolorability. All reject drawings with isolated
// vertices (IsolatedVertexError) except decide_k5. A yes decision always
// carries a certificate that re-verifies as a geometric homomorphism.
Decision decide_c3(const GeometricGraph& g, SearchBudget* budget = nullptr);
Decision decide_c4_thm1(const GeometricGraph& g, SearchBudget* budget = nullptr);
Decision decide_c4_thm2(const GeometricGraph& g, SearchBudget* budget = nullptr);
Decision decide_c5(const GeometricGraph& g, SearchBudget* budget = nullptr);

// Labels vertices per the constructive proof: a vertex in two
// monochromatic subgraphs gets the sum of the two colors mod 5; a vertex
// in one subgraph gets 2i+2 or 2i+3 by its partite side. Throws
// std::logic_error if the inputs violate the decider's conditions.
VertexMap construct_c5_certificate(const GeometricGraph& g, const ThicknessColoring& eps,
                                   const C5Partitions& partitions);

// 5-geocolorability is equivalent to mapping into the convex K5.
Decision decide_k5(const GeometricGraph& g, SearchBudget* budget = nullptr);

enum class K5Verdict { not_5_geocolorable, inconclusive };

struct K5NecessaryReport {
    K5Verdict verdict;
    Decision crossing_subgraph_decision;  // decide_c5 on the crossing subgraph
};

// Necessary condition: a drawing whose crossing subgraph fails to be
// C5-geocolorable cannot be 5-geocolorable.
K5NecessaryReport check_k5_necessary(const GeometricGraph& g, SearchBudget* budget = nullptr);

} // namespace geocycle

#endif
