#ifndef GEOCYCLE_HOM_HPP
#define GEOCYCLE_HOM_HPP

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geocycle/geometric_graph.hpp"

namespace geocycle {

// Vertex map from a source graph into a target, by vertex index.
using VertexMap = std::vector<int>;

enum class HomKind {
    abstract,              // edges -> edges
    geometric,             // + crossings -> crossings
    injective_geometric,   // + vertex-injective
    geometric_isomorphism  // bijective, edges and crossings biconditional
};

std::string to_string(HomKind kind);

// Node budget shared by the backtracking searches. Every assignment made
// during a search costs one node.
class SearchBudget {
public:
    static constexpr long long kDefault = 10'000'000;
    explicit SearchBudget(long long nodes = kDefault) : initial_(nodes), left_(nodes) {}
    void tick();
    long long used() const { return initial_ - left_; }

private:
    long long initial_;
    long long left_;
};

struct VerifyResult {
    bool ok = true;
    std::string violation;  // one violated condition instance when !ok
    explicit operator bool() const { return ok; }
};

// Checks whether f satisfies the conditions of the given kind. The map
// must be total on the source vertex set.
VerifyResult verify_map(const GeometricGraph& g, const GeometricGraph& h,
                        const VertexMap& f, HomKind kind);
VerifyResult verify_map(const AbstractGraph& g, const AbstractGraph& h,
                        const VertexMap& f);

// Exhaustive backtracking search; nullopt is a proof of non-existence
// (unless the budget throws first). Vertices are processed in descending
// degree-plus-co-crossing-degree order with adjacency and crossing pruning.
std::optional<VertexMap> find_homomorphism(const GeometricGraph& g,
                                           const GeometricGraph& h, HomKind kind,
                                           SearchBudget* budget = nullptr);
std::optional<VertexMap> find_homomorphism(const AbstractGraph& g,
                                           const AbstractGraph& h,
                                           SearchBudget* budget = nullptr);

// Yields every valid map exactly once, in lexicographic order over
// id-sorted vertices. Return false from the callback to stop early.
using HomVisitor = std::function<bool(const VertexMap&)>;
void enumerate_homomorphisms(const GeometricGraph& g, const GeometricGraph& h,
                             HomKind kind, const HomVisitor& visit,
                             SearchBudget* budget = nullptr);
void enumerate_homomorphisms(const AbstractGraph& g, const AbstractGraph& h,
                             const HomVisitor& visit, SearchBudget* budget = nullptr);

// Vertex pairs that are neither adjacent nor co-crossing: the only
// candidates for identification under any geometric homomorphism.
std::set<std::pair<int, int>> identifiable_pairs(const GeometricGraph& g);

// Strong product: (g,h) ~ (g',h') iff both coordinates are equal or
// adjacent and the pairs differ. Vertex ids are "gid|hid".
AbstractGraph strong_product(const AbstractGraph& a, const AbstractGraph& b);

// Exact chromatic number by backtracking with symmetry breaking, or
// nullopt if it exceeds `cap` (cap at most 8).
std::optional<int> chromatic_number(const AbstractGraph& g, int cap);

} // namespace geocycle

#endif
