#ifndef GEOCYCLE_REALIZATIONS_HPP
#define GEOCYCLE_REALIZATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geocycle/hom.hpp"

namespace geocycle {

// One observed isomorphism class of geometric realizations. The signature
// is the crossing pair set in canonical form under automorphisms of the
// underlying graph; two drawings of the same labeled graph are
// geometrically isomorphic iff their signatures agree.
struct RealizationClass {
    GeometricGraph representative;
    std::string signature;
    long long times_seen = 0;
};

// Canonical crossing signature of a drawing.
std::string crossing_signature(const GeometricGraph& g);

// Draws `trials` random integer placements in [0, 10^6]^2 (rejection
// sampled to general position), deduplicates by geometric isomorphism and
// returns the observed classes sorted by crossing count then signature.
// Deterministic for a fixed seed. Sampling cannot prove the class list
// complete; counts are "observed classes".
std::vector<RealizationClass> sample_realizations(const AbstractGraph& graph,
                                                  long long trials, std::uint64_t seed);

struct HomPoset {
    // order holds every pair (i, j), i != j, with class i below class j
    // under an injective geometric homomorphism; hasse is its cover relation.
    std::vector<std::pair<int, int>> order;
    std::vector<std::pair<int, int>> hasse;
    std::vector<int> maximal;
    bool is_chain = false;
};

// Order computed by injective geometric homomorphism search between all
// ordered pairs of class representatives.
HomPoset build_poset(const std::vector<RealizationClass>& classes,
                     SearchBudget* budget = nullptr);

} // namespace geocycle

#endif
