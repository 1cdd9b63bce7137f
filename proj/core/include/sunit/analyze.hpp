// Representability verdicts: a fixed ladder of machine-checkable criteria
// (forest / cubical constructions, triangle obstructions, Delta-machinery
// connectivity, complement thresholds), plus an exhaustive small-window
// search oracle and an equivalence-class census.
#pragma once

#include "sunit/bigint.hpp"
#include "sunit/graphcore.hpp"
#include "sunit/sintring.hpp"
#include "sunit/unitgraph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sunit {

enum class VerdictStatus {
    RepresentableAllS,
    InfinitelyRepresentable,
    FinitelyRepresentable,
    NotRepresentable,
    Conditional,
    Unknown,
};

// The wire names: REPRESENTABLE_ALL_S, INFINITELY_REPRESENTABLE,
// FINITELY_REPRESENTABLE, NOT_REPRESENTABLE, CONDITIONAL, UNKNOWN.
std::string status_name(VerdictStatus status);
VerdictStatus status_from_name(const std::string& name); // throws BadParameters

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::vector<std::string> citations; // tags of the criteria that fired
    std::string notes;
};

// Applies the criteria in a fixed order and returns the first (strongest)
// conclusion. Every non-UNKNOWN verdict cites the criteria whose hypotheses
// were actually checked; UNKNOWN is an honest outcome, the general decision
// problem being open.
Verdict classify(const Graph& g, const PrimeSet& s);

// First witness in lexicographic order among subsets A of {0..range_limit}
// with |A| = |G| and build_graph(S, A) isomorphic to G, or nullopt if the
// window holds none. Degree-sequence pruning; |G| <= 8, range_limit <= 64.
std::optional<Representation> brute_force_search(const Graph& g, const PrimeSet& s,
                                                 int range_limit);

struct CensusResult {
    long classes = 0;
    // canonical forms in first-seen scan order
    std::vector<std::vector<SInteger>> representatives;
};

// Every representation of G inside the window, deduplicated by canonical
// form. Counts are monotone in range_limit.
CensusResult census_equivalence_classes(const Graph& g, const PrimeSet& s, int range_limit);

// Ingredients of the threshold criterion, exposed separately because the
// thresholds sit far above any constructible test graph; tests exercise
// the comparisons with fabricated orders.
bool complement_blocks_representation(const Graph& g); // complement has >= 3
                                                       // components, or two of order >= 2
BigInt order_threshold(int s_size);          // 3 * 2^(16(|S|+1))
BigInt bipartite_order_threshold(int s_size); // 3 * 2^(16(|S|+2))

// (m, n) with m <= n when g is complete bipartite with both parts
// non-empty, nullopt otherwise.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g);

} // namespace sunit
