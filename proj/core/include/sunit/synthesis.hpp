// Constructive representation machinery: given a graph, build a prime set
// and a point set whose difference graph realizes it. Every routine here
// verifies its own output before returning it; searches are deterministic
// scans governed by the budgets in config.hpp.
#pragma once

#include "sunit/graphcore.hpp"
#include "sunit/sintring.hpp"
#include "sunit/unitgraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sunit {

// An injective placement of a graph's vertices on hypercube vertices such
// that every edge becomes a unit step. Non-adjacent vertices may land at
// any Hamming distance; the embedding is not required to be induced.
struct CubeEmbedding {
    int dimension = 0;
    std::vector<std::string> coords; // '0'/'1' words, one per vertex

    bool valid_for(const Graph& g) const;
};

// Representation of an arbitrary graph over a prime set of the algorithm's
// own choosing (all primes below max(|G|,3) plus whatever the construction
// accumulates). Vertices are processed in index order; each new point is
// the least solution of a congruence system separating it from its
// non-neighbors. variant > 0 steers the construction toward a different
// prime set, giving inequivalent representations of the same graph.
Representation represent_any(const Graph& g, int variant = 0);

// A new point whose difference to every existing point is divisible by a
// fresh prime outside S, hence a new isolated vertex. Points must be
// integral.
SInteger add_isolated(const Representation& rep);

// A new point adjacent exactly to points[anchor]: scans integer S-units u
// by height until u avoids the difference set D and d - u is a non-unit
// for every d in D, then returns points[anchor] + u.
SInteger add_pendant(const Representation& rep, int anchor);

// Builds each tree by repeated add_pendant from its root, then separates
// the trees with glue_components.
Representation represent_forest(const Graph& g, const PrimeSet& s);

// Concatenation of two representations over the same prime set, with the
// first one shifted by multiples of the least prime outside S until no
// cross difference is an S-unit. Result: points of `a` (shifted) followed
// by points of `b`; target is the disjoint union.
Representation glue_components(const Representation& a, const Representation& b);

// Relabels a connected, cycle-containing representation over a single
// prime {p}, p > 2*#edges, onto the target prime set: the distinct edge
// label magnitudes p^(m_1) < ... < p^(m_k) are replaced by fast-growing
// units w_1 < ... < w_k over S and vertex values are rebuilt by summing
// signed labels along a spanning tree from the zero vertex. Candidate
// label profiles are tried until one passes verification; `variant` asks
// for the (variant+1)-th verified, pairwise inequivalent output.
Representation rescale_representation(const Representation& rep0, const PrimeSet& s,
                                      int variant = 0);

// One relabeling attempt with an explicit unit profile (ascending, one per
// distinct label magnitude). Returns nullopt when the rebuilt values
// collide, break the cycle conditions, or pick up extra edges.
std::optional<Representation> rescale_with_units(const Representation& rep0, const PrimeSet& s,
                                                 const std::vector<SInteger>& units);

// Backtracking search for an embedding into Q_d, d tried from
// ceil(log2 |G|) up to max_dimension (<= 16). Vertices are placed in BFS
// order; the first root sits at the zero word. With `induced` set, also
// keeps non-adjacent vertices at Hamming distance >= 2.
std::optional<CubeEmbedding> hypercube_embed(const Graph& g, int max_dimension,
                                             bool induced = false);

// Vertex values sum(coord_i * p^(i+1)) of an embedding.
std::vector<SInteger> embedding_values(const CubeEmbedding& emb, const BigInt& p);

// Representation of a cubical graph over an arbitrary prime set: per
// component, either the forest builder or the p-power value map over
// {smallest prime > 2*#edges} followed by rescale_representation; the
// components are then glued. If the supplied embedding places two
// non-adjacent vertices of one component at Hamming distance 1 (legal,
// but it breaks the value map), an induced re-embedding is searched.
Representation cubical_to_representation(const Graph& g, const CubeEmbedding& emb,
                                         const PrimeSet& s, int variant = 0);

// Inverse direction: a connected representation over {p}, p > #edges,
// rooted at value 0, is written in coordinates a_i over the distinct edge
// label exponents and expanded into indicator blocks of width 2p, one
// block per exponent. Output dimension is 2 * p * r.
CubeEmbedding cube_from_representation(const Representation& rep);

// Pairwise inequivalent representations (0, 1, w, 1+w) of K_{2,2}, found
// by scanning S-units w by height and keeping those where both 1-w and
// 1+w are non-units.
std::vector<Representation> k22_representations(const PrimeSet& s, int count);

} // namespace sunit
