// Difference graphs: G_S(A) has the elements of A as vertices, with an
// edge wherever the difference of two points is an S-unit. Point sets are
// considered up to the affine action A -> u*A + b (u an S-unit, b in Z_S),
// which leaves the graph unchanged; canonicalize() computes a normal form
// for that action.
#pragma once

#include "sunit/graphcore.hpp"
#include "sunit/sintring.hpp"

#include <optional>
#include <vector>

namespace sunit {

struct Representation {
    PrimeSet s;
    std::vector<SInteger> points;            // pairwise distinct
    std::optional<Graph> target;             // graph this claims to represent
    std::optional<VertexMap> map;            // point index -> target vertex

    // The difference graph of the points.
    Graph graph() const;

    // True when the points realize the target via the stored map (or via
    // some isomorphism if no map is stored). Without a target: true.
    bool verify() const;

    bool points_integral() const;
};

// Difference graph of A over S; vertices keep the order of `points`.
Graph build_graph(const PrimeSet& s, const std::vector<SInteger>& points);

// Normal form under A -> u*A + b: sort, translate the minimum to zero,
// divide out the common S-part of the nonzero elements, and take the
// lexicographically smaller of the result and its reflection. The output
// always consists of integers with minimum 0.
std::vector<SInteger> canonicalize(const PrimeSet& s, const std::vector<SInteger>& points);

bool are_equivalent(const PrimeSet& s, const std::vector<SInteger>& a,
                    const std::vector<SInteger>& b);

// Multiplies by the S-unit that clears all denominators (no translation),
// so the difference graph is unchanged. Identity on integral input.
std::vector<SInteger> scale_to_integers(const PrimeSet& s, const std::vector<SInteger>& points);

} // namespace sunit
