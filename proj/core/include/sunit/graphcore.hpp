// Finite simple graphs on vertices {0..n-1}, plus the graph machinery the
// classifier needs: triangle graphs, Delta-components, H(G), isomorphism
// search and a handful of standard generators.
#pragma once

#include "sunit/errors.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sunit {

class Graph {
public:
    Graph() = default;
    // Edges are normalized to (min,max) and sorted. Self-loops and
    // duplicate edges are rejected.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); } // edge count
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const; // position in edges(), -1 if absent

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// A map i -> forward[i] between vertex sets.
struct VertexMap {
    std::vector<int> forward;

    static VertexMap identity(int n);

    bool is_bijection(int n) const; // permutation of {0..n-1}, needs size n
    // forward maps g's vertices onto h's and preserves edges both ways.
    bool is_isomorphism(const Graph& g, const Graph& h) const;
};

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_triangle(const Graph& g);

// Connected and still connected after removing any single edge (i.e. no
// bridges). K_1 is vacuously doubly connected; K_2 is not.
bool is_doubly_connected(const Graph& g);

Graph complement(const Graph& g);

// Vertex k of the result is edge k of g (in g.edges() order); two edge
// vertices are adjacent when some triangle of g contains both edges.
Graph triangle_graph(const Graph& g);

// Delta-components: components of triangle_graph(g) pulled back to vertex
// sets of g (union of endpoints of the component's edges). Singleton edge
// components come from edges lying in no triangle. Ordered by smallest
// edge index; each carrier set sorted.
std::vector<std::vector<int>> delta_components(const Graph& g);

// H(G): one vertex per Delta-component, adjacent when the carrier vertex
// sets share at least two vertices. Returns the graph and the carriers.
std::pair<Graph, std::vector<std::vector<int>>> h_graph(const Graph& g);

// First isomorphism witness in lexicographic search order (vertices of g
// mapped in index order, candidate images ascending), or nullopt.
std::optional<VertexMap> is_isomorphic(const Graph& g, const Graph& h);

// Subgraph induced by `vertices` (sorted ascending); vertex i of the
// result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

//----- generators ------------------------------------------------------

Graph cycle_graph(int n);             // n >= 3, vertices in cyclic order
Graph path_graph(int n);              // n >= 1, edges (i, i+1)
Graph complete_graph(int n);          // n >= 1
Graph complete_bipartite(int m, int n); // parts {0..m-1} and {m..m+n-1}
Graph hypercube_graph(int dim);       // vertex index = binary coordinate word
Graph random_graph(int n, double p, std::uint64_t seed);

// All isomorphism classes on n vertices (n <= 6 supported), each as its
// lexicographically minimal edge-mask representative, ascending.
std::vector<Graph> nonisomorphic_graphs(int n);

// All trees on n vertices up to isomorphism (n <= 8), via Prufer sequences.
std::vector<Graph> nonisomorphic_trees(int n);

} // namespace sunit
