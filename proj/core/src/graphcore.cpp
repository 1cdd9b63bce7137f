#include "sunit/graphcore.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

namespace sunit {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw InvalidOrder("Graph: negative order");
    for (auto& [u, v] : edges) {
        if (u == v) throw InvalidEdge("Graph: self-loop at " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidEdge("Graph: endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidEdge("Graph: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

VertexMap VertexMap::identity(int n) {
    std::vector<int> fwd(n);
    for (int i = 0; i < n; ++i) fwd[i] = i;
    return VertexMap{std::move(fwd)};
}

bool VertexMap::is_bijection(int n) const {
    if (static_cast<int>(forward.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : forward) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool VertexMap::is_isomorphism(const Graph& g, const Graph& h) const {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (!is_bijection(g.order())) return false;
    for (const auto& [u, v] : g.edges())
        if (!h.has_edge(forward[u], forward[v])) return false;
    return true; // edge counts equal, so the reverse direction follows
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.order(), false);
    for (int root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(root);
        seen[root] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) { seen[w] = true; q.push(w); }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_forest(const Graph& g) {
    return g.size() == g.order() - static_cast<int>(components(g).size());
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int root = 0; root < g.order(); ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) { color[w] = 1 - color[v]; q.push(w); }
                else if (color[w] == color[v]) return false;
            }
        }
    }
    return true;
}

bool has_triangle(const Graph& g) {
    for (const auto& [u, v] : g.edges())
        for (int w : g.neighbors(u))
            if (w != v && g.has_edge(v, w)) return true;
    return false;
}

bool is_doubly_connected(const Graph& g) {
    if (!is_connected(g)) return false;
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        std::vector<std::pair<int, int>> rest = g.edges();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        if (!is_connected(Graph(g.order(), std::move(rest)))) return false;
    }
    return true;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges));
}

Graph triangle_graph(const Graph& g) {
    const auto& es = g.edges();
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            // a triangle containing both edges exists iff they share an
            // endpoint and the two remaining endpoints are adjacent
            const auto& [u1, v1] = es[a];
            const auto& [u2, v2] = es[b];
            int shared = -1, x = -1, y = -1;
            if (u1 == u2) { shared = u1; x = v1; y = v2; }
            else if (u1 == v2) { shared = u1; x = v1; y = u2; }
            else if (v1 == u2) { shared = v1; x = u1; y = v2; }
            else if (v1 == v2) { shared = v1; x = u1; y = u2; }
            if (shared >= 0 && g.has_edge(x, y))
                out.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return Graph(static_cast<int>(es.size()), std::move(out));
}

std::vector<std::vector<int>> delta_components(const Graph& g) {
    const Graph tg = triangle_graph(g);
    std::vector<std::vector<int>> carriers;
    for (const std::vector<int>& edge_comp : components(tg)) {
        std::set<int> verts;
        for (int e : edge_comp) {
            verts.insert(g.edges()[static_cast<std::size_t>(e)].first);
            verts.insert(g.edges()[static_cast<std::size_t>(e)].second);
        }
        carriers.emplace_back(verts.begin(), verts.end());
    }
    return carriers;
}

std::pair<Graph, std::vector<std::vector<int>>> h_graph(const Graph& g) {
    std::vector<std::vector<int>> carriers = delta_components(g);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < carriers.size(); ++a) {
        for (std::size_t b = a + 1; b < carriers.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(carriers[a].begin(), carriers[a].end(),
                                  carriers[b].begin(), carriers[b].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2)
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return {Graph(static_cast<int>(carriers.size()), std::move(edges)), std::move(carriers)};
}

namespace {

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& map,
                        std::vector<bool>& used, int v) {
    if (v == g.order()) return true;
    for (int img = 0; img < h.order(); ++img) {
        if (used[img] || g.degree(v) != h.degree(img)) continue;
        bool ok = true;
        for (int w = 0; w < v; ++w) {
            if (g.has_edge(v, w) != h.has_edge(img, map[w])) { ok = false; break; }
        }
        if (!ok) continue;
        map[v] = img;
        used[img] = true;
        if (extend_isomorphism(g, h, map, used, v + 1)) return true;
        used[img] = false;
    }
    return false;
}

} // namespace

std::optional<VertexMap> is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
    auto degs = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.order(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return std::nullopt;
    std::vector<int> map(g.order(), -1);
    std::vector<bool> used(g.order(), false);
    if (!extend_isomorphism(g, h, map, used, 0)) return std::nullopt;
    return VertexMap{std::move(map)};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(vs.size()), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (const auto& [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), std::move(edges));
}

//======================================================================
// generators
//======================================================================

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidOrder("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw InvalidOrder("path_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) throw InvalidOrder("complete_graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw InvalidOrder("complete_bipartite: need m,n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph(m + n, std::move(edges));
}

Graph hypercube_graph(int dim) {
    if (dim < 0 || dim > 20) throw InvalidOrder("hypercube_graph: dimension out of range");
    const int n = 1 << dim;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if ((v & (1 << b)) == 0) edges.emplace_back(v, v | (1 << b));
    return Graph(n, std::move(edges));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw InvalidOrder("random_graph: negative order");
    std::mt19937_64 gen(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // fixed uniform mapping, independent of the standard library's
            // distribution implementation
            const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1ull << bit)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

} // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 6) throw InvalidOrder("nonisomorphic_graphs: supported for 1 <= n <= 6");
    const int m = n * (n - 1) / 2;

    // edge-bit permutation tables for every vertex permutation
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<std::vector<int>> tables;
    auto edge_index = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        // position of (i,j) in row-major upper triangle
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    do {
        std::vector<int> t(static_cast<std::size_t>(m));
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                t[static_cast<std::size_t>(bit)] = edge_index(pi[i], pi[j]);
        tables.push_back(std::move(t));
    } while (std::next_permutation(pi.begin(), pi.end()));

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        bool minimal = true;
        for (const auto& t : tables) {
            std::uint64_t img = 0;
            for (int bit = 0; bit < m; ++bit)
                if (mask & (1ull << bit)) img |= 1ull << t[static_cast<std::size_t>(bit)];
            if (img < mask) { minimal = false; break; }
        }
        if (minimal) out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

std::vector<Graph> nonisomorphic_trees(int n) {
    if (n < 1 || n > 8) throw InvalidOrder("nonisomorphic_trees: supported for 1 <= n <= 8");
    if (n == 1) return {Graph(1, {})};
    if (n == 2) return {Graph(2, {{0, 1}})};

    auto tree_from_pruefer = [n](const std::vector<int>& code) {
        std::vector<int> deg(static_cast<std::size_t>(n), 1);
        for (int v : code) ++deg[static_cast<std::size_t>(v)];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        std::vector<int> rest = code;
        for (int v : rest) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, v);
            if (--deg[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        return Graph(n, std::move(edges));
    };

    // enumerate all Pruefer codes, dedupe by degree sequence bucket plus
    // explicit isomorphism check (tree counts are tiny)
    std::vector<Graph> reps;
    std::vector<std::vector<int>> rep_degs;
    std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        Graph t = tree_from_pruefer(code);
        std::vector<int> d;
        for (int v = 0; v < n; ++v) d.push_back(t.degree(v));
        std::sort(d.begin(), d.end());
        bool fresh = true;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (rep_degs[i] == d && is_isomorphic(reps[i], t)) { fresh = false; break; }
        }
        if (fresh) {
            reps.push_back(std::move(t));
            rep_degs.push_back(std::move(d));
        }
        std::size_t i = 0;
        while (i < code.size() && code[i] == n - 1) code[i++] = 0;
        if (i == code.size()) break;
        ++code[i];
    }
    return reps;
}

} // namespace sunit
