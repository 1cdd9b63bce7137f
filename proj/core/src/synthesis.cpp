#include "sunit/synthesis.hpp"

#include "sunit/config.hpp"
#include "sunit/errors.hpp"
#include "sunit/factor.hpp"
#include "sunit/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sunit {

namespace {

// Integer values of a representation's points, throwing if any point has a
// denominator. Most builders here want plain integers to work with.
std::vector<BigInt> integer_points(const Representation& rep) {
    std::vector<BigInt> out;
    out.reserve(rep.points.size());
    for (const auto& pt : rep.points) {
        if (!pt.is_integral())
            throw PointsNotIntegral("representation points must be integers");
        out.push_back(pt.value().get_num());
    }
    return out;
}

// Unit scan order shared by add_pendant and k22_representations: S-units by
// height, with the exponent bound shrunk when |S| is large enough that the
// full grid would blow past ~2^19 units. Cached because pendant growth asks
// for the same list over and over.
const std::vector<SInteger>& unit_scan(const PrimeSet& s) {
    int bound = search_limits().unit_exponent_bound;
    const double cap = static_cast<double>(1L << 19);
    if (!s.empty()) {
        while (bound > 1 &&
               2.0 * std::pow(2.0 * bound + 1.0, static_cast<double>(s.size())) > cap)
            --bound;
    }

    static std::map<std::string, std::vector<SInteger>> cache;
    static std::mutex mu;
    std::ostringstream key;
    for (const auto& p : s.primes())
        key << p.get_str() << ',';
    key << '|' << bound;

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key.str());
    if (it == cache.end())
        it = cache.emplace(key.str(), s_units_by_height(s, bound)).first;
    return it->second;
}

BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// represent_any (induction over the vertices)
// ---------------------------------------------------------------------------

Representation represent_any(const Graph& g, int variant) {
    int n = g.order();
    if (n < 1)
        throw InvalidOrder("cannot represent the empty graph");
    if (variant < 0)
        throw BadParameters("variant must be >= 0");

    // Base prime set: all primes below max(n, 3). Guarantees every prime
    // outside it exceeds the number of points placed so far.
    int n_prime = std::max(n, 3);
    std::set<BigInt> s_work;
    for (BigInt p = 2; p < n_prime; p = next_prime_above(p))
        s_work.insert(p);

    std::vector<BigInt> a;
    a.push_back(0);

    // The variant twist adds one extra congruence at the last step that has
    // neighbors among the earlier vertices. Locate that step up front.
    int twist_step = -1;
    if (variant > 0) {
        for (int k = 1; k < n; ++k)
            for (int i = 0; i < k; ++i)
                if (g.has_edge(i, k))
                    twist_step = std::max(twist_step, k);
    }

    std::map<BigInt, std::map<BigInt, int>> factor_cache;
    auto factors_of = [&](const BigInt& v) -> const std::map<BigInt, int>& {
        auto it = factor_cache.find(v);
        if (it == factor_cache.end())
            it = factor_cache.emplace(v, factorize(v)).first;
        return it->second;
    };

    for (int k = 1; k < n; ++k) {
        std::vector<int> t_adj, t_non;
        for (int i = 0; i < k; ++i)
            (g.has_edge(i, k) ? t_adj : t_non).push_back(i);

        // Primes outside the working set dividing some pairwise difference
        // of the points placed so far.
        std::set<BigInt> d_set;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                BigInt diff = abs(a[j] - a[i]);
                for (const auto& [p, e] : factors_of(diff))
                    if (!s_work.count(p))
                        d_set.insert(p);
            }
        }
        // Any such prime is >= max(n,3) > k, so a residue class mod d free
        // of all current points exists. This keeps the scan below finite.
        for (const auto& d : d_set) {
            if (d <= k)
                throw VerificationFailed("separating prime " + d.get_str() +
                                         " does not exceed the point count");
        }

        // Only the fresh-prime (and twist) congruences go into the CRT. The
        // dirty primes in d_set merely forbid residue classes; folding them
        // into the modulus would blow the solution up to the product of all
        // primes ever seen, and the edge differences absorbed below would
        // quickly become infeasible to factor.
        std::vector<std::pair<BigInt, BigInt>> congruences; // (residue, modulus)

        // One fresh prime per non-neighbor, forcing q_t | a_k - a_t. Fresh
        // primes never reenter the working set later: they divide an
        // existing difference from now on, so every later step's residue
        // congruence steers new points away from them.
        std::vector<BigInt> avoid(s_work.begin(), s_work.end());
        avoid.insert(avoid.end(), d_set.begin(), d_set.end());
        std::sort(avoid.begin(), avoid.end());
        int fresh_count =
            static_cast<int>(t_non.size()) + (k == twist_step ? variant : 0);
        std::vector<BigInt> fresh = primes_outside(avoid, fresh_count);
        for (std::size_t t = 0; t < t_non.size(); ++t)
            congruences.emplace_back(a[t_non[t]], fresh[t]);

        if (k == twist_step) {
            // Push the new point into a deeper residue class of a fresh
            // prime, keyed to its smallest neighbor. The edge difference
            // then carries that prime into the final set, which is what
            // makes the variants inequivalent.
            BigInt big_q = fresh.back();
            congruences.emplace_back(a[t_adj.front()] + big_q, big_q * big_q);
        }

        // Least solution of the congruences that is new and sits in a clean
        // residue class modulo every dirty prime. The moduli are coprime to
        // every d (fresh primes avoid d_set), so stepping by crt.modulus
        // sweeps all classes mod d and the free class is reached.
        CrtSolution crt = crt_solve(congruences);
        BigInt x0 = crt.solution;
        for (long guard = 0;; ++guard) {
            if (guard > (1L << 20))
                throw SearchBudgetExceeded("no clean residue class within the scan budget");
            bool clean = std::find(a.begin(), a.end(), x0) == a.end();
            for (int i = 0; i < k && clean; ++i)
                for (const auto& d : d_set)
                    if ((x0 - a[i]) % d == 0) {
                        clean = false;
                        break;
                    }
            if (clean)
                break;
            x0 += crt.modulus;
        }
        a.push_back(x0);

        // Edges to earlier vertices must be S-units: absorb every prime of
        // those differences into the working set.
        for (int i : t_adj) {
            BigInt diff = abs(a[k] - a[i]);
            for (const auto& [p, e] : factors_of(diff))
                s_work.insert(p);
        }
    }

    if (variant > 0 && g.size() == 0) {
        // No edges anywhere, so no step could absorb a variant prime.
        // Enlarge the set with primes dividing no pairwise difference; they
        // change the prime set without changing the graph.
        int added = 0;
        BigInt p = 1;
        while (added < variant) {
            p = next_prime_above(p);
            if (s_work.count(p))
                continue;
            bool divides = false;
            for (int i = 0; i < n && !divides; ++i)
                for (int j = i + 1; j < n && !divides; ++j)
                    if ((a[j] - a[i]) % p == 0)
                        divides = true;
            if (!divides) {
                s_work.insert(p);
                ++added;
            }
        }
    }

    PrimeSet s{std::vector<BigInt>(s_work.begin(), s_work.end())};
    std::vector<SInteger> points;
    points.reserve(a.size());
    for (const auto& v : a)
        points.push_back(from_rational(v, 1, s));

    if (!(build_graph(s, points) == g))
        throw VerificationFailed("synthesized points do not realize the requested graph");
    return Representation{s, points, g, VertexMap::identity(n)};
}

// ---------------------------------------------------------------------------
// forest builders
// ---------------------------------------------------------------------------

SInteger add_isolated(const Representation& rep) {
    std::vector<BigInt> a = integer_points(rep);
    if (a.empty())
        throw EmptySet("cannot extend an empty representation");
    const BigInt q = primes_outside(rep.s.primes(), 1).front();

    long limit = search_limits().glue_shift_limit;
    for (long m = 1; m <= limit; ++m) {
        BigInt x = q * m;
        bool ok = true;
        for (const auto& ai : a) {
            BigInt d = x - ai;
            if (d == 0 || split_s_part(d, rep.s).second == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return from_rational(x, 1, rep.s);
    }
    throw SearchBudgetExceeded("no isolated point within the shift budget");
}

SInteger add_pendant(const Representation& rep, int anchor) {
    std::vector<BigInt> a = integer_points(rep);
    if (anchor < 0 || anchor >= static_cast<int>(a.size()))
        throw BadParameters("anchor index out of range");

    std::set<BigInt> diffs; // all ordered differences, both signs
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j)
                diffs.insert(a[i] - a[j]);

    for (const SInteger& u : unit_scan(rep.s)) {
        if (!u.is_integral())
            continue;
        BigInt uv = u.value().get_num();
        if (diffs.count(uv))
            continue; // collides with an existing difference
        bool clean = true;
        for (const auto& d : diffs) {
            BigInt w = d - uv;
            if (w == 0 || split_s_part(w, rep.s).second == 1) {
                clean = false;
                break;
            }
        }
        if (clean)
            return from_rational(a[anchor] + uv, 1, rep.s);
    }
    throw SearchBudgetExceeded("no pendant unit within the exponent budget");
}

Representation represent_forest(const Graph& g, const PrimeSet& s) {
    if (!is_forest(g))
        throw NotAForest("graph has a cycle");
    if (s.empty())
        throw EmptySet("prime set must be non-empty");

    std::optional<Representation> acc;
    std::vector<int> vertex_order; // graph vertex behind each accumulated point

    for (const auto& comp : components(g)) {
        // Grow this tree by pendants in BFS order from its least vertex.
        Representation tree{s, {SInteger(s)}, std::nullopt, std::nullopt};
        std::vector<int> tree_order{comp.front()};
        std::set<int> seen{comp.front()};
        std::vector<int> queue{comp.front()};
        std::size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            int v_pos = static_cast<int>(
                std::find(tree_order.begin(), tree_order.end(), v) - tree_order.begin());
            for (int w : g.neighbors(v)) {
                if (seen.count(w))
                    continue;
                seen.insert(w);
                tree.points.push_back(add_pendant(tree, v_pos));
                tree_order.push_back(w);
                queue.push_back(w);
            }
        }

        if (!acc) {
            acc = tree;
        } else {
            acc = glue_components(*acc, tree);
            acc->target = std::nullopt;
            acc->map = std::nullopt;
        }
        vertex_order.insert(vertex_order.end(), tree_order.begin(), tree_order.end());
    }

    Representation out = *acc;
    out.target = g;
    out.map = VertexMap{vertex_order};
    if (!out.verify())
        throw VerificationFailed("forest construction did not reproduce the graph");
    return out;
}

Representation glue_components(const Representation& a, const Representation& b) {
    if (a.s != b.s)
        throw PrimeSetMismatch("cannot glue representations over different prime sets");
    std::vector<BigInt> av = integer_points(a);
    std::vector<BigInt> bv = integer_points(b);

    const BigInt r = primes_outside(a.s.primes(), 1).front();

    long limit = search_limits().glue_shift_limit;
    for (long m = 1; m <= limit; ++m) {
        BigInt t = r * m;
        bool ok = true;
        for (const auto& x : av) {
            for (const auto& y : bv) {
                BigInt d = x + t - y;
                if (d == 0 || split_s_part(d, a.s).second == 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (!ok)
            continue;

        std::vector<SInteger> points;
        points.reserve(av.size() + bv.size());
        for (const auto& x : av)
            points.push_back(from_rational(x + t, 1, a.s));
        for (const auto& y : bv)
            points.push_back(from_rational(y, 1, a.s));

        Graph ta = a.target ? *a.target : a.graph();
        Graph tb = b.target ? *b.target : b.graph();
        std::vector<int> fwd =
            a.map ? a.map->forward : VertexMap::identity(ta.order()).forward;
        int off = ta.order();
        if (b.map)
            for (int v : b.map->forward)
                fwd.push_back(v + off);
        else
            for (int i = 0; i < tb.order(); ++i)
                fwd.push_back(i + off);

        Representation out{a.s, points, disjoint_union(ta, tb), VertexMap{fwd}};
        if (!out.verify())
            throw VerificationFailed("glued points acquired or lost an edge");
        return out;
    }
    throw SearchBudgetExceeded("no gluing shift within the budget");
}

// ---------------------------------------------------------------------------
// rescaling a one-prime representation onto another prime set
// ---------------------------------------------------------------------------

namespace {

struct LabeledGraph {
    Graph g;
    std::vector<BigInt> exponents; // ascending distinct label exponents
    std::vector<int> edge_rank;    // per edge, index into exponents
    std::vector<int> edge_sign;    // per edge (i < j), sign of a_j - a_i
};

// Reads off the +-p^m structure of a single-prime representation. Labels
// are differences, so the points themselves may sit anywhere.
LabeledGraph read_labels(const Representation& rep0) {
    if (rep0.s.size() != 1)
        throw PrimeSetMismatch("expected a representation over a single prime");
    Graph g0 = rep0.graph();
    std::set<BigInt> exps;
    std::vector<BigInt> edge_exp;
    std::vector<int> edge_sign;
    for (const auto& [i, j] : g0.edges()) {
        SInteger d = rep0.points[j] - rep0.points[i];
        const BigInt& e = d.exponents().front();
        if (e < 0)
            throw LabelNotPowerOfP("edge label " + d.str() +
                                   " is not a nonnegative power of the base prime");
        exps.insert(e);
        edge_exp.push_back(e);
        edge_sign.push_back(d.sign());
    }
    LabeledGraph out{g0, {exps.begin(), exps.end()}, {}, edge_sign};
    for (const auto& e : edge_exp)
        out.edge_rank.push_back(static_cast<int>(
            std::lower_bound(out.exponents.begin(), out.exponents.end(), e) -
            out.exponents.begin()));
    return out;
}

} // namespace

std::optional<Representation> rescale_with_units(const Representation& rep0, const PrimeSet& s,
                                                 const std::vector<SInteger>& units) {
    if (s.empty())
        throw EmptySet("prime set must be non-empty");
    LabeledGraph lg = read_labels(rep0);
    const Graph& g0 = lg.g;
    if (!is_connected(g0))
        throw NotConnected("rescaling needs a connected representation");
    if (units.size() != lg.exponents.size())
        throw BadParameters("expected one unit per distinct label exponent");
    for (const auto& u : units) {
        if (u.prime_set() != s)
            throw PrimeSetMismatch("replacement labels live over the wrong prime set");
        if (!is_s_unit(u))
            throw BadParameters("replacement labels must be S-units");
    }

    int n = g0.order();
    std::vector<SInteger> val(n, SInteger(s));
    std::vector<char> placed(n, 0);

    // Spanning tree walk from vertex 0, summing signed replacement labels.
    std::vector<int> queue{0};
    placed[0] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        for (int w : g0.neighbors(v)) {
            if (placed[w])
                continue;
            int lo = std::min(v, w), hi = std::max(v, w);
            int idx = g0.edge_index(lo, hi);
            const SInteger& step = units[lg.edge_rank[idx]];
            int sgn = lg.edge_sign[idx] * (v == lo ? 1 : -1);
            val[w] = (sgn > 0) ? val[v] + step : val[v] - step;
            placed[w] = 1;
            queue.push_back(w);
        }
    }

    // Every edge, tree or not, must come out as exactly its replacement
    // label. Non-tree edges are where a bad profile fails.
    const auto& edges = g0.edges();
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        auto [i, j] = edges[idx];
        const SInteger& want = units[lg.edge_rank[idx]];
        SInteger expect = (lg.edge_sign[idx] > 0) ? want : -want;
        if (val[j] - val[i] != expect)
            return std::nullopt;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (val[i] == val[j])
                return std::nullopt;
    if (!(build_graph(s, val) == g0))
        return std::nullopt;

    return Representation{s, val, rep0.target ? rep0.target : std::optional<Graph>(g0),
                          rep0.map ? rep0.map
                                   : std::optional<VertexMap>(VertexMap::identity(n))};
}

Representation rescale_representation(const Representation& rep0, const PrimeSet& s,
                                      int variant) {
    if (variant < 0)
        throw BadParameters("variant must be >= 0");
    if (s.empty())
        throw EmptySet("prime set must be non-empty");

    LabeledGraph lg = read_labels(rep0);
    if (!is_connected(lg.g))
        throw NotConnected("rescaling needs a connected representation");
    if (is_forest(lg.g))
        throw NoCycle("rescaling is for cycle-bearing graphs; use the forest builder");
    const BigInt& p = rep0.s.primes().front();
    if (p <= 2 * lg.g.size())
        throw PTooSmall("base prime must exceed twice the edge count");

    std::size_t k = lg.exponents.size();
    if (k < 2)
        throw BadParameters("need at least two distinct edge labels to rescale");

    const BigInt& q = s.primes().back(); // largest prime of the target set
    const BigInt two_n = 2 * lg.g.order();

    std::vector<std::vector<SInteger>> found_canon;
    int limit = search_limits().rescale_profile_limit;
    for (int j = 0; j < limit; ++j) {
        // Exponent profile: f_1 = 0 and each next power beats the previous
        // one by a factor above 2n * q^j. Larger j stretches the gaps,
        // changing which powers (hence which canonical forms) appear.
        std::vector<SInteger> units;
        unsigned long f = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0) {
                BigInt need = two_n * pow_int(q, f + static_cast<unsigned long>(j));
                unsigned long e = f + 1;
                while (pow_int(q, e) <= need)
                    ++e;
                f = e;
            }
            units.push_back(from_rational(pow_int(q, f), 1, s));
        }

        auto attempt = rescale_with_units(rep0, s, units);
        if (!attempt)
            continue;
        auto canon = canonicalize(s, attempt->points);
        if (std::find(found_canon.begin(), found_canon.end(), canon) != found_canon.end())
            continue;
        found_canon.push_back(canon);
        if (static_cast<int>(found_canon.size()) == variant + 1)
            return *attempt;
    }
    throw SearchBudgetExceeded("no verified rescaling profile within the budget");
}

// ---------------------------------------------------------------------------
// hypercube embeddings
// ---------------------------------------------------------------------------

bool CubeEmbedding::valid_for(const Graph& g) const {
    if (static_cast<int>(coords.size()) != g.order())
        return false;
    for (const auto& w : coords) {
        if (static_cast<int>(w.size()) != dimension)
            return false;
        for (char c : w)
            if (c != '0' && c != '1')
                return false;
    }
    std::set<std::string> distinct(coords.begin(), coords.end());
    if (static_cast<int>(distinct.size()) != g.order())
        return false;
    for (const auto& [i, j] : g.edges()) {
        int ham = 0;
        for (int b = 0; b < dimension; ++b)
            ham += coords[i][b] != coords[j][b];
        if (ham != 1)
            return false;
    }
    return true;
}

namespace {

int hamming32(std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a ^ b); }

struct EmbedSearch {
    const Graph& g;
    int dim;
    bool induced;
    const std::vector<int>& order;  // vertices in BFS-forest placement order
    const std::vector<int>& parent; // position in `order` of the parent, -1 for roots
    std::vector<std::uint32_t> word;
    std::vector<char> assigned;
    std::vector<char> used;

    bool fits(int v, std::uint32_t w) const {
        for (int x : g.neighbors(v))
            if (assigned[x] && hamming32(word[x], w) != 1)
                return false;
        if (induced) {
            for (int x = 0; x < g.order(); ++x)
                if (x != v && assigned[x] && !g.has_edge(x, v) &&
                    hamming32(word[x], w) < 2)
                    return false;
        }
        return true;
    }

    bool place(std::size_t pos) {
        if (pos == order.size())
            return true;
        int v = order[pos];
        if (parent[pos] < 0) {
            // Component root. The very first root is pinned to the zero
            // word; hypercube symmetry loses nothing. Later roots scan all
            // free words ascending.
            if (pos == 0)
                return !used[0] && fits(v, 0) && commit(pos, v, 0);
            std::uint32_t total = std::uint32_t(1) << dim;
            for (std::uint32_t w = 0; w < total; ++w)
                if (!used[w] && fits(v, w) && commit(pos, v, w))
                    return true;
            return false;
        }
        std::uint32_t pw = word[order[parent[pos]]];
        for (int b = 0; b < dim; ++b) {
            std::uint32_t w = pw ^ (std::uint32_t(1) << b);
            if (!used[w] && fits(v, w) && commit(pos, v, w))
                return true;
        }
        return false;
    }

    bool commit(std::size_t pos, int v, std::uint32_t w) {
        word[v] = w;
        assigned[v] = 1;
        used[w] = 1;
        if (place(pos + 1))
            return true;
        used[w] = 0;
        assigned[v] = 0;
        return false;
    }
};

} // namespace

std::optional<CubeEmbedding> hypercube_embed(const Graph& g, int max_dimension, bool induced) {
    if (max_dimension < 0 || max_dimension > 16)
        throw DimensionTooLarge("dimension must lie in [0, 16]");
    int n = g.order();
    if (n == 0)
        return CubeEmbedding{0, {}};
    if (!is_bipartite(g))
        return std::nullopt; // hypercubes and their subgraphs are bipartite

    // BFS forest placement order, roots at the least unvisited vertex.
    std::vector<int> order, parent_pos, pos_of(n, -1);
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
        if (seen[r])
            continue;
        seen[r] = 1;
        order.push_back(r);
        parent_pos.push_back(-1);
        pos_of[r] = static_cast<int>(order.size()) - 1;
        std::size_t head = order.size() - 1;
        while (head < order.size()) {
            int v = order[head++];
            for (int w : g.neighbors(v)) {
                if (seen[w])
                    continue;
                seen[w] = 1;
                order.push_back(w);
                parent_pos.push_back(pos_of[v]);
                pos_of[w] = static_cast<int>(order.size()) - 1;
            }
        }
    }

    int start = 0;
    while ((1L << start) < n)
        ++start;
    for (int d = start; d <= max_dimension; ++d) {
        EmbedSearch search{g,
                           d,
                           induced,
                           order,
                           parent_pos,
                           std::vector<std::uint32_t>(n, 0),
                           std::vector<char>(n, 0),
                           std::vector<char>(std::size_t(1) << d, 0)};
        if (search.place(0)) {
            CubeEmbedding emb;
            emb.dimension = d;
            emb.coords.resize(n);
            for (int v = 0; v < n; ++v) {
                std::string w(d, '0');
                for (int b = 0; b < d; ++b)
                    if (search.word[v] >> b & 1)
                        w[b] = '1';
                emb.coords[v] = std::move(w);
            }
            return emb;
        }
    }
    return std::nullopt;
}

std::vector<SInteger> embedding_values(const CubeEmbedding& emb, const BigInt& p) {
    if (!is_prime(p))
        throw NotAPrime(p.get_str() + " is not prime");
    PrimeSet s{{p}};
    std::vector<SInteger> out;
    out.reserve(emb.coords.size());
    for (const auto& w : emb.coords) {
        BigInt v = 0;
        for (int i = 0; i < emb.dimension; ++i)
            if (w[i] == '1')
                v += pow_int(p, static_cast<unsigned long>(i) + 1);
        out.push_back(from_rational(v, 1, s));
    }
    return out;
}

Representation cubical_to_representation(const Graph& g, const CubeEmbedding& emb,
                                         const PrimeSet& s, int variant) {
    if (!emb.valid_for(g))
        throw BadParameters("embedding does not fit the graph");
    if (s.empty())
        throw EmptySet("prime set must be non-empty");

    const BigInt p = next_prime_above(2 * g.size());
    PrimeSet sp{{p}};

    std::optional<Representation> acc;
    std::vector<int> vertex_order;

    for (const auto& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        Representation rep_c{s, {}, std::nullopt, std::nullopt};
        if (is_forest(sub)) {
            rep_c = represent_forest(sub, s);
            for (int local : rep_c.map->forward)
                vertex_order.push_back(comp[local]);
        } else {
            // Value map over {p}, rooted at the component's first vertex.
            auto value_points = [&](const CubeEmbedding& e,
                                    const std::vector<int>& idx) {
                std::vector<SInteger> raw = embedding_values(e, p);
                std::vector<SInteger> pts;
                pts.reserve(idx.size());
                for (int v : idx)
                    pts.push_back(raw[v] - raw[idx.front()]);
                return pts;
            };

            std::vector<SInteger> pts = value_points(emb, comp);
            if (!(build_graph(sp, pts) == sub)) {
                // The supplied embedding is not induced on this component:
                // two non-adjacent vertices sit at Hamming distance 1, and
                // the value map would give them a unit difference. Search
                // an induced embedding of the component instead.
                auto fixed = hypercube_embed(sub, 16, /*induced=*/true);
                if (!fixed)
                    throw SearchBudgetExceeded(
                        "no induced embedding for a non-forest component");
                std::vector<int> all(comp.size());
                for (std::size_t i = 0; i < comp.size(); ++i)
                    all[i] = static_cast<int>(i);
                pts = value_points(*fixed, all);
                if (!(build_graph(sp, pts) == sub))
                    throw VerificationFailed("induced embedding still misses the edge set");
            }
            Representation over_p{sp, pts, sub, VertexMap::identity(sub.order())};
            rep_c = (s == sp) ? over_p : rescale_representation(over_p, s, variant);
            for (int v : comp)
                vertex_order.push_back(v);
        }
        rep_c.target = std::nullopt;
        rep_c.map = std::nullopt;
        if (acc) {
            acc = glue_components(*acc, rep_c);
            acc->target = std::nullopt;
            acc->map = std::nullopt;
        } else {
            acc = rep_c;
        }
    }

    Representation out = *acc;
    out.target = g;
    out.map = VertexMap{vertex_order};
    if (!out.verify())
        throw VerificationFailed("cubical pipeline did not reproduce the graph");
    return out;
}

CubeEmbedding cube_from_representation(const Representation& rep) {
    LabeledGraph lg = read_labels(rep);
    const Graph& g0 = lg.g;
    if (!is_connected(g0))
        throw NotConnected("cube encoding needs a connected representation");
    const BigInt& p_big = rep.s.primes().front();
    if (p_big <= g0.size())
        throw PTooSmall("base prime must exceed the edge count");
    if (!p_big.fits_slong_p())
        throw DimensionTooLarge("base prime too large to expand into blocks");
    const long p = p_big.get_si();
    const std::size_t r = lg.exponents.size();
    if (2.0 * static_cast<double>(p) * static_cast<double>(r) > 200000.0)
        throw DimensionTooLarge("block expansion would exceed 200000 coordinates");

    // Coordinates of each vertex over the label exponents, walked along a
    // spanning tree from vertex 0.
    int n = g0.order();
    std::vector<std::vector<long>> coeff(n, std::vector<long>(r, 0));
    std::vector<char> placed(n, 0);
    placed[0] = 1;
    std::vector<int> queue{0};
    std::size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        for (int w : g0.neighbors(v)) {
            if (placed[w])
                continue;
            int lo = std::min(v, w), hi = std::max(v, w);
            int idx = g0.edge_index(lo, hi);
            int sgn = lg.edge_sign[idx] * (v == lo ? 1 : -1);
            coeff[w] = coeff[v];
            coeff[w][lg.edge_rank[idx]] += sgn;
            placed[w] = 1;
            queue.push_back(w);
        }
    }

    // Well-definedness across non-tree edges. With p above the edge count,
    // cycle sums in any single coordinate stay below p in magnitude and
    // must cancel exactly; a failure means the input was not a valid
    // representation over {p}.
    const auto& edges = g0.edges();
    for (std::size_t idx = 0; idx < edges.size(); ++idx) {
        auto [i, j] = edges[idx];
        for (std::size_t t = 0; t < r; ++t) {
            long want =
                (t == static_cast<std::size_t>(lg.edge_rank[idx])) ? lg.edge_sign[idx] : 0;
            if (coeff[j][t] - coeff[i][t] != want)
                throw VerificationFailed("edge relation is inconsistent across a cycle");
        }
    }
    for (int v = 0; v < n; ++v)
        for (std::size_t t = 0; t < r; ++t)
            if (coeff[v][t] <= -p || coeff[v][t] >= p)
                throw CoefficientOverflow("coordinate magnitude reached the base prime");

    // Indicator blocks: one block of width 2p per exponent, bit j set iff
    // j < coeff + p. Adjacent vertices then differ in exactly one bit.
    CubeEmbedding emb;
    emb.dimension = static_cast<int>(2 * p * static_cast<long>(r));
    emb.coords.resize(n);
    for (int v = 0; v < n; ++v) {
        std::string w(static_cast<std::size_t>(emb.dimension), '0');
        for (std::size_t t = 0; t < r; ++t) {
            long fill = coeff[v][t] + p;
            std::size_t base = t * static_cast<std::size_t>(2 * p);
            for (long j = 0; j < fill; ++j)
                w[base + static_cast<std::size_t>(j)] = '1';
        }
        emb.coords[v] = std::move(w);
    }
    if (!emb.valid_for(g0))
        throw VerificationFailed("block expansion failed validation");
    return emb;
}

std::vector<Representation> k22_representations(const PrimeSet& s, int count) {
    if (count < 0)
        throw BadParameters("count must be >= 0");
    if (s.empty())
        throw EmptySet("prime set must be non-empty");

    Graph k22 = complete_bipartite(2, 2);
    const SInteger one = from_rational(1, 1, s);

    std::vector<Representation> out;
    std::vector<std::vector<SInteger>> seen;
    for (const SInteger& w : unit_scan(s)) {
        if (static_cast<int>(out.size()) >= count)
            break;
        BigRat wv = w.value();
        if (wv == 1 || wv == -1)
            continue;
        SInteger wp1 = one + w;
        if (is_s_unit(wp1) || is_s_unit(one - w))
            continue;
        std::vector<SInteger> pts{SInteger(s), one, w, wp1};
        auto canon = canonicalize(s, pts);
        if (std::find(seen.begin(), seen.end(), canon) != seen.end())
            continue;
        auto iso = is_isomorphic(build_graph(s, pts), k22);
        if (!iso)
            throw VerificationFailed("0,1,w,1+w did not realize K_{2,2}");
        seen.push_back(canon);
        out.push_back(Representation{s, pts, k22, *iso});
    }
    if (static_cast<int>(out.size()) < count)
        throw SearchBudgetExceeded("fewer K_{2,2} classes than requested within the budget");
    return out;
}

} // namespace sunit
