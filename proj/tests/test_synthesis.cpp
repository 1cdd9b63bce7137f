#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sunit/synthesis.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace sunit;

namespace {

PrimeSet ps(std::initializer_list<long> primes) {
    std::vector<BigInt> v;
    for (long p : primes)
        v.emplace_back(p);
    return PrimeSet{std::move(v)};
}

std::vector<SInteger> ints(const PrimeSet& s, std::initializer_list<long> values) {
    std::vector<SInteger> out;
    for (long v : values)
        out.push_back(from_rational(v, 1, s));
    return out;
}

std::vector<std::string> strs(const std::vector<SInteger>& v) {
    std::vector<std::string> out;
    for (const auto& x : v)
        out.push_back(x.str());
    return out;
}

std::vector<long> prime_list(const PrimeSet& s) {
    std::vector<long> out;
    for (const auto& p : s.primes())
        out.push_back(p.get_si());
    return out;
}

// random forest: a Prufer-coded tree with a fraction of its edges dropped
Graph random_forest(int n, std::mt19937& rng) {
    if (n == 1)
        return Graph(1, {});
    std::vector<std::pair<int, int>> edges;
    if (n == 2) {
        edges.push_back({0, 1});
    } else {
        std::vector<int> prufer(n - 2), deg(n, 1);
        for (int& x : prufer) {
            x = static_cast<int>(rng() % n);
            ++deg[x];
        }
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1)
                leaves.insert(v);
        for (int x : prufer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back({std::min(leaf, x), std::max(leaf, x)});
            if (--deg[x] == 1)
                leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : edges)
        if (rng() % 10 < 7)
            kept.push_back(e);
    return Graph(n, std::move(kept));
}

} // namespace

TEST_CASE("represent_any worked traces") {
    // K_3: base set {2}, points land on 0,1,2
    auto k3 = represent_any(complete_graph(3));
    CHECK(prime_list(k3.s) == std::vector<long>({2}));
    CHECK(strs(k3.points) == std::vector<std::string>({"0", "1", "2"}));
    CHECK(k3.verify());

    // C_4: the non-neighbor congruences route through 5 and 7; the dirty
    // prime 5 pushes the last point from 1 to 8, and the edge differences
    // 8 = 2^3 and 3 stay inside the base set
    auto c4 = represent_any(cycle_graph(4));
    CHECK(prime_list(c4.s) == std::vector<long>({2, 3}));
    CHECK(strs(c4.points) == std::vector<std::string>({"0", "1", "5", "8"}));
    CHECK(c4.verify());
    CHECK(c4.graph() == cycle_graph(4));

    // single vertex and single edge
    auto k1 = represent_any(Graph(1, {}));
    CHECK(strs(k1.points) == std::vector<std::string>({"0"}));
    CHECK(prime_list(k1.s) == std::vector<long>({2}));

    auto k2 = represent_any(complete_graph(2));
    CHECK(strs(k2.points) == std::vector<std::string>({"0", "1"}));
    CHECK(prime_list(k2.s) == std::vector<long>({2}));

    // two isolated vertices: separation through the first outside prime 3
    auto e2 = represent_any(Graph(2, {}));
    CHECK(strs(e2.points) == std::vector<std::string>({"0", "3"}));
    CHECK(prime_list(e2.s) == std::vector<long>({2}));

    CHECK_THROWS_AS(represent_any(Graph(0, {})), InvalidOrder);
    CHECK_THROWS_AS(represent_any(complete_graph(3), -1), BadParameters);
}

TEST_CASE("represent_any on every class up to five vertices") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : nonisomorphic_graphs(n)) {
            auto rep = represent_any(g);
            CHECK(rep.verify());
            CHECK(rep.graph() == g); // identity map, not just isomorphic
            CHECK(rep.points_integral());
        }
}

TEST_CASE("represent_any variants enlarge the prime set differently") {
    Graph g = cycle_graph(4);
    auto v0 = represent_any(g, 0);
    auto v1 = represent_any(g, 1);
    auto v2 = represent_any(g, 2);
    CHECK(v0.verify());
    CHECK(v1.verify());
    CHECK(v2.verify());
    CHECK(prime_list(v0.s) != prime_list(v1.s));
    CHECK(prime_list(v0.s) != prime_list(v2.s));
    CHECK(prime_list(v1.s) != prime_list(v2.s));

    // edgeless graphs get padding primes that divide no difference
    auto e0 = represent_any(Graph(2, {}), 0);
    auto e2 = represent_any(Graph(2, {}), 2);
    CHECK(e2.verify());
    CHECK(prime_list(e0.s).size() + 2 == prime_list(e2.s).size());
}

TEST_CASE("add_isolated picks the first clean multiple of an outside prime") {
    PrimeSet s = ps({2, 3});
    Representation rep{s, ints(s, {0, 1}), std::nullopt, std::nullopt};
    SInteger nxt = add_isolated(rep);
    CHECK(nxt.str() == "15"); // 5 and 10 both sit a unit away from a point

    // the extended set really has an isolated vertex
    auto pts2 = rep.points;
    pts2.push_back(nxt);
    Graph g = build_graph(s, pts2);
    CHECK(g.degree(2) == 0);
    CHECK(g.has_edge(0, 1));

    Representation empty{s, {}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(add_isolated(empty), EmptySet);
}

TEST_CASE("add_pendant scans units by height") {
    PrimeSet s = ps({2});
    Representation rep{s, ints(s, {0, 1}), std::nullopt, std::nullopt};
    // u = 1, -1 collide with differences; 2, -2 land a unit away; 4 is clean
    SInteger nxt = add_pendant(rep, 1);
    CHECK(nxt.str() == "5");

    auto pts2 = rep.points;
    pts2.push_back(nxt);
    Graph g = build_graph(s, pts2);
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));

    CHECK_THROWS_AS(add_pendant(rep, 2), BadParameters);
    CHECK_THROWS_AS(add_pendant(rep, -1), BadParameters);

    PrimeSet frac = ps({2});
    Representation half{frac, {from_rational(1, 2, frac)}, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(add_pendant(half, 0), PointsNotIntegral);
}

TEST_CASE("represent_forest worked traces") {
    PrimeSet s2 = ps({2});
    auto p3 = represent_forest(path_graph(3), s2);
    CHECK(strs(p3.points) == std::vector<std::string>({"0", "1", "5"}));
    CHECK(p3.verify());

    // two disjoint edges glue at shift 6
    Graph m2 = disjoint_union(complete_graph(2), complete_graph(2));
    auto rep = represent_forest(m2, s2);
    CHECK(strs(rep.points) == std::vector<std::string>({"6", "7", "0", "1"}));
    CHECK(rep.verify());

    CHECK_THROWS_AS(represent_forest(cycle_graph(3), s2), NotAForest);
    CHECK_THROWS_AS(represent_forest(path_graph(2), PrimeSet{}), EmptySet);
}

TEST_CASE("represent_forest over assorted prime sets") {
    std::mt19937 rng(0xF0'0D);
    const PrimeSet sets[] = {ps({2}), ps({3, 5}), ps({2, 3, 7})};
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph f = random_forest(n, rng);
        const PrimeSet& s = sets[iter % 3];
        auto rep = represent_forest(f, s);
        CHECK(rep.verify());
        CHECK(rep.points_integral());
        CHECK(static_cast<int>(rep.points.size()) == n);
    }

    // stars need many pendants off one anchor
    auto star = represent_forest(complete_bipartite(1, 5), ps({3}));
    CHECK(star.verify());
}

TEST_CASE("glue_components keeps both sides apart") {
    PrimeSet s = ps({2});
    Representation a{s, ints(s, {0, 1}), std::nullopt, std::nullopt};
    Representation b{s, ints(s, {0, 1}), std::nullopt, std::nullopt};
    auto glued = glue_components(a, b);
    CHECK(strs(glued.points) == std::vector<std::string>({"6", "7", "0", "1"}));
    REQUIRE(glued.target.has_value());
    CHECK(*glued.target == disjoint_union(complete_graph(2), complete_graph(2)));
    CHECK(glued.verify());

    Representation c{ps({3}), ints(ps({3}), {0, 1}), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(glue_components(a, c), PrimeSetMismatch);
}

TEST_CASE("rescale worked example") {
    // C_4 over {11} with labels 11^0 and 11^1
    PrimeSet s11 = ps({11});
    Representation over11{s11, ints(s11, {0, 1, 12, 11}), std::nullopt, std::nullopt};
    REQUIRE(over11.graph() == cycle_graph(4));

    PrimeSet s23 = ps({2, 3});
    auto rescaled = rescale_representation(over11, s23, 0);
    CHECK(strs(rescaled.points) == std::vector<std::string>({"0", "1", "28", "27"}));
    CHECK(rescaled.graph() == cycle_graph(4));

    // adversarial profile (1, 9): the spare difference 10-1-1=8 is a unit
    // over {2,3}, so the verifier must reject it
    auto bad = rescale_with_units(over11, s23,
                                  {from_rational(1, 1, s23), from_rational(9, 1, s23)});
    CHECK(!bad.has_value());

    // (1, 16) over {2} passes and gives the expected walk values
    PrimeSet s2 = ps({2});
    auto good = rescale_with_units(over11, s2,
                                   {from_rational(1, 1, s2), from_rational(16, 1, s2)});
    REQUIRE(good.has_value());
    CHECK(strs(good->points) == std::vector<std::string>({"0", "1", "17", "16"}));
    CHECK(good->graph() == cycle_graph(4));
}

TEST_CASE("rescale variants are pairwise inequivalent") {
    PrimeSet s11 = ps({11});
    Representation over11{s11, ints(s11, {0, 1, 12, 11}), std::nullopt, std::nullopt};
    PrimeSet s23 = ps({2, 3});

    auto v0 = rescale_representation(over11, s23, 0);
    auto v1 = rescale_representation(over11, s23, 1);
    auto v2 = rescale_representation(over11, s23, 2);
    CHECK(strs(v1.points) == std::vector<std::string>({"0", "1", "82", "81"}));
    CHECK(strs(v2.points) == std::vector<std::string>({"0", "1", "244", "243"}));
    CHECK(!are_equivalent(s23, v0.points, v1.points));
    CHECK(!are_equivalent(s23, v0.points, v2.points));
    CHECK(!are_equivalent(s23, v1.points, v2.points));
    for (const auto* v : {&v0, &v1, &v2})
        CHECK(v->graph() == cycle_graph(4));
}

TEST_CASE("rescale input validation") {
    PrimeSet s11 = ps({11});
    PrimeSet s23 = ps({2, 3});

    // forests have no cycle to pin the labels
    Representation path{s11, ints(s11, {0, 1, 12}), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(rescale_representation(path, s23, 0), NoCycle);

    // base prime must beat twice the edge count: C_4 over {5}
    PrimeSet s5 = ps({5});
    Representation small{s5, ints(s5, {0, 1, 26, 25}), std::nullopt, std::nullopt};
    REQUIRE(small.graph() == cycle_graph(4));
    CHECK_THROWS_AS(rescale_representation(small, s23, 0), PTooSmall);

    // two primes in the source set
    Representation wide{s23, ints(s23, {0, 1, 2}), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(rescale_representation(wide, ps({5}), 0), PrimeSetMismatch);

    // disconnected source
    PrimeSet s37 = ps({37});
    Representation split{s37, ints(s37, {0, 1, 38, 37, 3, 4, 41, 40}),
                         std::nullopt, std::nullopt};
    CHECK_THROWS_AS(rescale_representation(split, s23, 0), NotConnected);

    CHECK_THROWS_AS(rescale_representation(path, PrimeSet{}, 0), EmptySet);
}

TEST_CASE("hypercube embeddings") {
    auto p4 = hypercube_embed(path_graph(4), 4);
    REQUIRE(p4.has_value());
    CHECK(p4->dimension == 2);
    CHECK(p4->coords == std::vector<std::string>({"00", "10", "11", "01"}));
    CHECK(p4->valid_for(path_graph(4)));

    auto c6 = hypercube_embed(cycle_graph(6), 10);
    REQUIRE(c6.has_value());
    CHECK(c6->dimension == 3);
    CHECK(c6->valid_for(cycle_graph(6)));

    auto q3 = hypercube_embed(hypercube_graph(3), 10);
    REQUIRE(q3.has_value());
    CHECK(q3->dimension == 3);

    // odd cycles are not bipartite; K_{2,3} fails because two vertices at
    // distance two in a hypercube share exactly two neighbors
    CHECK(!hypercube_embed(cycle_graph(3), 10));
    CHECK(!hypercube_embed(cycle_graph(5), 10));
    CHECK(!hypercube_embed(complete_graph(4), 10));
    CHECK(!hypercube_embed(complete_bipartite(2, 3), 10));

    // induced mode pushes P_4 out of the square
    auto induced = hypercube_embed(path_graph(4), 4, true);
    REQUIRE(induced.has_value());
    CHECK(induced->dimension == 3);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 2; j < 4; ++j) {
            int ham = 0;
            for (int b = 0; b < induced->dimension; ++b)
                ham += induced->coords[i][b] != induced->coords[j][b];
            CHECK(ham >= 2);
        }

    // a star needs one dimension per leaf
    auto star = hypercube_embed(complete_bipartite(1, 6), 10);
    REQUIRE(star.has_value());
    CHECK(star->dimension == 6);

    CHECK(hypercube_embed(Graph(0, {}), 3).has_value());
    CHECK_THROWS_AS(hypercube_embed(path_graph(2), 17), DimensionTooLarge);
}

TEST_CASE("valid_for rejects mismatches") {
    CubeEmbedding e{2, {"00", "10", "11", "01"}};
    CHECK(e.valid_for(cycle_graph(4)));
    CHECK(!e.valid_for(path_graph(3)));                   // wrong order
    CHECK(!e.valid_for(complete_graph(4)));               // diagonal edges
    CubeEmbedding dup{2, {"00", "10", "10", "01"}};
    CHECK(!dup.valid_for(cycle_graph(4)));                // repeated word
    CubeEmbedding ragged{2, {"00", "1", "11", "01"}};
    CHECK(!ragged.valid_for(cycle_graph(4)));
}

TEST_CASE("embedding values expand over a prime") {
    CubeEmbedding e{2, {"00", "10", "11"}};
    auto vals = embedding_values(e, BigInt(7));
    CHECK(strs(vals) == std::vector<std::string>({"0", "7", "56"}));
    CHECK_THROWS_AS(embedding_values(e, BigInt(6)), NotAPrime);
}

TEST_CASE("cubical pipeline on C_4") {
    Graph c4 = cycle_graph(4);
    auto emb = hypercube_embed(c4, 10);
    REQUIRE(emb.has_value());

    auto rep2 = cubical_to_representation(c4, *emb, ps({2}));
    CHECK(strs(rep2.points) == std::vector<std::string>({"0", "1", "17", "16"}));
    CHECK(rep2.verify());

    auto rep23 = cubical_to_representation(c4, *emb, ps({2, 3}));
    CHECK(rep23.verify());
    CHECK(rep23.graph() == c4);

    // forests route through the pendant builder
    auto emb_p3 = hypercube_embed(path_graph(3), 10);
    REQUIRE(emb_p3.has_value());
    auto rep_p3 = cubical_to_representation(path_graph(3), *emb_p3, ps({2}));
    CHECK(rep_p3.verify());

    // mixed components: a square and an edge
    Graph mixed = disjoint_union(c4, complete_graph(2));
    auto emb_mixed = hypercube_embed(mixed, 10);
    REQUIRE(emb_mixed.has_value());
    auto rep_mixed = cubical_to_representation(mixed, *emb_mixed, ps({2}));
    CHECK(rep_mixed.verify());

    CHECK_THROWS_AS(cubical_to_representation(c4, CubeEmbedding{1, {"0", "1"}}, ps({2})),
                    BadParameters);
    CHECK_THROWS_AS(cubical_to_representation(c4, *emb, PrimeSet{}), EmptySet);
}

TEST_CASE("cubical pipeline survives non-induced embeddings") {
    // the natural C_6 walk in Q_3 puts two non-neighbors at Hamming
    // distance one; the pipeline must detect that and re-embed induced
    Graph c6 = cycle_graph(6);
    auto emb = hypercube_embed(c6, 10);
    REQUIRE(emb.has_value());
    auto rep = cubical_to_representation(c6, *emb, ps({2}));
    CHECK(rep.verify());
    CHECK(rep.graph() == c6);

    auto rep5 = cubical_to_representation(c6, *emb, ps({5}));
    CHECK(rep5.verify());
}

TEST_CASE("cube encoding from a single-prime representation") {
    PrimeSet s7 = ps({7});
    Representation rep{s7, ints(s7, {0, 7, 56}), std::nullopt, std::nullopt};
    auto emb = cube_from_representation(rep);
    CHECK(emb.dimension == 28); // 2 * 7 * two exponent blocks
    CHECK(emb.valid_for(path_graph(3)));
    // indicator blocks: ones count tracks the walk coefficients
    auto ones = [](const std::string& w) {
        return std::count(w.begin(), w.end(), '1');
    };
    CHECK(ones(emb.coords[0]) == 14);
    CHECK(ones(emb.coords[1]) == 15);
    CHECK(ones(emb.coords[2]) == 16);

    // round trip through the value map
    auto vals = embedding_values(emb, BigInt(59));
    PrimeSet s59 = ps({59});
    CHECK(build_graph(s59, {vals[0], vals[1], vals[2]}) == path_graph(3));

    // guards
    Representation wide{ps({2, 3}), ints(ps({2, 3}), {0, 1}), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(cube_from_representation(wide), PrimeSetMismatch);

    Representation split{s7, ints(s7, {0, 7, 2, 9}), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(cube_from_representation(split), NotConnected);

    PrimeSet s2 = ps({2});
    Representation tiny{s2, ints(s2, {0, 1, 2}), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(cube_from_representation(tiny), PTooSmall);

    Representation frac{s7, {from_rational(0, 1, s7), from_rational(1, 7, s7)},
                        std::nullopt, std::nullopt};
    CHECK_THROWS_AS(cube_from_representation(frac), LabelNotPowerOfP);
}

TEST_CASE("K_{2,2} classes from the 0,1,w,1+w family") {
    PrimeSet s = ps({2, 3});
    auto reps = k22_representations(s, 5);
    REQUIRE(reps.size() == 5);
    for (const auto& r : reps) {
        CHECK(r.verify());
        CHECK(is_isomorphic(r.graph(), complete_bipartite(2, 2)).has_value());
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK(!are_equivalent(s, reps[i].points, reps[j].points));

    CHECK(k22_representations(s, 0).empty());
    CHECK_THROWS_AS(k22_representations(s, -1), BadParameters);
    CHECK_THROWS_AS(k22_representations(PrimeSet{}, 1), EmptySet);
}

TEST_CASE("the w-orbit of K_{2,2} collapses to one canonical form") {
    PrimeSet s = ps({2, 3});
    const char* expect[] = {"0", "1", "6", "7"};
    for (long num : {6L, -6L}) {
        auto pts = ints(s, {0, 1, num, 1 + num});
        CHECK(strs(canonicalize(s, pts)) ==
              std::vector<std::string>(expect, expect + 4));
    }
    for (long den : {6L, -6L}) {
        std::vector<SInteger> pts{from_rational(0, 1, s), from_rational(1, 1, s),
                                  from_rational(1, den, s),
                                  from_rational(den + 1, den, s)};
        CHECK(strs(canonicalize(s, pts)) ==
              std::vector<std::string>(expect, expect + 4));
    }
}
