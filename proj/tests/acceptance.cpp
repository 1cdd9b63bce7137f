// Acceptance gate: ten end-to-end criteria, one PASS/FAIL line each,
// nonzero exit when anything fails. Every criterion carries a wall-clock
// budget that is part of its pass condition; the functional tolerances
// (window sizes, bounds, expected point sets) are pinned inline.
#include "sunit/analyze.hpp"
#include "sunit/diophantine.hpp"
#include "sunit/primes.hpp"
#include "sunit/synthesis.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

using namespace sunit;

namespace {

PrimeSet ps(std::initializer_list<long> primes) {
    std::vector<BigInt> v;
    for (long p : primes)
        v.emplace_back(p);
    return PrimeSet{std::move(v)};
}

void req(bool ok, const std::string& what) {
    if (!ok)
        throw std::runtime_error(what);
}

std::vector<std::string> strs(const std::vector<SInteger>& v) {
    std::vector<std::string> out;
    for (const auto& x : v)
        out.push_back(x.str());
    return out;
}

bool realizes(const Representation& rep, const Graph& g) {
    return is_isomorphic(build_graph(rep.s, rep.points), g).has_value();
}

// every vertex after the first either hangs off an earlier one or starts
// a fresh component, so the result is acyclic by construction
Graph random_forest(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        if (rng() % 4 != 0)
            edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(v)), v);
    return Graph(n, std::move(edges));
}

Graph double_book() {
    return Graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                     {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

// independent recomputation of the edge-vertex triangle graph by scanning
// all vertex triples
Graph oracle_triangle_graph(const Graph& g) {
    const auto& ed = g.edges();
    std::map<std::pair<int, int>, int> id;
    for (std::size_t k = 0; k < ed.size(); ++k)
        id[ed[k]] = static_cast<int>(k);
    std::set<std::pair<int, int>> out;
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c))
                    continue;
                int e1 = id[{a, b}], e2 = id[{a, c}], e3 = id[{b, c}];
                out.insert({std::min(e1, e2), std::max(e1, e2)});
                out.insert({std::min(e1, e3), std::max(e1, e3)});
                out.insert({std::min(e2, e3), std::max(e2, e3)});
            }
    return Graph(static_cast<int>(ed.size()),
                 std::vector<std::pair<int, int>>(out.begin(), out.end()));
}

// carriers of the triangle-graph components, ordered by least edge index
std::vector<std::vector<int>> oracle_delta_components(const Graph& g) {
    Graph tg = oracle_triangle_graph(g);
    const auto& ed = g.edges();
    std::vector<std::vector<int>> out;
    std::vector<char> seen(ed.size(), 0);
    for (std::size_t k = 0; k < ed.size(); ++k) {
        if (seen[k])
            continue;
        std::vector<int> stack{static_cast<int>(k)}, comp;
        seen[k] = 1;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            comp.push_back(e);
            for (int f : tg.neighbors(e))
                if (!seen[static_cast<std::size_t>(f)]) {
                    seen[static_cast<std::size_t>(f)] = 1;
                    stack.push_back(f);
                }
        }
        std::set<int> carrier;
        for (int e : comp) {
            carrier.insert(ed[static_cast<std::size_t>(e)].first);
            carrier.insert(ed[static_cast<std::size_t>(e)].second);
        }
        out.emplace_back(carrier.begin(), carrier.end());
    }
    return out;
}

std::pair<Graph, std::vector<std::vector<int>>> oracle_h_graph(const Graph& g) {
    auto carriers = oracle_delta_components(g);
    int m = static_cast<int>(carriers.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> common;
            std::set_intersection(carriers[static_cast<std::size_t>(i)].begin(),
                                  carriers[static_cast<std::size_t>(i)].end(),
                                  carriers[static_cast<std::size_t>(j)].begin(),
                                  carriers[static_cast<std::size_t>(j)].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2)
                edges.emplace_back(i, j);
        }
    return {Graph(m, std::move(edges)), std::move(carriers)};
}

void criterion_1() {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : nonisomorphic_graphs(n)) {
            Representation rep = represent_any(g);
            req(rep.verify(), "represent_any output failed self-verification");
            req(realizes(rep, g), "represent_any output not isomorphic to input");
        }
}

void criterion_2() {
    std::mt19937 rng(20260825u);
    const PrimeSet sets[3] = {ps({2}), ps({3, 5}), ps({2, 3, 7})};
    for (int i = 0; i < 200; ++i) {
        int n = 1 + i % 10;
        Graph g = random_forest(n, rng);
        req(is_forest(g), "generator produced a non-forest");
        Representation rep = represent_forest(g, sets[i % 3]);
        req(realizes(rep, g), "represent_forest output not isomorphic to input");
    }
}

void criterion_3() {
    std::vector<Graph> positives{cycle_graph(4), cycle_graph(6), cycle_graph(8),
                                 hypercube_graph(3)};
    for (int n = 1; n <= 7; ++n)
        for (const Graph& t : nonisomorphic_trees(n))
            positives.push_back(t);

    const PrimeSet sets[3] = {ps({2}), ps({5}), ps({2, 3})};
    for (const Graph& g : positives) {
        auto emb = hypercube_embed(g, 10);
        req(emb.has_value(), "no hypercube embedding within dimension 10");
        req(emb->valid_for(g), "embedding fails its own validity check");
        for (const PrimeSet& s : sets) {
            Representation rep = cubical_to_representation(g, *emb, s);
            req(realizes(rep, g), "cubical representation not isomorphic to input");
        }

        // round trip through the cube encoding over a single large prime
        std::vector<BigInt> one_prime{next_prime_above(BigInt(2 * g.size()))};
        Representation rep_p = cubical_to_representation(g, *emb, PrimeSet{std::move(one_prime)});
        CubeEmbedding back = cube_from_representation(rep_p);
        Graph shape = build_graph(rep_p.s, rep_p.points);
        req(back.valid_for(shape), "cube round trip lost the unit-step structure");
        req(is_isomorphic(shape, g).has_value(), "cube round trip changed the graph");
    }

    for (const Graph& g : {complete_bipartite(2, 3), cycle_graph(3), cycle_graph(5),
                           complete_graph(4)})
        req(!hypercube_embed(g, 10), "found an embedding for a non-cubical graph");
}

void criterion_4() {
    PrimeSet s11 = ps({11}), s23 = ps({2, 3});
    Representation src;
    src.s = s11;
    for (long x : {0L, 1L, 12L, 11L})
        src.points.push_back(from_rational(BigInt(x), BigInt(1), s11));

    // the (1, 9) profile must be rejected: 10 - 9 + ... rebuilds a forbidden
    // unit difference of 8
    std::vector<SInteger> bad{from_rational(BigInt(1), BigInt(1), s23),
                              from_rational(BigInt(9), BigInt(1), s23)};
    req(!rescale_with_units(src, s23, bad).has_value(),
        "profile (1, 9) should fail verification");

    const char* expected[3][4] = {{"0", "1", "28", "27"},
                                  {"0", "1", "82", "81"},
                                  {"0", "1", "244", "243"}};
    std::vector<Representation> variants;
    for (int v = 0; v < 3; ++v) {
        Representation out = rescale_representation(src, s23, v);
        auto got = strs(out.points);
        std::vector<std::string> want(expected[v], expected[v] + 4);
        req(got == want, "rescale variant " + std::to_string(v) + " points differ");
        variants.push_back(out);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            req(!are_equivalent(s23, variants[static_cast<std::size_t>(i)].points,
                                variants[static_cast<std::size_t>(j)].points),
                "rescale variants are equivalent");
}

void criterion_5() {
    UnitEquation eq;
    eq.coefficients = {BigRat(1), BigRat(1)};
    eq.s = ps({2});
    eq.exponent_bound = 10;
    auto sols = solve_bounded(eq);
    req(sols.size() == 3, "x + y = 1 over {2} should have exactly 3 solutions");
    std::set<std::vector<std::string>> got;
    for (const auto& sol : sols)
        got.insert(strs(sol.values));
    std::set<std::vector<std::string>> want{{"1/2", "1/2"}, {"-1", "2"}, {"2", "-1"}};
    req(got == want, "x + y = 1 over {2} solution set differs");

    eq.s = ps({3, 5});
    req(solve_bounded(eq).empty(), "x + y = 1 over {3, 5} should be unsolvable");

    for (const PrimeSet& s : {ps({2}), ps({3}), ps({2, 3}), ps({2, 5})}) {
        SolutionCountReport rep = count_solutions_vs_bound(s, 8);
        BigInt expect = 3 * pow_big(BigInt(7), 2 * static_cast<unsigned long>(s.size()) + 3);
        req(rep.bound == expect, "solution bound not 3 * 7^(2|S|+3)");
        req(rep.within, "solution count exceeds the bound");
    }
}

void criterion_6() {
    const long pool[4] = {2, 3, 5, 7};
    for (int mask = 1; mask < 16; ++mask) {
        std::vector<BigInt> v;
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b))
                v.emplace_back(pool[b]);
        PrimeSet s{std::move(v)};
        UnitEquation eq;
        eq.coefficients = {BigRat(1), BigRat(1)};
        eq.s = s;
        eq.exponent_bound = 8;
        bool solvable = !solve_bounded(eq).empty();
        req(has_exceptional_units(s) == solvable,
            "exceptional-unit predicate disagrees with the solver");
        req(has_exceptional_units(s) == s.contains(BigInt(2)),
            "exceptional-unit predicate should be membership of 2");
    }
}

void criterion_7() {
    PrimeSet s = ps({2, 3});
    auto reps = k22_representations(s, 5);
    req(reps.size() == 5, "expected five K_{2,2} representations");
    Graph k22 = complete_bipartite(2, 2);
    for (const auto& r : reps) {
        req(r.verify(), "K_{2,2} representation failed self-verification");
        req(realizes(r, k22), "K_{2,2} representation has the wrong shape");
    }
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            req(!are_equivalent(s, reps[i].points, reps[j].points),
                "K_{2,2} representations are equivalent");
}

void criterion_8() {
    const PrimeSet sets[3] = {ps({2}), ps({3}), ps({2, 3})};
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            for (const PrimeSet& s : sets) {
                Verdict v = classify(g, s);
                if (v.status == VerdictStatus::NotRepresentable) {
                    req(!brute_force_search(g, s, 48),
                        "window search found a witness for a NOT_REPRESENTABLE graph");
                } else if (v.status == VerdictStatus::RepresentableAllS) {
                    Representation w;
                    if (is_forest(g)) {
                        w = represent_forest(g, s);
                    } else {
                        auto emb = hypercube_embed(g, 10);
                        req(emb.has_value(),
                            "REPRESENTABLE_ALL_S verdict without an embedding");
                        w = cubical_to_representation(g, *emb, s);
                    }
                    req(realizes(w, g), "synthesized witness does not realize the graph");
                }
            }
}

void criterion_9() {
    req(evaluate_bound(BoundName::EvertseA, {.s_size = 1}) == BigInt(50421),
        "EvertseA(1) != 50421");
    req(evaluate_bound(BoundName::Thm36, {.s_size = 1}) == 3 * pow_big(BigInt(2), 32),
        "Thm36(1) != 3 * 2^32");
    req(evaluate_bound(BoundName::GyoryC, {.s_size = 1}) == 3 * pow_big(BigInt(2), 48),
        "GyoryC(1) != 3 * 2^48");
}

void criterion_10() {
    std::mt19937 rng(4242u);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + i % 8;
        double p = 0.15 + 0.7 * (static_cast<double>(rng() % 1000) / 1000.0);
        Graph g = random_graph(n, p, 1000u + static_cast<std::uint64_t>(i));
        req(triangle_graph(g) == oracle_triangle_graph(g),
            "triangle graph differs from the triple-scan oracle");
        req(delta_components(g) == oracle_delta_components(g),
            "delta components differ from the oracle");
        req(h_graph(g) == oracle_h_graph(g), "H graph differs from the oracle");
    }

    req(is_connected(triangle_graph(complete_graph(4))),
        "triangle graph of K_4 should be connected");

    auto [h, carriers] = h_graph(double_book());
    req(h == Graph(2, {{0, 1}}), "two books sharing a vertex pair: H should be one edge");
    req(carriers == std::vector<std::vector<int>>({{0, 1, 2, 3}, {0, 1, 4, 5}}),
        "double book carriers differ");
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        double budget_s;
        std::function<void()> run;
    };
    const std::vector<Criterion> table{
        {"represent_any realizes every graph on at most 6 vertices", 60.0, criterion_1},
        {"represent_forest handles 200 random forests over three prime sets", 30.0,
         criterion_2},
        {"hypercube embeddings: positives, negatives, cube round trip", 120.0, criterion_3},
        {"rescaling worked example with three inequivalent variants", 5.0, criterion_4},
        {"bounded unit-equation solver: exact solution sets and counts", 10.0, criterion_5},
        {"exceptional units exist exactly when 2 lies in S", 10.0, criterion_6},
        {"five pairwise inequivalent K_{2,2} representations", 5.0, criterion_7},
        {"verdicts on graphs up to 5 vertices, cross-checked by search", 120.0, criterion_8},
        {"threshold bound values are exact", 1.0, criterion_9},
        {"triangle machinery matches brute-force recomputation", 10.0, criterion_10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string reason;
        try {
            table[i].run();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        if (reason.empty() && secs > table[i].budget_s)
            reason = "over budget (" + std::to_string(table[i].budget_s) + "s)";
        bool ok = reason.empty();
        failures += ok ? 0 : 1;
        std::printf("[%2zu/10] %s %s (%.1fs)\n", i + 1, ok ? "PASS" : "FAIL",
                    table[i].label, secs);
        if (!ok)
            std::printf("        %s\n", reason.c_str());
    }
    std::printf("acceptance: %zu/10 criteria passed\n", table.size() - failures);
    return failures == 0 ? 0 : 1;
}
