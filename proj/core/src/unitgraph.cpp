#include "sunit/unitgraph.hpp"

#include <algorithm>

namespace sunit {

Graph Representation::graph() const { return build_graph(s, points); }

bool Representation::verify() const {
    if (!target) return true;
    const Graph g = graph();
    if (map) return map->is_isomorphism(g, *target);
    return is_isomorphic(g, *target).has_value();
}

bool Representation::points_integral() const {
    return std::all_of(points.begin(), points.end(),
                       [](const SInteger& p) { return p.is_integral(); });
}

Graph build_graph(const PrimeSet& s, const std::vector<SInteger>& points) {
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        if (points[static_cast<std::size_t>(i)].prime_set() != s)
            throw PrimeSetMismatch("build_graph: point over a different prime set");
        for (int j = i + 1; j < n; ++j)
            if (points[static_cast<std::size_t>(i)] == points[static_cast<std::size_t>(j)])
                throw DuplicatePoints("build_graph: points must be pairwise distinct");
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (is_s_unit(points[static_cast<std::size_t>(j)] - points[static_cast<std::size_t>(i)]))
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

namespace {

// sort ascending, translate min to 0, divide out the common S-part
std::vector<SInteger> normal_half(const PrimeSet& s, std::vector<SInteger> pts) {
    std::sort(pts.begin(), pts.end());
    const SInteger base = pts.front();
    for (SInteger& p : pts) p = p - base;

    // common S-part: p^(min valuation over nonzero elements) for each p
    std::vector<BigInt> minexp;
    bool any = false;
    for (const SInteger& p : pts) {
        if (p.is_zero()) continue;
        if (!any) { minexp = p.exponents(); any = true; continue; }
        for (std::size_t i = 0; i < minexp.size(); ++i)
            minexp[i] = std::min(minexp[i], p.exponents()[i]);
    }
    if (!any) return pts; // singleton {0}
    for (BigInt& e : minexp) e = -e;
    const SInteger scale(s, 1, std::move(minexp), BigInt(1));
    for (SInteger& p : pts) p = p * scale;
    return pts;
}

bool lex_less(const std::vector<SInteger>& a, const std::vector<SInteger>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

} // namespace

std::vector<SInteger> canonicalize(const PrimeSet& s, const std::vector<SInteger>& points) {
    std::vector<SInteger> pts;
    for (const SInteger& p : points) {
        if (p.prime_set() != s) throw PrimeSetMismatch("canonicalize: point over a different prime set");
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (pts.empty()) throw EmptySet("canonicalize: empty point set");

    std::vector<SInteger> neg;
    neg.reserve(pts.size());
    for (const SInteger& p : pts) neg.push_back(-p);

    std::vector<SInteger> a = normal_half(s, std::move(pts));
    std::vector<SInteger> b = normal_half(s, std::move(neg));
    return lex_less(b, a) ? b : a;
}

bool are_equivalent(const PrimeSet& s, const std::vector<SInteger>& a,
                    const std::vector<SInteger>& b) {
    const std::vector<SInteger> ca = canonicalize(s, a);
    const std::vector<SInteger> cb = canonicalize(s, b);
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return false;
    return true;
}

std::vector<SInteger> scale_to_integers(const PrimeSet& s, const std::vector<SInteger>& points) {
    std::vector<BigInt> need(s.size(), BigInt(0));
    for (const SInteger& p : points) {
        if (p.prime_set() != s) throw PrimeSetMismatch("scale_to_integers: point over a different prime set");
        if (p.is_zero()) continue;
        for (std::size_t i = 0; i < need.size(); ++i)
            need[i] = std::max(need[i], BigInt(-p.exponents()[i]));
    }
    if (std::all_of(need.begin(), need.end(), [](const BigInt& e) { return e == 0; }))
        return points;
    const SInteger scale(s, 1, std::move(need), BigInt(1));
    std::vector<SInteger> out;
    out.reserve(points.size());
    for (const SInteger& p : points) out.push_back(p * scale);
    return out;
}

} // namespace sunit
