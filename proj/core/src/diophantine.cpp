#include "sunit/diophantine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sunit {

namespace {

void validate(const UnitEquation& eq) {
    const std::size_t n = eq.coefficients.size();
    if (n != 2 && n != 3)
        throw ArityUnsupported("solve_bounded: only 2 or 3 terms supported");
    for (const BigRat& a : eq.coefficients)
        if (a == 0) throw BadParameters("solve_bounded: zero coefficient");
    if (eq.exponent_bound < 0) throw BadParameters("solve_bounded: negative exponent bound");
}

// x as an S-unit with all |exponents| <= bound, if it is one
bool unit_within(const BigRat& x, const PrimeSet& s, int bound, SInteger& out) {
    if (x == 0) return false;
    SInteger v(s);
    try {
        v = from_rational(x, s);
    } catch (const DenominatorNotSOnly&) {
        return false;
    }
    if (!is_s_unit(v)) return false;
    for (const BigInt& e : v.exponents())
        if (e > bound || e < -bound) return false;
    out = v;
    return true;
}

} // namespace

std::vector<UnitSolution> solve_bounded(const UnitEquation& eq) {
    validate(eq);
    const std::vector<SInteger> grid = s_units_by_height(eq.s, eq.exponent_bound);
    std::vector<UnitSolution> out;

    if (eq.coefficients.size() == 2) {
        const BigRat &a1 = eq.coefficients[0], &a2 = eq.coefficients[1];
        for (const SInteger& x1 : grid) {
            const BigRat y = (1 - a1 * x1.value()) / a2;
            SInteger x2(eq.s);
            if (!unit_within(y, eq.s, eq.exponent_bound, x2)) continue;
            // with two nonzero terms summing to 1, no proper sub-sum vanishes
            out.push_back({{x1, x2}, false});
        }
        return out;
    }

    const BigRat &a1 = eq.coefficients[0], &a2 = eq.coefficients[1], &a3 = eq.coefficients[2];
    for (const SInteger& x1 : grid) {
        const BigRat t1 = a1 * x1.value();
        for (const SInteger& x2 : grid) {
            const BigRat t2 = a2 * x2.value();
            const BigRat y = (1 - t1 - t2) / a3;
            SInteger x3(eq.s);
            if (!unit_within(y, eq.s, eq.exponent_bound, x3)) continue;
            const BigRat t3 = a3 * x3.value();
            const bool degenerate = (t1 + t2 == 0) || (t1 + t3 == 0) || (t2 + t3 == 0);
            out.push_back({{x1, x2, x3}, degenerate});
        }
    }
    return out;
}

bool has_exceptional_units(const PrimeSet& s) { return s.contains(BigInt(2)); }

bool check_nondegenerate(const std::vector<SInteger>& labels) {
    const std::size_t n = labels.size();
    if (n > 24) throw TooLong("check_nondegenerate: more than 24 labels");
    BigRat total = 0;
    for (const SInteger& l : labels) total += l.value();
    if (total != 0) throw LabelsDoNotSumToZero("check_nondegenerate: labels do not sum to zero");
    if (n <= 2) {
        // pairs of nonzero labels are each other's complement, so the only
        // way to degenerate at this length is a zero label
        return std::none_of(labels.begin(), labels.end(),
                            [](const SInteger& l) { return l.is_zero(); });
    }

    // Gray-code walk over proper nonempty subsets, one add/remove per step
    std::vector<BigRat> vals;
    for (const SInteger& l : labels) vals.push_back(l.value());
    BigRat sum = 0;
    std::uint64_t prev = 0;
    const std::uint64_t full = (1ull << n) - 1;
    for (std::uint64_t i = 1; i <= full; ++i) {
        const std::uint64_t gray = i ^ (i >> 1);
        const std::uint64_t flipped = gray ^ prev;
        const int bit = std::countr_zero(flipped);
        if (gray & flipped) sum += vals[static_cast<std::size_t>(bit)];
        else sum -= vals[static_cast<std::size_t>(bit)];
        prev = gray;
        if (gray != full && sum == 0) return false;
    }
    return true;
}

BigInt evaluate_bound(BoundName name, const BoundParams& p) {
    const auto need_s = [&] {
        if (p.s_size < 1) throw BadParameters("bound needs |S| >= 1");
        return static_cast<unsigned long>(p.s_size);
    };
    const auto need_k = [&] {
        if (p.k < 2) throw BadParameters("bound needs k >= 2");
        return static_cast<unsigned long>(p.k);
    };
    switch (name) {
    case BoundName::EvertseA:
        return 3 * pow_big(BigInt(7), 2 * need_s() + 3);
    case BoundName::AmorosoViadaB: {
        if (p.n < 2) throw BadParameters("bound needs n >= 2");
        const unsigned long n = static_cast<unsigned long>(p.n);
        const unsigned long s = need_s();
        const unsigned long exp = 4 * n * n * n * n * (n * s + n + 1);
        return pow_big(BigInt(8 * n), exp);
    }
    case BoundName::GyoryC:
        return 3 * pow_big(BigInt(2), 16 * (need_s() + 2));
    case BoundName::Thm36:
        return 3 * pow_big(BigInt(2), 16 * (need_s() + 1));
    case BoundName::Thm54: {
        const unsigned long k = need_k();
        const BigInt base = k * pow_big(BigInt(5), 162 * (3 * need_s() + 4));
        return pow_big(base, 4 * (k - 1));
    }
    case BoundName::Lemma53:
        return pow_big(BigInt(24), 324 * (3 * need_s() + 4));
    case BoundName::Lemma51: {
        const unsigned long k = need_k();
        const BigInt base = k * pow_big(BigInt(5), 648 * (3 * need_s() + 4));
        return pow_big(base, k - 1);
    }
    }
    throw UnknownBound("evaluate_bound: unhandled name");
}

BoundName bound_from_string(const std::string& name) {
    if (name == "EvertseA") return BoundName::EvertseA;
    if (name == "AmorosoViadaB") return BoundName::AmorosoViadaB;
    if (name == "GyoryC") return BoundName::GyoryC;
    if (name == "Thm3.6") return BoundName::Thm36;
    if (name == "Thm5.4") return BoundName::Thm54;
    if (name == "Lemma5.3") return BoundName::Lemma53;
    if (name == "Lemma5.1") return BoundName::Lemma51;
    throw UnknownBound("unknown bound name: " + name);
}

std::string bound_to_string(BoundName name) {
    switch (name) {
    case BoundName::EvertseA: return "EvertseA";
    case BoundName::AmorosoViadaB: return "AmorosoViadaB";
    case BoundName::GyoryC: return "GyoryC";
    case BoundName::Thm36: return "Thm3.6";
    case BoundName::Thm54: return "Thm5.4";
    case BoundName::Lemma53: return "Lemma5.3";
    case BoundName::Lemma51: return "Lemma5.1";
    }
    throw UnknownBound("bound_to_string: unhandled name");
}

SolutionCountReport count_solutions_vs_bound(const PrimeSet& s, int exponent_bound) {
    UnitEquation eq{{BigRat(1), BigRat(1)}, s, exponent_bound};
    const auto sols = solve_bounded(eq);
    SolutionCountReport r;
    r.count = static_cast<long>(sols.size());
    r.bound = evaluate_bound(BoundName::EvertseA, {.s_size = static_cast<int>(s.size())});
    r.within = BigInt(r.count) <= r.bound;
    return r;
}

} // namespace sunit
