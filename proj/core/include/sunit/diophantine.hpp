// Bounded enumeration of S-unit equation solutions, degeneracy checks, and
// evaluators for the explicit finiteness/threshold bounds the classifier
// cites. Everything is exact; the bound values routinely exceed 64 bits.
#pragma once

#include "sunit/bigint.hpp"
#include "sunit/errors.hpp"
#include "sunit/sintring.hpp"

#include <string>
#include <vector>

namespace sunit {

// a_1 x_1 + ... + a_n x_n = 1 with the x_i restricted to S-units whose
// exponent vectors lie in [-exponent_bound, exponent_bound]^|S|.
struct UnitEquation {
    std::vector<BigRat> coefficients; // nonzero, n in {2, 3}
    PrimeSet s;
    int exponent_bound = 0;
};

struct UnitSolution {
    std::vector<SInteger> values;
    // a nonempty proper subset of the terms a_i x_i sums to zero
    bool degenerate = false;
};

// Exhaustive scan over the exponent grid for the first n-1 variables; the
// last one is solved for and membership-checked. Deterministic order.
std::vector<UnitSolution> solve_bounded(const UnitEquation& eq);

// Exceptional S-units (u and 1-u both units) exist exactly when 2 is in S:
// 2 - 1 = 1 gives one; without 2, both u and 1-u would have odd numerator
// and denominator, impossible for x + y = 1.
bool has_exceptional_units(const PrimeSet& s);

// True when no nonempty proper sub-sum of the labels vanishes. The labels
// must sum to zero (cycle condition); lists of length 2 are always
// nondegenerate. Gray-code subset walk, n <= 24.
bool check_nondegenerate(const std::vector<SInteger>& labels);

enum class BoundName {
    EvertseA,        // solution count bound 3 * 7^(2|S|+3)
    AmorosoViadaB,   // (8n)^(4 n^4 (n|S| + n + 1))
    GyoryC,          // order threshold 3 * 2^(16(|S|+2))
    Thm36,           // order threshold 3 * 2^(16(|S|+1))
    Thm54,           // representation count bound (k * 5^(162(3|S|+4)))^(4(k-1))
    Lemma53,         // 24^(324(3|S|+4))
    Lemma51,         // (k * 5^(648(3|S|+4)))^(k-1)
};

struct BoundParams {
    int s_size = 0; // |S|, required >= 1
    int k = 0;      // graph order, where the formula uses one
    int n = 0;      // equation length, where the formula uses one
};

BigInt evaluate_bound(BoundName name, const BoundParams& params);
BoundName bound_from_string(const std::string& name); // throws UnknownBound
std::string bound_to_string(BoundName name);

struct SolutionCountReport {
    long count = 0;
    BigInt bound;        // EvertseA for this |S|
    bool within = false; // count <= bound
};

// Counts solve_bounded(x + y = 1) solutions and compares with EvertseA.
SolutionCountReport count_solutions_vs_bound(const PrimeSet& s, int exponent_bound);

} // namespace sunit
