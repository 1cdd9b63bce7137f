// Search budget knobs for the construct-and-verify operations.
//
// All searches in the library are deterministic scans; the budget only
// decides when to give up with SearchBudgetExceeded. The environment
// variable SUNIT_SEARCH_BUDGET (a positive integer, default 16) scales
// every knob at once.
#pragma once

#include <cstdlib>

namespace sunit {

struct SearchLimits {
    int  unit_exponent_bound;   // max |exponent| when scanning S-units
    long glue_shift_limit;      // number of shifts tried when separating components
    int  rescale_profile_limit; // label profiles tried per rescale variant
    long factor_rho_iterations; // Pollard rho budget per cofactor
};

inline int search_budget() {
    static const int budget = [] {
        if (const char* env = std::getenv("SUNIT_SEARCH_BUDGET")) {
            const long v = std::atol(env);
            if (v > 0 && v < 1 << 20) return static_cast<int>(v);
        }
        return 16;
    }();
    return budget;
}

inline SearchLimits search_limits() {
    const int b = search_budget();
    return SearchLimits{
        .unit_exponent_bound   = b,
        .glue_shift_limit      = 4096L * b,
        .rescale_profile_limit = 4 * b,
        .factor_rho_iterations = 1L << 26,
    };
}

} // namespace sunit
