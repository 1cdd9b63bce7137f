#include "sunit/factor.hpp"

#include "sunit/config.hpp"
#include "sunit/errors.hpp"
#include "sunit/primes.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace sunit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> table = [] {
        std::vector<u64> ps;
        std::vector<bool> sieve(1 << 16, true);
        for (u64 i = 2; i < sieve.size(); ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (u64 j = i * i; j < sieve.size(); j += i) sieve[j] = false;
        }
        return ps;
    }();
    return table;
}

// Brent's cycle-finding variant of Pollard rho on x^2 + c mod n.
// Returns a nontrivial factor of composite odd n, or 0 on failure.
u64 rho_u64(u64 n, u64 c) {
    auto f = [&](u64 v) { return static_cast<u64>((u128(v) * v + c) % n); };
    u64 x = 2, y = 2, ys = 2, d = 1, q = 1;
    u64 r = 1;
    const u64 step = 128;
    while (d == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        for (u64 k = 0; k < r && d == 1; k += step) {
            ys = y;
            const u64 m = std::min(step, r - k);
            for (u64 i = 0; i < m; ++i) {
                y = f(y);
                q = static_cast<u64>(u128(q) * (x > y ? x - y : y - x) % n);
            }
            d = std::gcd(q, n);
        }
        r *= 2;
        if (r > (1ull << 26)) return 0;
    }
    if (d == n) {
        d = 1;
        while (d == 1) {
            ys = f(ys);
            d = std::gcd(x > ys ? x - ys : ys - x, n);
        }
    }
    return (d > 1 && d < n) ? d : 0;
}

u64 find_factor_u64(u64 n) {
    for (u64 c = 1; c < 64; ++c) {
        if (u64 d = rho_u64(n, c)) return d;
    }
    return 0;
}

// Plain Pollard rho on mpz for cofactors beyond 64 bits.
BigInt rho_big(const BigInt& n, unsigned long c, long budget) {
    BigInt x = 2, y = 2, d = 1, diff;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    for (long steps = 0; steps < budget; ++steps) {
        x = f(x);
        y = f(f(y));
        diff = x > y ? x - y : y - x;
        if (diff == 0) break;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        if (d != 1) break;
    }
    if (d > 1 && d < n) return d;
    return 0;
}

void factor_rec(const BigInt& n, std::map<BigInt, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) { ++out[n]; return; }
    if (n.fits_ulong_p()) {
        u64 d = find_factor_u64(n.get_ui());
        if (d == 0) throw SearchBudgetExceeded("factorize: rho failed on 64-bit cofactor");
        factor_rec(BigInt(static_cast<unsigned long>(d)), out);
        factor_rec(BigInt(n / static_cast<unsigned long>(d)), out);
        return;
    }
    const long budget = search_limits().factor_rho_iterations;
    for (unsigned long c = 1; c < 40; ++c) {
        BigInt d = rho_big(n, c, budget);
        if (d != 0) {
            factor_rec(d, out);
            factor_rec(BigInt(n / d), out);
            return;
        }
    }
    throw SearchBudgetExceeded("factorize: rho budget exhausted on " + n.get_str());
}

} // namespace

std::map<BigInt, int> factorize(const BigInt& n) {
    if (n == 0) throw std::domain_error("factorize: zero");
    BigInt m = abs(n);
    std::map<BigInt, int> out;
    for (u64 p : small_primes()) {
        if (m == 1) return out;
        if (BigInt(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[BigInt(static_cast<unsigned long>(p))];
            m /= static_cast<unsigned long>(p);
        }
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

} // namespace sunit
