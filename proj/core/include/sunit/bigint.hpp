// Arbitrary precision integer/rational aliases and a few helpers on top of GMP.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sunit {

using BigInt = mpz_class;
using BigRat = mpq_class;

// p^e for e >= 0. Throws if e does not fit an unsigned long (values that
// large cannot be materialized anyway).
inline BigInt pow_big(const BigInt& base, const BigInt& exp) {
    if (exp < 0) throw std::domain_error("pow_big: negative exponent");
    if (!exp.fits_ulong_p()) throw std::overflow_error("pow_big: exponent too large to materialize");
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return r;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// Writes a rational as "n/d", or just "n" when the denominator is 1.
inline std::string rat_to_string(const BigRat& q) {
    BigRat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace sunit
