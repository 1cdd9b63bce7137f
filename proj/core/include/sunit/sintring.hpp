// Exact arithmetic in the ring Z_S of rationals whose denominators are
// divisible only by primes in a fixed finite set S, and in its unit group
// Z_S^* = { +-(prod of p^e, p in S) }.
//
// An SInteger is kept in factored form
//     sign * cofactor * prod_{p in S} p^(e_p)
// with the cofactor a positive integer coprime to every p in S. Exponents
// may be negative; the value is an integer exactly when they are all >= 0.
#pragma once

#include "sunit/bigint.hpp"
#include "sunit/errors.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace sunit {

// Immutable ascending set of primes. Copies share storage.
class PrimeSet {
public:
    PrimeSet();                                      // empty set
    explicit PrimeSet(std::vector<BigInt> primes);   // validates and sorts

    const std::vector<BigInt>& primes() const { return *primes_; }
    std::size_t size() const { return primes_->size(); }
    bool empty() const { return primes_->empty(); }
    bool contains(const BigInt& p) const;
    PrimeSet with(const std::vector<BigInt>& more) const; // union

    friend bool operator==(const PrimeSet& a, const PrimeSet& b);
    friend bool operator!=(const PrimeSet& a, const PrimeSet& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<BigInt>> primes_;
};

class SInteger {
public:
    // Zero over S.
    explicit SInteger(PrimeSet s);

    // sign in {-1,0,1}, exponents aligned with s.primes(), cofactor > 0
    // and coprime to S. Normalizes the zero case.
    SInteger(PrimeSet s, int sign, std::vector<BigInt> exponents, BigInt cofactor);

    const PrimeSet& prime_set() const { return set_; }
    int sign() const { return sign_; }
    const std::vector<BigInt>& exponents() const { return exps_; }
    const BigInt& cofactor() const { return cof_; }

    bool is_zero() const { return sign_ == 0; }
    bool is_integral() const;       // all exponents >= 0 (or zero)
    BigRat value() const;           // exact rational value
    std::string str() const;        // "n/d" or "n"

    SInteger operator-() const;
    SInteger unit_inverse() const;  // requires is_s_unit(*this)

    friend SInteger operator+(const SInteger& a, const SInteger& b);
    friend SInteger operator-(const SInteger& a, const SInteger& b);
    friend SInteger operator*(const SInteger& a, const SInteger& b);
    friend bool operator==(const SInteger& a, const SInteger& b);
    friend bool operator!=(const SInteger& a, const SInteger& b) { return !(a == b); }
    friend bool operator<(const SInteger& a, const SInteger& b);  // by value

private:
    PrimeSet set_;
    int sign_ = 0;
    std::vector<BigInt> exps_;
    BigInt cof_ = 1;
};

// Decomposes num/den over S. Throws DenominatorNotSOnly if the reduced
// denominator has a prime factor outside S.
SInteger from_rational(const BigInt& num, const BigInt& den, const PrimeSet& s);
SInteger from_rational(const BigRat& q, const PrimeSet& s);

// True when x is a unit of Z_S (nonzero, cofactor 1).
bool is_s_unit(const SInteger& x);

// Splits |n| (n a nonzero integer) as s_part * cofactor where s_part is the
// largest divisor composed of primes in S. Pure trial division by S.
std::pair<BigInt, BigInt> split_s_part(const BigInt& n, const PrimeSet& s);

struct CrtSolution {
    BigInt solution; // least non-negative
    BigInt modulus;  // product of the moduli; full set is solution + k*modulus
};

// Chinese remainder solver for x = r_i (mod m_i), m_i >= 2 pairwise coprime.
// Empty input yields {0, 1}.
CrtSolution crt_solve(const std::vector<std::pair<BigInt, BigInt>>& congruences);

// The `count` smallest primes not contained in `excluded`, ascending.
std::vector<BigInt> primes_outside(const std::vector<BigInt>& excluded, int count);

// Every S-unit with all |exponents| <= max_exponent, ordered by ascending
// absolute value, positive before negative at equal magnitude, exponent
// vectors lexicographic as the final tie-break.
std::vector<SInteger> s_units_by_height(const PrimeSet& s, int max_exponent);

} // namespace sunit
