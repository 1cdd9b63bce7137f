// Complete factorization of nonzero integers: trial division by small
// primes followed by Brent's variant of Pollard rho on what remains.
//
// The synthesis routines need every prime divisor of the differences they
// construct (those primes go into the growing prime set), so this has to
// handle numbers well past 64 bits. Desk-scale inputs factor in
// microseconds; a balanced semiprime beyond the rho budget raises
// SearchBudgetExceeded instead of spinning forever.
#pragma once

#include "sunit/bigint.hpp"

#include <map>

namespace sunit {

// Prime -> multiplicity for |n|, n != 0. factorize(1) is empty.
std::map<BigInt, int> factorize(const BigInt& n);

} // namespace sunit
