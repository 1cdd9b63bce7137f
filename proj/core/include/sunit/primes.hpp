// Primality testing. Deterministic Miller-Rabin below 2^64; for larger
// candidates (which only appear as factors of constructed differences)
// GMP's Baillie-PSW based test is used.
#pragma once

#include "sunit/bigint.hpp"

#include <cstdint>

namespace sunit {

// Deterministic for all n < 2^64 (fixed witness set 2..37).
bool is_prime_u64(std::uint64_t n);

bool is_prime(const BigInt& n);

// Smallest prime strictly greater than n.
BigInt next_prime_above(const BigInt& n);

} // namespace sunit
