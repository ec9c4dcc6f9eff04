#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace concord {

using Int = mpz_class;
using Rat = mpq_class;

struct PrimePower {
    Int prime;
    unsigned exponent = 0;
};

bool fits_long(const Int& n);
long to_long(const Int& n);

// Deterministic for |n| < 2^64 (fixed Miller-Rabin witness set), GMP's
// probabilistic test beyond that. Negative numbers, 0 and 1 are not prime.
bool is_prime(const Int& n);

// Prime factorization of n >= 1, sorted by prime. factorize(1) is empty.
std::vector<PrimePower> factorize(Int n);

// Exponent of p in n (n != 0).
unsigned valuation(Int n, const Int& p);

Int pow_mod(const Int& base, const Int& exp, const Int& mod);

// (a/p) for odd prime p: +1 for nonzero squares, -1 for nonsquares, 0 if p | a.
int legendre_symbol(const Int& a, const Int& p);

// Smallest positive primitive root mod an odd prime p.
long smallest_primitive_root(long p);

// Representative of a mod m in [0, m).
long mod_reduce(long a, long m);

// Inverse of a mod p for prime p, a not divisible by p.
long mod_inverse(long a, long p);

} // namespace concord
