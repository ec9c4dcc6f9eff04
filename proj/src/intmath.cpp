#include "concord/intmath.hpp"

#include "concord/errors.hpp"

#include <algorithm>

namespace concord {

bool fits_long(const Int& n) {
    return n.fits_slong_p();
}

long to_long(const Int& n) {
    if (!n.fits_slong_p())
        throw Error("integer too large for machine word: " + n.get_str());
    return n.get_si();
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin below 2^64 with the standard twelve witnesses.
bool is_prime_u64(uint64_t n) {
    if (n < 2)
        return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

} // namespace

bool is_prime(const Int& n) {
    if (n <= 1)
        return false;
    if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        uint64_t v = 0;
        mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
        return is_prime_u64(v);
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<PrimePower> factorize(Int n) {
    if (n < 1)
        throw Error("factorize expects a positive integer, got " + n.get_str());
    std::vector<PrimePower> out;
    if (n == 1)
        return out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e)
            out.push_back({p, e});
    };
    strip(2);
    for (Int p = 3; p * p <= n; p += 2) {
        if (is_prime(n)) // large prime cofactor, stop trial division early
            break;
        strip(p);
    }
    if (n > 1)
        out.push_back({n, 1});
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

unsigned valuation(Int n, const Int& p) {
    if (n == 0)
        throw Error("valuation of zero is undefined");
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
    }
    return e;
}

Int pow_mod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

int legendre_symbol(const Int& a, const Int& p) {
    if (!is_prime(p) || p == 2)
        throw NotPrime("legendre_symbol needs an odd prime, got " + p.get_str());
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

long smallest_primitive_root(long p) {
    if (p < 3 || !is_prime(Int(p)))
        throw NotPrime("primitive root needs an odd prime, got " + std::to_string(p));
    std::vector<PrimePower> fac = factorize(Int(p - 1));
    for (long g = 2; g < p; ++g) {
        bool primitive = true;
        for (const PrimePower& f : fac) {
            Int e = Int(p - 1) / f.prime;
            if (pow_mod(Int(g), e, Int(p)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return g;
    }
    throw Error("no primitive root found mod " + std::to_string(p));
}

long mod_reduce(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mod_inverse(long a, long p) {
    a = mod_reduce(a, p);
    if (a == 0)
        throw Error("no inverse of 0 mod " + std::to_string(p));
    // extended Euclid over machine words; p is prime in every call site
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw Error("not invertible: " + std::to_string(a) + " mod " + std::to_string(p));
    return mod_reduce(t, p);
}

} // namespace concord
