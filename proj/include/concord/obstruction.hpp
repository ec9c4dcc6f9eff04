#pragma once

#include "concord/intmath.hpp"
#include "concord/knot_algebra.hpp"

#include <string>
#include <vector>

namespace concord {

// Outcome of the determinant scan. InfiniteOrder carries the smallest witness:
// a prime p = 3 mod 4 dividing the determinant exactly once.
struct Verdict {
    enum class Kind {
        InfiniteOrder,
        Inconclusive,
    };
    Kind kind = Kind::Inconclusive;
    Int witness;                          // set when kind == InfiniteOrder
    std::vector<PrimePower> factorization; // of the determinant scanned

    bool is_infinite_order() const { return kind == Kind::InfiniteOrder; }
    std::string to_string() const;
};

// Scans an odd determinant D for a prime p = 3 mod 4 with p || D. Such a
// witness rules out finite concordance order.
Verdict infinite_order_verdict(const Int& determinant);

// For a knot with Alexander polynomial a t^2 - (1+2a) t + a: whether the
// order-4 algebraic class is obstructed to finite concordance order, i.e.
// whether some prime p = 3 mod 4 divides 4a + 1 to an odd power. (The
// determinant scan covers the exponent-one case; this flags the wider
// odd-exponent condition on the quadratic family.)
bool quadratic_order4_check(const Int& a);

// Whether the infinite-order conclusion for K survives connected sum with any
// knot J of branched-cover order det_j coprime to the witness: true exactly
// when the witness does not divide det_j.
bool connected_sum_obstruction(const Verdict& verdict, const Int& det_j);

// Twisted double picked so its determinant is the product of the i-th prime
// pair: members are pairwise coprime and each is an order-4 candidate.
struct FamilyMember {
    int index = 0;        // 1-based
    Int p_first, p_second; // primes = 3 mod 4, p_first < p_second
    Int twist;             // n with 4n + 1 = p_first * p_second
    SeifertMatrix matrix;
};

// First `count` members built from consecutive pairs of primes = 3 mod 4:
// (3,7), (11,19), (23,31), ...
std::vector<FamilyMember> independent_family(int count);

struct FamilyMemberChecks {
    int index = 0;
    bool primes_three_mod_four = false;
    bool determinant_splits = false; // det(matrix) = p_first * p_second, each exactly once
    bool order4_candidate = false;   // quadratic criterion on the twist
};

struct FamilyReport {
    std::vector<FamilyMemberChecks> members;
    bool pairwise_coprime = false; // no prime shared between members' determinants
    bool all_ok = false;
};

// Re-derives every independence ingredient from the members' matrices. A
// family failing a check (e.g. a repeated prime) is reported, not thrown;
// throwing is reserved for malformed members whose fields contradict each
// other.
FamilyReport family_independence_certificate(const std::vector<FamilyMember>& members);

} // namespace concord
