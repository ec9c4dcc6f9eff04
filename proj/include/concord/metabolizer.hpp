#pragma once

#include "concord/group_ring.hpp"

#include <vector>

namespace concord {

using ModVector = std::vector<long>;

// (Z_p)^d carrying the diagonal linking pairing <x, y> = c * (x . y) / p.
// Metabolizers are judged by the numerator c * (x . y) mod p, so c being a
// unit makes it irrelevant to which subspaces qualify; it is kept because
// certificates record the form they were computed against.
struct DiagonalLinkingSpace {
    long p = 3;  // odd prime
    int d = 0;   // number of coordinates
    long c = 1;  // unit mod p
};

// Whether every pairwise product (and so every self-product) of the given
// vectors vanishes, i.e. the span is totally isotropic.
bool is_self_annihilating(const DiagonalLinkingSpace& space,
                          const std::vector<ModVector>& vectors);

// A metabolizer: totally isotropic subspace of order p^(d/2), stored as the
// reduced row echelon basis in the original coordinates.
struct Metabolizer {
    std::vector<ModVector> basis;
};

struct EnumerationBudget {
    long max_space_size = 2'000'000; // bound on p^d
};

// Every metabolizer of the space, in a deterministic (lexicographic) order.
// Empty when none exist; in particular whenever d is not a multiple of 4.
std::vector<Metabolizer> enumerate_metabolizers(const DiagonalLinkingSpace& space,
                                                const EnumerationBudget& budget = {});

// Echelon normalization: reduced row echelon form plus the coordinate
// permutation moving the pivot columns to the front, so the returned basis
// starts with an identity block. permutation[j] is the original coordinate
// sitting at position j after the move.
struct EchelonBasis {
    std::vector<ModVector> basis;
    std::vector<int> permutation;
};

EchelonBasis echelon_normalize(const std::vector<ModVector>& basis, long p);

// Relation of the sum of an echelon-normalized basis. With d = 4k and k rows
// of the form (identity | a_i), the sum is (1,...,1, a_1,...,a_2k) and the
// relation is 2k * t^0 + sum over nonzero a_i of t^(dlog(a_i) mod q).
GroupRingElement sum_basis_relation(const DiagonalLinkingSpace& space,
                                    const std::vector<ModVector>& echelon_basis,
                                    const DlogTable& table);

// Everything needed to re-check one metabolizer's obstruction relation.
struct MetabolizerCertificate {
    long p = 0;
    int d = 0;
    long c = 1;
    std::vector<ModVector> basis; // echelon-normalized, in permuted coordinates
    std::vector<int> permutation;
    ModVector summed;
    GroupRingElement relation{1}; // f
    GroupRingElement cofactor{1}; // h with h * f = n * t^0
    Int n;
};

enum class CertifyVerdict {
    AllCertified,        // every metabolizer produced a nonzero integer certificate
    NoMetabolizerPossible // the space has no metabolizer at all
};

struct CertifyResult {
    CertifyVerdict verdict = CertifyVerdict::NoMetabolizerPossible;
    std::vector<MetabolizerCertificate> certificates;
};

// End-to-end: enumerate all metabolizers of ((Z_p)^d, <x,y> = x.y/p) and
// certify each. p must be a prime congruent to 3 mod 4.
CertifyResult certify(long p, int d, const EnumerationBudget& budget = {});

} // namespace concord
