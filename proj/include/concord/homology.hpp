#pragma once

#include "concord/knot_algebra.hpp"
#include "concord/matrix.hpp"

#include <string>
#include <vector>

namespace concord {

// U * A * W = D with U, W unimodular and D diagonal, nonnegative, each entry
// dividing the next (zeros, if any, at the end).
struct SmithNormalForm {
    IntMat U, D, W;
};

SmithNormalForm smith_normal_form(const IntMat& A);

// Finite abelian group in invariant-factor form: each factor >= 2 and factors
// form a divisibility chain.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<Int> factors);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return factors_.empty(); }
    Int order() const;
    std::string to_string() const; // e.g. "Z_3 + Z_21", "0" when trivial

    bool operator==(const FiniteAbelianGroup& rhs) const = default;

private:
    std::vector<Int> factors_;
};

// H_1 of the 2-fold branched cover, presented by V + V^T.
FiniteAbelianGroup branched_cover_homology(const SeifertMatrix& V);

// Linking form restricted to the p-primary part when that part is cyclic of
// order exactly p: beta(y, y) = c/p mod Z on a generator y, with c a unit mod
// p. c depends on the generator only up to multiplication by squares, so the
// square class is carried alongside.
struct PrimaryLinkingForm {
    Int p;            // odd prime
    Int c;            // 1 <= c < p, unit mod p
    int square_class; // Legendre symbol of c mod p
};

PrimaryLinkingForm primary_linking_form(const SeifertMatrix& V, const Int& p);

// Character chi_a of order p on the p-primary part, x -> a * linking(y, x).
struct Character {
    Int p;
    Int a; // 0 <= a < p
};

// Bordism invariant of (M, chi_a): the class a^2 c mod p. Vanishes only for
// the trivial character.
Int bordism_class(const PrimaryLinkingForm& form, const Character& chi);

// Signature-style invariant normalized so the generating lens space takes the
// value 2: twice the bordism class, reduced mod p.
Int sigma_p_mod_p(const Int& p, const Int& bordism);

} // namespace concord
