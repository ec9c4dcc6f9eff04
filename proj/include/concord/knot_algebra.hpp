#pragma once

#include "concord/matrix.hpp"
#include "concord/polynomial.hpp"

#include <string>

namespace concord {

// Integer square matrix V of even size with det(V - V^T) = 1. Immutable after
// construction; the constructor enforces the invariants.
class SeifertMatrix {
public:
    explicit SeifertMatrix(IntMat m);
    static SeifertMatrix unknot() { return SeifertMatrix(IntMat(0, 0)); }

    const IntMat& matrix() const { return m_; }
    int dim() const { return m_.rows(); }
    int genus() const { return m_.rows() / 2; }

    // symmetrized form V + V^T presenting the homology of the double branched cover
    IntMat symmetrized() const;

    bool operator==(const SeifertMatrix& rhs) const { return m_ == rhs.m_; }

private:
    IntMat m_;
};

// det(V - tV^T), normalized (lowest degree 0, positive leading coefficient).
IntPolynomial alexander_polynomial(const SeifertMatrix& V);

// |det(V + V^T)|; always odd, equals |Delta(-1)|.
Int knot_determinant(const SeifertMatrix& V);

// Seifert matrix [[-1, 1], [0, n]] of the n-twisted double of the unknot,
// with Alexander polynomial n t^2 - (1+2n) t + n and determinant 4n + 1.
SeifertMatrix twisted_double_seifert(const Int& n);

// Block sum, representing the connected sum of the underlying knots.
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// One row of a knot table: named knot with its classical invariants.
struct KnotRecord {
    std::string name;
    int crossings = 0;
    IntPolynomial alexander;
    Int determinant;
};

} // namespace concord
