#include "concord/knot_algebra.hpp"

#include "concord/errors.hpp"

namespace concord {

SeifertMatrix::SeifertMatrix(IntMat m) : m_(std::move(m)) {
    if (!m_.is_square())
        throw MalformedSeifertMatrix("Seifert matrix must be square");
    if (m_.rows() % 2 != 0)
        throw MalformedSeifertMatrix("Seifert matrix must have even size, got " +
                                     std::to_string(m_.rows()));
    if ((m_ - m_.transposed()).determinant() != 1)
        throw MalformedSeifertMatrix("det(V - V^T) must be 1");
}

IntMat SeifertMatrix::symmetrized() const {
    return m_ + m_.transposed();
}

IntPolynomial alexander_polynomial(const SeifertMatrix& V) {
    int n = V.dim();
    if (n == 0)
        return IntPolynomial::one();
    // det(V - tV^T) has degree at most n; interpolate it from n+1 exact
    // evaluations at integer points.
    const IntMat& m = V.matrix();
    IntMat mt = m.transposed();
    int points = n + 1;
    std::vector<Int> xs(points), ys(points);
    for (int k = 0; k < points; ++k) {
        Int t = k;
        IntMat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = m.at(i, j) - t * mt.at(i, j);
        xs[k] = t;
        ys[k] = a.determinant();
    }
    // Lagrange interpolation over Q; the result is integral by construction.
    std::vector<Rat> acc(points, Rat(0));
    for (int k = 0; k < points; ++k) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (int j = 0; j < points; ++j) {
            if (j == k)
                continue;
            // multiply basis by (x - xs[j])
            basis.emplace_back(0);
            for (size_t d = basis.size() - 1; d > 0; --d)
                basis[d] = basis[d - 1] - Rat(xs[j]) * basis[d];
            basis[0] = -Rat(xs[j]) * basis[0];
            denom *= Rat(xs[k]) - Rat(xs[j]);
        }
        Rat scale = Rat(ys[k]) / denom;
        scale.canonicalize();
        for (int d = 0; d < points; ++d) {
            acc[static_cast<size_t>(d)] += scale * basis[static_cast<size_t>(d)];
        }
    }
    std::vector<Int> coeffs(points);
    for (int d = 0; d < points; ++d) {
        Rat v = acc[static_cast<size_t>(d)];
        v.canonicalize();
        if (v.get_den() != 1)
            throw Error("interpolated Alexander polynomial is not integral");
        coeffs[static_cast<size_t>(d)] = v.get_num();
    }
    return IntPolynomial(std::move(coeffs));
}

Int knot_determinant(const SeifertMatrix& V) {
    Int d = V.symmetrized().determinant();
    return abs(d);
}

SeifertMatrix twisted_double_seifert(const Int& n) {
    if (n < 1)
        throw InvalidTwistParameter("twist parameter must be a positive integer, got " +
                                    n.get_str());
    IntMat m(2, 2);
    m.at(0, 0) = -1;
    m.at(0, 1) = 1;
    m.at(1, 0) = 0;
    m.at(1, 1) = n;
    return SeifertMatrix(std::move(m));
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    int n = a.dim(), m = b.dim();
    IntMat s(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s.at(i, j) = a.matrix().at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            s.at(n + i, n + j) = b.matrix().at(i, j);
    return SeifertMatrix(std::move(s));
}

} // namespace concord
