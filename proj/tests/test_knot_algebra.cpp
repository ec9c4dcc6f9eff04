#include <doctest.h>

#include "concord/errors.hpp"
#include "concord/knot_algebra.hpp"

#include <random>

using namespace concord;

namespace {

// random genuine Seifert matrix: pick the lower triangle freely and force
// V - V^T to be the standard symplectic-looking unimodular J
SeifertMatrix random_seifert(std::mt19937_64& rng, int genus, long lo, long hi) {
    int n = 2 * genus;
    IntMat j(n, n);
    for (int b = 0; b < genus; ++b) {
        j.at(2 * b, 2 * b + 1) = 1;
        j.at(2 * b + 1, 2 * b) = -1;
    }
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMat v(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c)
            v.at(r, c) = dist(rng);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            v.at(r, c) = v.at(c, r) + j.at(r, c);
    return SeifertMatrix(std::move(v));
}

// oracle for det(V - tV^T): expand symbolically by recursive cofactors over
// polynomial entries, no interpolation involved
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<Int> p(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            p[i + j] += a[i] * b[j];
    return p;
}

std::vector<Int> poly_add(std::vector<Int> a, const std::vector<Int>& b, bool negate) {
    if (a.size() < b.size())
        a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i)
        a[i] += negate ? -b[i] : b[i];
    return a;
}

using PolyMat = std::vector<std::vector<std::vector<Int>>>;

std::vector<Int> poly_det(const PolyMat& m) {
    size_t n = m.size();
    if (n == 0)
        return {Int(1)};
    if (n == 1)
        return m[0][0];
    std::vector<Int> acc;
    for (size_t j = 0; j < n; ++j) {
        PolyMat minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<std::vector<Int>> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        acc = poly_add(std::move(acc), poly_mul(m[0][j], poly_det(minor)), j % 2 == 1);
    }
    return acc;
}

IntPolynomial alexander_oracle(const SeifertMatrix& V) {
    int n = V.dim();
    PolyMat m(static_cast<size_t>(n),
              std::vector<std::vector<Int>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = {
                V.matrix().at(i, j), -V.matrix().at(j, i)};
    return IntPolynomial(poly_det(m));
}

} // namespace

TEST_CASE("seifert matrix invariants") {
    CHECK(SeifertMatrix::unknot().dim() == 0);
    CHECK(SeifertMatrix::unknot().genus() == 0);
    SeifertMatrix tref{IntMat{{-1, 1}, {0, -1}}};
    CHECK(tref.genus() == 1);
    CHECK((tref.symmetrized() == IntMat{{-2, 1}, {1, -2}}));

    CHECK_THROWS_AS(SeifertMatrix(IntMat(2, 3)), MalformedSeifertMatrix);
    CHECK_THROWS_AS(SeifertMatrix(IntMat{{1}}), MalformedSeifertMatrix);
    CHECK_THROWS_AS(SeifertMatrix(IntMat{{1, 0}, {0, 1}}), MalformedSeifertMatrix);
    CHECK_THROWS_AS(SeifertMatrix(IntMat{{-1, 2}, {0, 5}}), MalformedSeifertMatrix);
}

TEST_CASE("alexander polynomial examples") {
    CHECK(alexander_polynomial(SeifertMatrix::unknot()) == IntPolynomial::one());
    CHECK(alexander_polynomial(SeifertMatrix{IntMat{{-1, 1}, {0, -1}}}) ==
          IntPolynomial::from_longs({1, -1, 1}));
    CHECK(alexander_polynomial(SeifertMatrix{IntMat{{-1, 1}, {0, 5}}}) ==
          IntPolynomial::from_longs({5, -11, 5}));
    // figure-eight: det(V - tV^T) gives t^2 - 3t + 1
    CHECK(alexander_polynomial(SeifertMatrix{IntMat{{1, 1}, {0, -1}}}) ==
          IntPolynomial::from_longs({1, -3, 1}));
}

TEST_CASE("alexander polynomial matches the symbolic oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        int genus = 1 + static_cast<int>(rng() % 3);
        SeifertMatrix V = random_seifert(rng, genus, -4, 4);
        CHECK(alexander_polynomial(V) == alexander_oracle(V));
    }
}

TEST_CASE("alexander polynomial structural properties") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 150; ++trial) {
        int genus = 1 + static_cast<int>(rng() % 3);
        SeifertMatrix V = random_seifert(rng, genus, -5, 5);
        IntPolynomial alex = alexander_polynomial(V);
        Int at_one = alex.evaluate(1);
        CHECK((at_one == 1 || at_one == -1));
        CHECK(alex.palindromic_up_to_sign());
        CHECK(abs(alex.evaluate(-1)) == knot_determinant(V));
    }
}

TEST_CASE("knot determinant") {
    CHECK(knot_determinant(SeifertMatrix::unknot()) == 1);
    CHECK(knot_determinant(SeifertMatrix{IntMat{{-1, 1}, {0, -1}}}) == 3);
    CHECK(knot_determinant(SeifertMatrix{IntMat{{-1, 1}, {0, 5}}}) == 21);
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        SeifertMatrix V = random_seifert(rng, 1 + static_cast<int>(rng() % 3), -5, 5);
        CHECK(knot_determinant(V) % 2 == 1);
    }
}

TEST_CASE("twisted doubles") {
    SeifertMatrix d5 = twisted_double_seifert(5);
    CHECK((d5.matrix() == IntMat{{-1, 1}, {0, 5}}));
    for (long n : {1L, 2L, 5L, 52L, 178L}) {
        SeifertMatrix d = twisted_double_seifert(n);
        CHECK(knot_determinant(d) == 4 * n + 1);
        CHECK(alexander_polynomial(d) ==
              IntPolynomial({Int(n), -(2 * Int(n) + 1), Int(n)}));
    }
    CHECK_THROWS_AS(twisted_double_seifert(0), InvalidTwistParameter);
    CHECK_THROWS_AS(twisted_double_seifert(-3), InvalidTwistParameter);
}

TEST_CASE("connected sum multiplies alexander polynomials and determinants") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        SeifertMatrix a = random_seifert(rng, 1 + static_cast<int>(rng() % 2), -4, 4);
        SeifertMatrix b = random_seifert(rng, 1 + static_cast<int>(rng() % 2), -4, 4);
        SeifertMatrix s = connected_sum(a, b);
        CHECK(s.dim() == a.dim() + b.dim());
        CHECK(alexander_polynomial(s) == alexander_polynomial(a) * alexander_polynomial(b));
        CHECK(knot_determinant(s) == knot_determinant(a) * knot_determinant(b));
    }
    SeifertMatrix t = twisted_double_seifert(1);
    CHECK((connected_sum(SeifertMatrix::unknot(), t) == t));
}
