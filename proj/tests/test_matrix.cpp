#include <doctest.h>

#include "concord/errors.hpp"
#include "concord/matrix.hpp"

#include <random>

using namespace concord;

namespace {

// independent determinant oracle: cofactor expansion along the first row
Int cofactor_det(const IntMat& m) {
    int n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0)
            continue;
        IntMat minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

IntMat random_matrix(std::mt19937_64& rng, int n, long lo, long hi) {
    IntMat m(n, n);
    std::uniform_int_distribution<long> dist(lo, hi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = dist(rng);
    return m;
}

} // namespace

TEST_CASE("construction and accessors") {
    IntMat m{{1, 2}, {3, 4}};
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.at(1, 0) == 3);
    CHECK(m.is_square());
    CHECK(IntMat::identity(3).is_diagonal());
    CHECK_THROWS_AS(IntMat({{1, 2}, {3}}), Error);
}

TEST_CASE("arithmetic") {
    IntMat a{{1, 2}, {3, 4}};
    IntMat b{{0, 1}, {1, 0}};
    CHECK((a * b == IntMat{{2, 1}, {4, 3}}));
    CHECK((a + b == IntMat{{1, 3}, {4, 4}}));
    CHECK((a - b == IntMat{{1, 1}, {2, 4}}));
    CHECK((a.transposed() == IntMat{{1, 3}, {2, 4}}));
    CHECK_THROWS_AS(a * IntMat(3, 3), Error);
    CHECK_THROWS_AS(a + IntMat(3, 3), Error);
}

TEST_CASE("determinant examples") {
    CHECK(IntMat(0, 0).determinant() == 1);
    CHECK(IntMat{{5}}.determinant() == 5);
    CHECK((IntMat{{1, 2}, {3, 4}}.determinant() == -2));
    CHECK((IntMat{{0, 1}, {1, 0}}.determinant() == -1));
    CHECK((IntMat{{2, 0}, {0, 3}}.determinant() == 6));
    CHECK((IntMat{{1, 2}, {2, 4}}.determinant() == 0));
    // needs a row swap partway through
    CHECK((IntMat{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}.determinant() == -1));
    CHECK_THROWS_AS(IntMat(2, 3).determinant(), Error);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        IntMat m = random_matrix(rng, n, -9, 9);
        CHECK(m.determinant() == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMat a = random_matrix(rng, n, -6, 6);
        IntMat b = random_matrix(rng, n, -6, 6);
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
    }
}

TEST_CASE("solve_exact") {
    IntMat a{{2, 1}, {1, 3}};
    std::vector<Rat> b{Rat(5), Rat(10)};
    std::vector<Rat> x = solve_exact(a, b);
    CHECK(x[0] == Rat(1));
    CHECK(x[1] == Rat(3));

    IntMat f{{2, 0}, {0, 4}};
    std::vector<Rat> g{Rat(1), Rat(1)};
    std::vector<Rat> y = solve_exact(f, g);
    CHECK(y[0] == Rat(1, 2));
    CHECK(y[1] == Rat(1, 4));

    CHECK_THROWS_AS(solve_exact(IntMat{{1, 2}, {2, 4}}, b), Error);
    CHECK_THROWS_AS(solve_exact(IntMat(2, 3), b), Error);
}

TEST_CASE("solve_exact reproduces the right-hand side on random systems") {
    std::mt19937_64 rng(31337);
    int done = 0;
    while (done < 100) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMat a = random_matrix(rng, n, -8, 8);
        if (a.determinant() == 0)
            continue;
        std::vector<Rat> b(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            b[static_cast<size_t>(i)] = Rat(static_cast<long>(rng() % 21) - 10);
        std::vector<Rat> x = solve_exact(a, b);
        for (int i = 0; i < n; ++i) {
            Rat acc(0);
            for (int j = 0; j < n; ++j)
                acc += Rat(a.at(i, j)) * x[static_cast<size_t>(j)];
            acc.canonicalize();
            CHECK(acc == b[static_cast<size_t>(i)]);
        }
        ++done;
    }
}
