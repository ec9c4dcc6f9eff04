#pragma once

#include "concord/intmath.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace concord {

// Dense integer matrix with exact arithmetic throughout.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols);
    IntMat(std::initializer_list<std::initializer_list<long>> rows);
    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMat transposed() const;
    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    bool operator==(const IntMat& rhs) const;

    // Exact determinant by fraction-free (Bareiss) elimination; the empty
    // matrix has determinant 1.
    Int determinant() const;

    bool is_diagonal() const;
    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Solves A x = b exactly over the rationals; A must be square nonsingular.
std::vector<Rat> solve_exact(const IntMat& A, const std::vector<Rat>& b);

} // namespace concord
