#include "concord/matrix.hpp"

#include "concord/errors.hpp"

#include <sstream>

namespace concord {

IntMat::IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw Error("matrix dimensions must be nonnegative");
    a_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& r : rows)
        cols_ = std::max(cols_, static_cast<int>(r.size()));
    a_.assign(static_cast<size_t>(rows_) * cols_, Int(0));
    int i = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw Error("ragged initializer for matrix");
        int j = 0;
        for (long v : r)
            at(i, j++) = v;
        ++i;
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error("matrix product shape mismatch");
    IntMat p(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                p.at(i, j) += v * rhs.at(k, j);
        }
    return p;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("matrix sum shape mismatch");
    IntMat s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        s.a_[i] = a_[i] + rhs.a_[i];
    return s;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("matrix difference shape mismatch");
    IntMat s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        s.a_[i] = a_[i] - rhs.a_[i];
    return s;
}

bool IntMat::operator==(const IntMat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

Int IntMat::determinant() const {
    if (!is_square())
        throw Error("determinant of a non-square matrix");
    int n = rows_;
    if (n == 0)
        return 1;
    IntMat m = *this;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Bareiss: division by the previous pivot is exact
                m.at(i, j) = num / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

bool IntMat::is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0)
                return false;
    return true;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j)
                os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Rat> solve_exact(const IntMat& A, const std::vector<Rat>& b) {
    if (!A.is_square())
        throw Error("solve_exact needs a square matrix");
    int n = A.rows();
    if (static_cast<int>(b.size()) != n)
        throw Error("solve_exact shape mismatch");
    // augmented Gaussian elimination over Q
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = Rat(A.at(i, j));
        m[i][n] = b[i];
    }
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw Error("solve_exact: singular matrix");
        std::swap(m[k], m[pivot]);
        Rat inv = m[k][k];
        for (int j = k; j <= n; ++j)
            m[k][j] /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0)
                continue;
            Rat f = m[i][k];
            for (int j = k; j <= n; ++j)
                m[i][j] -= f * m[k][j];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = m[i][n];
        x[i].canonicalize();
    }
    return x;
}

} // namespace concord
