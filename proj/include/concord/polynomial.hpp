#pragma once

#include "concord/intmath.hpp"

#include <string>
#include <vector>

namespace concord {

// Integer polynomial kept in the normal form used for Alexander polynomials:
// lowest retained degree is 0 and the leading coefficient is positive, i.e.
// the representative of the class up to multiplication by ±t^k. The zero
// polynomial is the empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> ascending);
    static IntPolynomial one() { return IntPolynomial({Int(1)}); }
    static IntPolynomial from_longs(const std::vector<long>& ascending);

    // coefficient of t^i at index i; empty means zero
    const std::vector<Int>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Int evaluate(const Int& t) const;
    bool palindromic_up_to_sign() const;

    IntPolynomial operator*(const IntPolynomial& rhs) const;
    bool operator==(const IntPolynomial& rhs) const = default;

    // human-readable descending form, e.g. "5t^2 - 11t + 5"
    std::string to_string() const;

private:
    std::vector<Int> c_;
};

} // namespace concord
