#pragma once

#include "concord/intmath.hpp"

#include <string>
#include <vector>

namespace concord {

// Discrete logarithm table mod an odd prime p with respect to the smallest
// primitive root g: dlog(a) is the alpha in 0..p-2 with g^alpha = a.
class DlogTable {
public:
    static DlogTable build(long p);

    long p() const { return p_; }
    long g() const { return g_; }
    // half the group order, the order of the quotient the relations live in
    long q() const { return (p_ - 1) / 2; }

    long dlog(long a) const; // a nonzero mod p

private:
    DlogTable() = default;
    long p_ = 0, g_ = 0;
    std::vector<long> table_; // index a-1 -> dlog(a), a in 1..p-1
};

// Element of the integral group ring Z[Z_q] with the group written
// multiplicatively as powers of t: coeffs[j] is the coefficient of t^j.
class GroupRingElement {
public:
    explicit GroupRingElement(long q);
    GroupRingElement(long q, std::vector<Int> coeffs);
    static GroupRingElement monomial(long q, long exponent, const Int& coeff = Int(1));

    long q() const { return static_cast<long>(c_.size()); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(long j) const { return c_[static_cast<size_t>(j)]; }
    bool is_zero() const;

    GroupRingElement& add_term(long exponent, const Int& coeff);

    bool operator==(const GroupRingElement& rhs) const = default;
    std::string to_string() const; // e.g. "3 + t^2"

private:
    std::vector<Int> c_;
};

// Relation polynomial of a vector x over Z_p: each nonzero entry x_i
// contributes t^(dlog(x_i) mod q); zero entries contribute nothing.
GroupRingElement relation_from_vector(const std::vector<long>& x, const DlogTable& table);

// Product in Z[Z_q], exponents mod q. Operands must share the same q.
GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

// Relation of the scalar multiple a*x: equals t^(dlog(a) mod q) times the
// relation of x. a must be nonzero mod p.
GroupRingElement scalar_action(const std::vector<long>& x, long a, const DlogTable& table);

// Resultant of f (as a polynomial in t) with t^q - 1; zero exactly when they
// share a factor over the rationals.
Int cyclotomic_resultant(const GroupRingElement& f);

bool is_coprime_to_cyclotomic(const GroupRingElement& f);

// Certificate that the ideal (f) in Z[Z_q] meets the integers nontrivially:
// h * f = n * t^0 with n the smallest positive such integer.
struct IntegerIdealCertificate {
    Int n;
    GroupRingElement h;
};

IntegerIdealCertificate integer_in_ideal(const GroupRingElement& f);

} // namespace concord
