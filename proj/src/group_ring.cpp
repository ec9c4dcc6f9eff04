#include "concord/group_ring.hpp"

#include "concord/errors.hpp"
#include "concord/homology.hpp"
#include "concord/matrix.hpp"

#include <numeric>
#include <sstream>

namespace concord {

DlogTable DlogTable::build(long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
        throw NotPrime("dlog table needs an odd prime, got " + std::to_string(p));
    DlogTable t;
    t.p_ = p;
    t.g_ = smallest_primitive_root(p);
    t.table_.assign(static_cast<size_t>(p - 1), -1);
    long power = 1;
    for (long alpha = 0; alpha < p - 1; ++alpha) {
        t.table_[static_cast<size_t>(power - 1)] = alpha;
        power = mod_reduce(power * t.g_, p);
    }
    return t;
}

long DlogTable::dlog(long a) const {
    long r = mod_reduce(a, p_);
    if (r == 0)
        throw ZeroScalar("dlog of 0 mod " + std::to_string(p_));
    return table_[static_cast<size_t>(r - 1)];
}

GroupRingElement::GroupRingElement(long q) {
    if (q < 1)
        throw Error("group ring needs q >= 1");
    c_.assign(static_cast<size_t>(q), Int(0));
}

GroupRingElement::GroupRingElement(long q, std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    if (q < 1 || static_cast<long>(c_.size()) != q)
        throw Error("group ring element needs exactly q coefficients");
}

GroupRingElement GroupRingElement::monomial(long q, long exponent, const Int& coeff) {
    GroupRingElement e(q);
    e.add_term(exponent, coeff);
    return e;
}

bool GroupRingElement::is_zero() const {
    for (const Int& v : c_)
        if (v != 0)
            return false;
    return true;
}

GroupRingElement& GroupRingElement::add_term(long exponent, const Int& coeff) {
    c_[static_cast<size_t>(mod_reduce(exponent, q()))] += coeff;
    return *this;
}

std::string GroupRingElement::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = 0; j < q(); ++j) {
        const Int& v = c_[static_cast<size_t>(j)];
        if (v == 0)
            continue;
        Int mag = abs(v);
        if (first) {
            if (v < 0)
                os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (mag != 1 || j == 0)
            os << mag.get_str();
        if (j == 1)
            os << "t";
        else if (j > 1)
            os << "t^" << j;
    }
    return os.str();
}

GroupRingElement relation_from_vector(const std::vector<long>& x, const DlogTable& table) {
    GroupRingElement f(table.q());
    for (long v : x) {
        long r = mod_reduce(v, table.p());
        if (r == 0)
            continue;
        f.add_term(table.dlog(r) % table.q(), Int(1));
    }
    return f;
}

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.q() != b.q())
        throw MismatchedOrder("group ring orders differ: " + std::to_string(a.q()) +
                              " vs " + std::to_string(b.q()));
    long q = a.q();
    GroupRingElement p(q);
    std::vector<Int> acc(static_cast<size_t>(q), Int(0));
    for (long i = 0; i < q; ++i) {
        const Int& av = a.coeff(i);
        if (av == 0)
            continue;
        for (long j = 0; j < q; ++j) {
            const Int& bv = b.coeff(j);
            if (bv == 0)
                continue;
            acc[static_cast<size_t>((i + j) % q)] += av * bv;
        }
    }
    return GroupRingElement(q, std::move(acc));
}

GroupRingElement scalar_action(const std::vector<long>& x, long a, const DlogTable& table) {
    long r = mod_reduce(a, table.p());
    if (r == 0)
        throw ZeroScalar("scalar action by 0 mod " + std::to_string(table.p()));
    GroupRingElement f = relation_from_vector(x, table);
    GroupRingElement shift =
        GroupRingElement::monomial(table.q(), table.dlog(r) % table.q());
    return ring_multiply(shift, f);
}

Int cyclotomic_resultant(const GroupRingElement& f) {
    long q = f.q();
    // trim to the actual degree of f as a polynomial in t
    long deg = -1;
    for (long j = q - 1; j >= 0; --j)
        if (f.coeff(j) != 0) {
            deg = j;
            break;
        }
    if (deg < 0)
        return 0; // res(0, t^q - 1) = 0
    if (deg == 0) {
        // res(c, t^q - 1) = c^q
        Int c = f.coeff(0);
        Int r = 1;
        for (long i = 0; i < q; ++i)
            r *= c;
        return r;
    }
    // Sylvester matrix of g = t^q - 1 (degree q) and f (degree deg)
    long n = q + deg;
    IntMat s(static_cast<int>(n), static_cast<int>(n));
    for (long row = 0; row < deg; ++row) {
        // coefficients of g, descending: 1, 0, ..., 0, -1
        s.at(static_cast<int>(row), static_cast<int>(row)) = 1;
        s.at(static_cast<int>(row), static_cast<int>(row + q)) = -1;
    }
    for (long row = 0; row < q; ++row)
        for (long k = 0; k <= deg; ++k)
            s.at(static_cast<int>(deg + row), static_cast<int>(row + k)) = f.coeff(deg - k);
    return s.determinant();
}

bool is_coprime_to_cyclotomic(const GroupRingElement& f) {
    return cyclotomic_resultant(f) != 0;
}

IntegerIdealCertificate integer_in_ideal(const GroupRingElement& f) {
    if (!is_coprime_to_cyclotomic(f))
        throw NotCoprimeToCyclotomic("relation shares a factor with t^q - 1: " +
                                     f.to_string());
    long q = f.q();
    int n = static_cast<int>(q);
    // multiplication-by-f matrix on Z[t]/(t^q - 1): column j holds t^j * f
    IntMat M(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            M.at(k, j) = f.coeff(mod_reduce(k - j, q));
    SmithNormalForm snf = smith_normal_form(M);

    // solve M h = m e_0 over Z with m minimal positive: in SNF coordinates
    // D z = m * (U e_0), so each d_i must divide m * u_i.
    std::vector<Int> u(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        u[static_cast<size_t>(i)] = snf.U.at(i, 0);
    Int m = 1;
    for (int i = 0; i < n; ++i) {
        const Int& d = snf.D.at(i, i);
        if (d == 0)
            throw NotCoprimeToCyclotomic("multiplication matrix is singular");
        Int g = gcd(d, u[static_cast<size_t>(i)]);
        m = lcm(m, d / g);
    }
    std::vector<Int> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = m * u[static_cast<size_t>(i)] / snf.D.at(i, i);
    // h = W z
    std::vector<Int> h(static_cast<size_t>(n), Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h[static_cast<size_t>(i)] += snf.W.at(i, j) * z[static_cast<size_t>(j)];

    IntegerIdealCertificate cert{m, GroupRingElement(q, std::move(h))};
    // closing check: the certificate really multiplies out to the constant
    GroupRingElement product = ring_multiply(cert.h, f);
    GroupRingElement expected = GroupRingElement::monomial(q, 0, cert.n);
    if (!(product == expected))
        throw Error("integer ideal certificate failed verification");
    return cert;
}

} // namespace concord
