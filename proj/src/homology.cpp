#include "concord/homology.hpp"

#include "concord/errors.hpp"

#include <sstream>

namespace concord {

namespace {

struct SnfWorking {
    IntMat a, u, w;

    void swap_rows(int i, int j) {
        if (i == j)
            return;
        for (int k = 0; k < a.cols(); ++k)
            std::swap(a.at(i, k), a.at(j, k));
        for (int k = 0; k < u.cols(); ++k)
            std::swap(u.at(i, k), u.at(j, k));
    }
    void swap_cols(int i, int j) {
        if (i == j)
            return;
        for (int k = 0; k < a.rows(); ++k)
            std::swap(a.at(k, i), a.at(k, j));
        for (int k = 0; k < w.rows(); ++k)
            std::swap(w.at(k, i), w.at(k, j));
    }
    // row[i] -= q * row[j]
    void add_row(int i, int j, const Int& q) {
        if (q == 0)
            return;
        for (int k = 0; k < a.cols(); ++k)
            a.at(i, k) -= q * a.at(j, k);
        for (int k = 0; k < u.cols(); ++k)
            u.at(i, k) -= q * u.at(j, k);
    }
    // col[i] -= q * col[j]
    void add_col(int i, int j, const Int& q) {
        if (q == 0)
            return;
        for (int k = 0; k < a.rows(); ++k)
            a.at(k, i) -= q * a.at(k, j);
        for (int k = 0; k < w.rows(); ++k)
            w.at(k, i) -= q * w.at(k, j);
    }
    void negate_row(int i) {
        for (int k = 0; k < a.cols(); ++k)
            a.at(i, k) = -a.at(i, k);
        for (int k = 0; k < u.cols(); ++k)
            u.at(i, k) = -u.at(i, k);
    }
    // unimodular row mix: entry (r1, c) becomes gcd(a(r1,c), a(r2,c)), entry
    // (r2, c) becomes 0. One step, so entries cannot ping-pong and blow up.
    void gcd_rows(int r1, int r2, int c) {
        Int p = a.at(r1, c), q = a.at(r2, c);
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        Int pf = p / g, qf = q / g;
        mix_rows(a, r1, r2, x, y, pf, qf);
        mix_rows(u, r1, r2, x, y, pf, qf);
    }
    void gcd_cols(int c1, int c2, int r) {
        Int p = a.at(r, c1), q = a.at(r, c2);
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        Int pf = p / g, qf = q / g;
        mix_cols(a, c1, c2, x, y, pf, qf);
        mix_cols(w, c1, c2, x, y, pf, qf);
    }

private:
    // rows (r1, r2) <- (x r1 + y r2, -qf r1 + pf r2); det = x pf + y qf = 1
    static void mix_rows(IntMat& m, int r1, int r2, const Int& x, const Int& y,
                         const Int& pf, const Int& qf) {
        for (int k = 0; k < m.cols(); ++k) {
            Int v1 = x * m.at(r1, k) + y * m.at(r2, k);
            Int v2 = -qf * m.at(r1, k) + pf * m.at(r2, k);
            m.at(r1, k) = std::move(v1);
            m.at(r2, k) = std::move(v2);
        }
    }
    static void mix_cols(IntMat& m, int c1, int c2, const Int& x, const Int& y,
                         const Int& pf, const Int& qf) {
        for (int k = 0; k < m.rows(); ++k) {
            Int v1 = x * m.at(k, c1) + y * m.at(k, c2);
            Int v2 = -qf * m.at(k, c1) + pf * m.at(k, c2);
            m.at(k, c1) = std::move(v1);
            m.at(k, c2) = std::move(v2);
        }
    }
};

} // namespace

SmithNormalForm smith_normal_form(const IntMat& A) {
    int m = A.rows(), n = A.cols();
    SnfWorking s{A, IntMat::identity(m), IntMat::identity(n)};

    int t = 0;
    int steps = std::min(m, n);
    while (t < steps) {
        // locate a pivot: nonzero entry of minimal magnitude in the submatrix
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                const Int& v = s.a.at(i, j);
                if (v == 0)
                    continue;
                if (pi < 0 || abs(v) < best) {
                    pi = i;
                    pj = j;
                    best = abs(v);
                }
            }
        if (pi < 0)
            break; // submatrix is zero
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                const Int& v = s.a.at(i, t);
                if (v == 0)
                    continue;
                if (v % s.a.at(t, t) == 0)
                    s.add_row(i, t, v / s.a.at(t, t));
                else
                    s.gcd_rows(t, i, t); // pivot shrinks to the gcd
            }
            for (int j = t + 1; j < n; ++j) {
                const Int& v = s.a.at(t, j);
                if (v == 0)
                    continue;
                if (v % s.a.at(t, t) == 0) {
                    s.add_col(j, t, v / s.a.at(t, t));
                } else {
                    // mixing columns re-dirties column t below the pivot
                    s.gcd_cols(t, j, t);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide every remaining entry; if not, fold the
                // offending row in and restart with a smaller pivot
                for (int i = t + 1; i < m && clean; ++i)
                    for (int j = t + 1; j < n && clean; ++j) {
                        if (s.a.at(i, j) % s.a.at(t, t) != 0) {
                            s.add_row(t, i, Int(-1));
                            clean = false;
                        }
                    }
            }
        }
        ++t;
    }
    for (int i = 0; i < steps; ++i)
        if (s.a.at(i, i) < 0)
            s.negate_row(i);
    return SmithNormalForm{std::move(s.u), std::move(s.a), std::move(s.w)};
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw Error("invariant factors must be at least 2");
        if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
            throw Error("invariant factors must form a divisibility chain");
    }
}

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (const Int& f : factors_)
        o *= f;
    return o;
}

std::string FiniteAbelianGroup::to_string() const {
    if (factors_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i)
            os << " + ";
        os << "Z_" << factors_[i].get_str();
    }
    return os.str();
}

FiniteAbelianGroup branched_cover_homology(const SeifertMatrix& V) {
    SmithNormalForm snf = smith_normal_form(V.symmetrized());
    std::vector<Int> factors;
    for (int i = 0; i < snf.D.rows(); ++i) {
        const Int& d = snf.D.at(i, i);
        if (d == 0)
            throw Error("branched cover homology is always finite; singular form");
        if (d > 1)
            factors.push_back(d);
    }
    return FiniteAbelianGroup(std::move(factors));
}

PrimaryLinkingForm primary_linking_form(const SeifertMatrix& V, const Int& p) {
    if (p == 2 || !is_prime(p))
        throw NotPrime("linking form restriction needs an odd prime, got " + p.get_str());
    IntMat A = V.symmetrized();
    int n = A.rows();
    SmithNormalForm snf = smith_normal_form(A);

    // p-primary structure from the invariant factors
    int cyclic_count = 0;
    int index = -1;
    unsigned exponent = 0;
    for (int i = 0; i < n; ++i) {
        unsigned e = valuation(snf.D.at(i, i), p);
        if (e > 0) {
            ++cyclic_count;
            index = i;
            exponent = e;
        }
    }
    if (cyclic_count == 0)
        throw NoPrimaryPart("no p-primary part at p = " + p.get_str());
    if (cyclic_count > 1 || exponent != 1)
        throw NonCyclicPrimaryPart("p-primary part at p = " + p.get_str() +
                                   " is not cyclic of order p");

    const Int d = snf.D.at(index, index);
    // generator of the Z_d summand: U^{-1} e_index, i.e. the solution of U x = e.
    std::vector<Rat> e(n, Rat(0));
    e[static_cast<size_t>(index)] = 1;
    std::vector<Rat> xq = solve_exact(snf.U, e);
    std::vector<Int> x(n);
    for (int i = 0; i < n; ++i) {
        Rat v = xq[static_cast<size_t>(i)];
        v.canonicalize();
        if (v.get_den() != 1)
            throw Error("unimodular solve produced a non-integer");
        x[static_cast<size_t>(i)] = v.get_num();
    }
    // element of order exactly p inside that summand
    Int scale = d / p;
    std::vector<Rat> y(n);
    for (int i = 0; i < n; ++i)
        y[static_cast<size_t>(i)] = Rat(scale * x[static_cast<size_t>(i)]);

    // beta(y, y) = -(y^T A^{-1} y) mod Z = c/p
    std::vector<Rat> sol = solve_exact(A, y);
    Rat val(0);
    for (int i = 0; i < n; ++i)
        val += y[static_cast<size_t>(i)] * sol[static_cast<size_t>(i)];
    val = -val;
    val.canonicalize();
    // reduce to the fractional part with denominator p
    Rat cp = val * Rat(p);
    cp.canonicalize();
    if (cp.get_den() != 1)
        throw Error("self-linking of an order-p element must have denominator p");
    Int c = cp.get_num() % p;
    if (c < 0)
        c += p;
    if (c == 0)
        throw Error("linking form degenerate on the p-primary part");
    PrimaryLinkingForm form;
    form.p = p;
    form.c = c;
    form.square_class = legendre_symbol(c, p);
    return form;
}

Int bordism_class(const PrimaryLinkingForm& form, const Character& chi) {
    if (chi.p != form.p)
        throw PrimeMismatch("character prime " + chi.p.get_str() +
                            " does not match form prime " + form.p.get_str());
    Int a = chi.a % form.p;
    if (a < 0)
        a += form.p;
    return (a * a * form.c) % form.p;
}

Int sigma_p_mod_p(const Int& p, const Int& bordism) {
    Int v = (2 * bordism) % p;
    if (v < 0)
        v += p;
    return v;
}

} // namespace concord
