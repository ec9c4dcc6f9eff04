#include "concord/metabolizer.hpp"

#include "concord/errors.hpp"
#include "concord/intmath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace concord {

namespace {

void validate_space(const DiagonalLinkingSpace& space) {
    if (space.p < 3 || !is_prime(Int(space.p)))
        throw NotPrime("linking space needs an odd prime, got " + std::to_string(space.p));
    if (space.d < 1)
        throw Error("linking space needs at least one coordinate");
    if (mod_reduce(space.c, space.p) == 0)
        throw Error("linking unit c must be nonzero mod p");
}

// reduced row echelon form over Z_p, in place; returns pivot columns
std::vector<int> rref(std::vector<ModVector>& rows, long p) {
    std::vector<int> pivots;
    size_t r = 0;
    int d = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int col = 0; col < d && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && mod_reduce(rows[sel][static_cast<size_t>(col)], p) == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        long inv = mod_inverse(rows[r][static_cast<size_t>(col)], p);
        for (auto& v : rows[r])
            v = mod_reduce(v * inv, p);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r)
                continue;
            long f = mod_reduce(rows[i][static_cast<size_t>(col)], p);
            if (f == 0)
                continue;
            for (int j = 0; j < d; ++j)
                rows[i][static_cast<size_t>(j)] = mod_reduce(
                    rows[i][static_cast<size_t>(j)] - f * rows[r][static_cast<size_t>(j)], p);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r > 0 ? r : 0);
    return pivots;
}

std::vector<long> flatten(const std::vector<ModVector>& rows) {
    std::vector<long> key;
    for (const auto& r : rows)
        key.insert(key.end(), r.begin(), r.end());
    return key;
}

std::vector<ModVector> unflatten(const std::vector<long>& key, int d) {
    std::vector<ModVector> rows;
    for (size_t i = 0; i < key.size(); i += static_cast<size_t>(d))
        rows.emplace_back(key.begin() + static_cast<long>(i),
                          key.begin() + static_cast<long>(i) + d);
    return rows;
}

long dot_mod(const ModVector& a, const ModVector& b, long p) {
    long acc = 0;
    for (size_t i = 0; i < a.size(); ++i)
        acc = mod_reduce(acc + mod_reduce(a[i], p) * mod_reduce(b[i], p), p);
    return acc;
}

// reduce v against RREF rows; zero result means v was in the span
ModVector reduce_against(const std::vector<ModVector>& rows, const std::vector<int>& pivots,
                         ModVector v, long p) {
    for (size_t r = 0; r < rows.size(); ++r) {
        long f = mod_reduce(v[static_cast<size_t>(pivots[r])], p);
        if (f == 0)
            continue;
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = mod_reduce(v[j] - f * rows[r][j], p);
    }
    return v;
}

} // namespace

bool is_self_annihilating(const DiagonalLinkingSpace& space,
                          const std::vector<ModVector>& vectors) {
    validate_space(space);
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != space.d)
            throw Error("vector length does not match the space dimension");
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = i; j < vectors.size(); ++j) {
            long num = mod_reduce(space.c * dot_mod(vectors[i], vectors[j], space.p), space.p);
            if (num != 0)
                return false;
        }
    return true;
}

std::vector<Metabolizer> enumerate_metabolizers(const DiagonalLinkingSpace& space,
                                                const EnumerationBudget& budget) {
    validate_space(space);
    long p = space.p;
    int d = space.d;

    Int total = 1;
    for (int i = 0; i < d; ++i)
        total *= p;
    if (total > budget.max_space_size)
        throw BudgetExceeded("space size p^d = " + total.get_str() + " exceeds budget " +
                             std::to_string(budget.max_space_size));
    if (d % 2 != 0)
        return {};
    int k = d / 2;

    // breadth-first growth of isotropic subspaces, one dimension at a time,
    // keyed by flattened RREF bases so each subspace is counted once
    std::set<std::vector<long>> level;
    level.insert(std::vector<long>{});
    for (int step = 0; step < k; ++step) {
        std::set<std::vector<long>> next;
        for (const auto& key : level) {
            std::vector<ModVector> rows = unflatten(key, d);
            std::vector<int> pivots;
            {
                std::vector<ModVector> copy = rows;
                pivots = rref(copy, p);
            }
            // candidates live in the orthogonal complement of the span;
            // build a basis of that complement from the RREF constraint matrix
            std::vector<ModVector> constraint = rows; // rows are already RREF
            std::vector<int> cpivots = pivots;
            std::vector<int> free_cols;
            {
                std::vector<bool> is_pivot(static_cast<size_t>(d), false);
                for (int c : cpivots)
                    is_pivot[static_cast<size_t>(c)] = true;
                for (int c = 0; c < d; ++c)
                    if (!is_pivot[static_cast<size_t>(c)])
                        free_cols.push_back(c);
            }
            std::vector<ModVector> null_basis;
            for (int fc : free_cols) {
                ModVector v(static_cast<size_t>(d), 0);
                v[static_cast<size_t>(fc)] = 1;
                for (size_t r = 0; r < constraint.size(); ++r)
                    v[static_cast<size_t>(cpivots[r])] =
                        mod_reduce(-constraint[r][static_cast<size_t>(fc)], p);
                null_basis.push_back(std::move(v));
            }
            // walk all combinations of the complement basis
            size_t nb = null_basis.size();
            std::vector<long> odo(nb, 0);
            while (true) {
                // advance odometer
                size_t pos = 0;
                while (pos < nb && odo[pos] == p - 1) {
                    odo[pos] = 0;
                    ++pos;
                }
                if (pos == nb)
                    break;
                ++odo[pos];

                ModVector v(static_cast<size_t>(d), 0);
                for (size_t i = 0; i < nb; ++i) {
                    if (odo[i] == 0)
                        continue;
                    for (int j = 0; j < d; ++j)
                        v[static_cast<size_t>(j)] = mod_reduce(
                            v[static_cast<size_t>(j)] + odo[i] * null_basis[i][static_cast<size_t>(j)],
                            p);
                }
                if (dot_mod(v, v, p) != 0)
                    continue;
                if (!rows.empty()) {
                    ModVector rem = reduce_against(rows, pivots, v, p);
                    bool zero = std::all_of(rem.begin(), rem.end(),
                                            [p](long x) { return mod_reduce(x, p) == 0; });
                    if (zero)
                        continue; // already in the span
                }
                std::vector<ModVector> grown = rows;
                grown.push_back(v);
                rref(grown, p);
                next.insert(flatten(grown));
            }
        }
        level = std::move(next);
        if (level.empty())
            break;
    }

    std::vector<Metabolizer> out;
    for (const auto& key : level)
        out.push_back(Metabolizer{unflatten(key, d)});
    return out;
}

EchelonBasis echelon_normalize(const std::vector<ModVector>& basis, long p) {
    if (basis.empty())
        throw DependentBasis("empty basis");
    int d = static_cast<int>(basis[0].size());
    for (const auto& v : basis)
        if (static_cast<int>(v.size()) != d)
            throw Error("ragged basis");
    std::vector<ModVector> rows = basis;
    for (auto& r : rows)
        for (auto& v : r)
            v = mod_reduce(v, p);
    size_t given = rows.size();
    std::vector<int> pivots = rref(rows, p);
    if (rows.size() != given)
        throw DependentBasis("basis vectors are linearly dependent mod " + std::to_string(p));

    std::vector<int> permutation = pivots;
    std::vector<bool> is_pivot(static_cast<size_t>(d), false);
    for (int c : pivots)
        is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < d; ++c)
        if (!is_pivot[static_cast<size_t>(c)])
            permutation.push_back(c);

    std::vector<ModVector> permuted(rows.size(), ModVector(static_cast<size_t>(d), 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < d; ++j)
            permuted[i][static_cast<size_t>(j)] = rows[i][static_cast<size_t>(permutation[j])];
    return EchelonBasis{std::move(permuted), std::move(permutation)};
}

GroupRingElement sum_basis_relation(const DiagonalLinkingSpace& space,
                                    const std::vector<ModVector>& echelon_basis,
                                    const DlogTable& table) {
    validate_space(space);
    if (table.p() != space.p)
        throw PrimeMismatch("dlog table prime " + std::to_string(table.p()) +
                            " does not match space prime " + std::to_string(space.p));
    size_t k = echelon_basis.size();
    if (k == 0 || echelon_basis[0].size() != static_cast<size_t>(space.d) ||
        space.d != static_cast<int>(2 * k))
        throw NotNormalized("expected d/2 echelon rows of length d");
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            long want = i == j ? 1 : 0;
            if (mod_reduce(echelon_basis[i][j], space.p) != want)
                throw NotNormalized("echelon basis must start with an identity block");
        }
    ModVector summed(static_cast<size_t>(space.d), 0);
    for (const auto& row : echelon_basis)
        for (int j = 0; j < space.d; ++j)
            summed[static_cast<size_t>(j)] =
                mod_reduce(summed[static_cast<size_t>(j)] + row[static_cast<size_t>(j)], space.p);
    return relation_from_vector(summed, table);
}

CertifyResult certify(long p, int d, const EnumerationBudget& budget) {
    if (p < 2 || !is_prime(Int(p)))
        throw NotPrime("certify needs a prime, got " + std::to_string(p));
    if (p % 4 != 3)
        throw PrimeNotThreeMod4("certify needs p = 3 mod 4, got " + std::to_string(p));
    DiagonalLinkingSpace space{p, d, 1};
    std::vector<Metabolizer> mets = enumerate_metabolizers(space, budget);
    CertifyResult result;
    if (mets.empty()) {
        result.verdict = CertifyVerdict::NoMetabolizerPossible;
        return result;
    }
    result.verdict = CertifyVerdict::AllCertified;
    DlogTable table = DlogTable::build(p);
    for (const Metabolizer& met : mets) {
        EchelonBasis eb = echelon_normalize(met.basis, p);
        GroupRingElement f = sum_basis_relation(space, eb.basis, table);
        IntegerIdealCertificate ideal = integer_in_ideal(f);
        if (ideal.n <= 0)
            throw Error("certificate integer must be positive");

        MetabolizerCertificate cert;
        cert.p = p;
        cert.d = d;
        cert.c = space.c;
        cert.basis = eb.basis;
        cert.permutation = eb.permutation;
        cert.summed.assign(static_cast<size_t>(d), 0);
        for (const auto& row : eb.basis)
            for (int j = 0; j < d; ++j)
                cert.summed[static_cast<size_t>(j)] =
                    mod_reduce(cert.summed[static_cast<size_t>(j)] + row[static_cast<size_t>(j)], p);
        cert.relation = f;
        cert.cofactor = ideal.h;
        cert.n = ideal.n;
        result.certificates.push_back(std::move(cert));
    }
    return result;
}

} // namespace concord
