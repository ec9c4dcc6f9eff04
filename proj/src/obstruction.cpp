#include "concord/obstruction.hpp"

#include "concord/errors.hpp"

#include <set>

namespace concord {

std::string Verdict::to_string() const {
    switch (kind) {
    case Kind::InfiniteOrder:
        return "InfiniteOrder(" + witness.get_str() + ")";
    case Kind::Inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

Verdict infinite_order_verdict(const Int& determinant) {
    Int d = abs(determinant);
    if (d == 0 || d % 2 == 0)
        throw EvenDeterminant("knot determinants are odd, got " + determinant.get_str());
    Verdict v;
    v.factorization = factorize(d);
    for (const PrimePower& f : v.factorization) {
        if (f.exponent == 1 && f.prime % 4 == 3) {
            v.kind = Verdict::Kind::InfiniteOrder;
            v.witness = f.prime;
            return v;
        }
    }
    v.kind = Verdict::Kind::Inconclusive;
    return v;
}

bool quadratic_order4_check(const Int& a) {
    if (a < 1)
        return false;
    Int disc = 4 * a + 1;
    for (const PrimePower& f : factorize(disc))
        if (f.prime % 4 == 3 && f.exponent % 2 == 1)
            return true;
    return false;
}

bool connected_sum_obstruction(const Verdict& verdict, const Int& det_j) {
    if (!verdict.is_infinite_order())
        throw NotInfiniteOrderVerdict("connected-sum extension needs an infinite-order verdict");
    if (det_j == 0 || abs(det_j) % 2 == 0)
        throw EvenDeterminant("companion determinant must be odd, got " + det_j.get_str());
    return abs(det_j) % verdict.witness != 0;
}

std::vector<FamilyMember> independent_family(int count) {
    if (count < 0)
        throw Error("family size must be nonnegative");
    std::vector<FamilyMember> members;
    members.reserve(static_cast<size_t>(count));
    Int candidate = 3;
    for (int i = 1; i <= count; ++i) {
        Int first = 0, second = 0;
        while (second == 0) {
            if (is_prime(candidate)) {
                if (first == 0)
                    first = candidate;
                else
                    second = candidate;
            }
            candidate += 4; // stay on the 3 mod 4 track
        }
        Int twist = (first * second - 1) / 4;
        FamilyMember m{i, first, second, twist, twisted_double_seifert(twist)};
        members.push_back(std::move(m));
    }
    return members;
}

FamilyReport family_independence_certificate(const std::vector<FamilyMember>& members) {
    FamilyReport report;
    std::set<Int> primes_seen;
    bool coprime = true;
    for (const FamilyMember& m : members) {
        if (m.p_first < 2 || m.p_second < 2 || !is_prime(m.p_first) || !is_prime(m.p_second))
            throw MalformedFamily("member " + std::to_string(m.index) +
                                  ": pair entries must be primes");
        if (4 * m.twist + 1 != m.p_first * m.p_second)
            throw MalformedFamily("member " + std::to_string(m.index) +
                                  ": twist does not match the prime pair");
        if (!(m.matrix == twisted_double_seifert(m.twist)))
            throw MalformedFamily("member " + std::to_string(m.index) +
                                  ": matrix is not the stated twisted double");

        Int det = knot_determinant(m.matrix);
        FamilyMemberChecks checks;
        checks.index = m.index;
        checks.primes_three_mod_four = m.p_first % 4 == 3 && m.p_second % 4 == 3;
        checks.determinant_splits = det == m.p_first * m.p_second && m.p_first != m.p_second &&
                                    valuation(det, m.p_first) == 1 &&
                                    valuation(det, m.p_second) == 1;
        checks.order4_candidate = quadratic_order4_check(m.twist);
        report.members.push_back(checks);

        for (const Int& p : {m.p_first, m.p_second})
            if (!primes_seen.insert(p).second)
                coprime = false;
    }
    report.pairwise_coprime = coprime;
    report.all_ok = coprime;
    for (const FamilyMemberChecks& c : report.members)
        report.all_ok = report.all_ok && c.primes_three_mod_four && c.determinant_splits &&
                        c.order4_candidate;
    return report;
}

} // namespace concord
