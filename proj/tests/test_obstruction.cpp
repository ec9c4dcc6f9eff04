#include <doctest.h>

#include "concord/errors.hpp"
#include "concord/knot_algebra.hpp"
#include "concord/obstruction.hpp"

#include <vector>

using namespace concord;

namespace {

Int reassemble(const std::vector<PrimePower>& factors) {
    Int n = 1;
    for (const PrimePower& f : factors)
        for (unsigned e = 0; e < f.exponent; ++e)
            n *= f.prime;
    return n;
}

} // namespace

TEST_CASE("determinant scan verdicts") {
    Verdict v21 = infinite_order_verdict(Int(21));
    CHECK(v21.is_infinite_order());
    CHECK(v21.witness == 3);
    CHECK(v21.to_string() == "InfiniteOrder(3)");
    REQUIRE(v21.factorization.size() == 2);
    CHECK(v21.factorization[0].prime == 3);
    CHECK(v21.factorization[0].exponent == 1);
    CHECK(v21.factorization[1].prime == 7);
    CHECK(v21.factorization[1].exponent == 1);

    CHECK(infinite_order_verdict(Int(83)).witness == 83);
    CHECK(infinite_order_verdict(Int(105)).witness == 3);  // 3 * 5 * 7
    CHECK(infinite_order_verdict(Int(75)).witness == 3);   // 3 * 5^2
    CHECK(infinite_order_verdict(Int(63)).witness == 7);   // 3^2 * 7, square 3 skipped
    CHECK(infinite_order_verdict(Int(-21)).witness == 3);

    CHECK_FALSE(infinite_order_verdict(Int(9)).is_infinite_order());
    CHECK_FALSE(infinite_order_verdict(Int(5)).is_infinite_order());
    CHECK_FALSE(infinite_order_verdict(Int(45)).is_infinite_order()); // 3^2 * 5
    CHECK_FALSE(infinite_order_verdict(Int(25)).is_infinite_order());
    CHECK(infinite_order_verdict(Int(9)).to_string() == "Inconclusive");

    Verdict trivial = infinite_order_verdict(Int(1));
    CHECK_FALSE(trivial.is_infinite_order());
    CHECK(trivial.factorization.empty());

    CHECK_THROWS_AS(infinite_order_verdict(Int(0)), EvenDeterminant);
    CHECK_THROWS_AS(infinite_order_verdict(Int(84)), EvenDeterminant);

    for (long d : {21L, 83L, 105L, 75L, 63L, 9L, 45L, 25L, 1L})
        CHECK(reassemble(infinite_order_verdict(Int(d)).factorization) == d);
}

TEST_CASE("order-4 obstruction on the quadratic family") {
    CHECK(quadratic_order4_check(Int(5)));   // 21 = 3 * 7
    CHECK(quadratic_order4_check(Int(8)));   // 33 = 3 * 11
    CHECK(quadratic_order4_check(Int(47)));  // 189 = 3^3 * 7, cube counts
    CHECK(quadratic_order4_check(Int(52)));  // 209 = 11 * 19

    CHECK_FALSE(quadratic_order4_check(Int(1)));  // 5
    CHECK_FALSE(quadratic_order4_check(Int(2)));  // 9 = 3^2
    CHECK_FALSE(quadratic_order4_check(Int(6)));  // 25
    CHECK_FALSE(quadratic_order4_check(Int(7)));  // 29
    CHECK_FALSE(quadratic_order4_check(Int(12))); // 49 = 7^2
    CHECK_FALSE(quadratic_order4_check(Int(13))); // 53
    CHECK_FALSE(quadratic_order4_check(Int(56))); // 225 = 3^2 * 5^2
    CHECK_FALSE(quadratic_order4_check(Int(0)));
    CHECK_FALSE(quadratic_order4_check(Int(-1)));
}

TEST_CASE("connected-sum survival") {
    Verdict v = infinite_order_verdict(Int(21));
    CHECK(connected_sum_obstruction(v, Int(25)));
    CHECK(connected_sum_obstruction(v, Int(1)));
    CHECK(connected_sum_obstruction(v, Int(-5)));
    CHECK_FALSE(connected_sum_obstruction(v, Int(9)));
    CHECK_FALSE(connected_sum_obstruction(v, Int(15)));
    CHECK_THROWS_AS(connected_sum_obstruction(v, Int(84)), EvenDeterminant);
    CHECK_THROWS_AS(connected_sum_obstruction(v, Int(0)), EvenDeterminant);
    Verdict inc = infinite_order_verdict(Int(9));
    CHECK_THROWS_AS(connected_sum_obstruction(inc, Int(25)), NotInfiniteOrderVerdict);
}

TEST_CASE("family construction") {
    CHECK(independent_family(0).empty());
    CHECK_THROWS_AS(independent_family(-1), Error);

    std::vector<FamilyMember> fam = independent_family(10);
    REQUIRE(fam.size() == 10);
    long first[] = {3, 11, 23, 43, 59, 71, 83, 107, 131, 151};
    long second[] = {7, 19, 31, 47, 67, 79, 103, 127, 139, 163};
    long twist[] = {5, 52, 178, 505, 988, 1402, 2137, 3397, 4552, 6153};
    for (int i = 0; i < 10; ++i) {
        const FamilyMember& m = fam[static_cast<size_t>(i)];
        CHECK(m.index == i + 1);
        CHECK(m.p_first == first[i]);
        CHECK(m.p_second == second[i]);
        CHECK(m.twist == twist[i]);
        CHECK(4 * m.twist + 1 == m.p_first * m.p_second);
        CHECK((m.matrix == twisted_double_seifert(m.twist)));
        CHECK(knot_determinant(m.matrix) == m.p_first * m.p_second);
    }
}

TEST_CASE("family independence report") {
    std::vector<FamilyMember> fam = independent_family(10);
    FamilyReport report = family_independence_certificate(fam);
    REQUIRE(report.members.size() == 10);
    for (const FamilyMemberChecks& c : report.members) {
        CHECK(c.primes_three_mod_four);
        CHECK(c.determinant_splits);
        CHECK(c.order4_candidate);
    }
    CHECK(report.pairwise_coprime);
    CHECK(report.all_ok);

    FamilyReport empty = family_independence_certificate({});
    CHECK(empty.members.empty());
    CHECK(empty.all_ok);
}

TEST_CASE("malformed family members are rejected") {
    std::vector<FamilyMember> fam = independent_family(2);

    std::vector<FamilyMember> bad_prime = fam;
    bad_prime[0].p_first = 9;
    CHECK_THROWS_AS(family_independence_certificate(bad_prime), MalformedFamily);

    std::vector<FamilyMember> bad_twist = fam;
    bad_twist[1].twist += 1;
    CHECK_THROWS_AS(family_independence_certificate(bad_twist), MalformedFamily);

    std::vector<FamilyMember> bad_matrix = fam;
    bad_matrix[0].matrix = twisted_double_seifert(Int(6));
    CHECK_THROWS_AS(family_independence_certificate(bad_matrix), MalformedFamily);
}

TEST_CASE("failing checks are reported, not thrown") {
    // a repeated prime across members breaks coprimality only
    std::vector<FamilyMember> fam = independent_family(1);
    std::vector<FamilyMember> doubled{fam[0], fam[0]};
    doubled[1].index = 2;
    FamilyReport rep = family_independence_certificate(doubled);
    CHECK_FALSE(rep.pairwise_coprime);
    CHECK_FALSE(rep.all_ok);
    for (const FamilyMemberChecks& c : rep.members) {
        CHECK(c.primes_three_mod_four);
        CHECK(c.determinant_splits);
        CHECK(c.order4_candidate);
    }

    // primes = 1 mod 4 give a well-formed but non-qualifying member
    FamilyMember off{1, Int(5), Int(13), Int(16), twisted_double_seifert(Int(16))};
    FamilyReport rep2 = family_independence_certificate({off});
    REQUIRE(rep2.members.size() == 1);
    CHECK_FALSE(rep2.members[0].primes_three_mod_four);
    CHECK(rep2.members[0].determinant_splits);
    CHECK_FALSE(rep2.members[0].order4_candidate);
    CHECK(rep2.pairwise_coprime);
    CHECK_FALSE(rep2.all_ok);

    // a square determinant fails the splitting check
    FamilyMember sq{1, Int(3), Int(3), Int(2), twisted_double_seifert(Int(2))};
    FamilyReport rep3 = family_independence_certificate({sq});
    CHECK(rep3.members[0].primes_three_mod_four);
    CHECK_FALSE(rep3.members[0].determinant_splits);
    CHECK_FALSE(rep3.members[0].order4_candidate);
    CHECK_FALSE(rep3.all_ok);
}
