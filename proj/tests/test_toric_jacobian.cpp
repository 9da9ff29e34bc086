#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toriclab/toric_jacobian.hpp"

using namespace toric;

namespace {

IntVec vec(std::vector<long long> xs) {
    IntVec v;
    for (long long x : xs) v.push_back(x);
    return v;
}

NumericalSemigroup campillo_semigroup(long long p) {
    return NumericalSemigroup({Int(p * p * p), Int(p * p * p + p * p),
                               Int(p * p * p * p + p * p * p + p * p + p),
                               Int(p * p * p * p * p + p * p * p * p + p * p * p + p * p + p + 1)});
}

MPoly mono(const CoefficientField& f, std::vector<std::int64_t> e, long long c) {
    return MPoly::monomial(f, e, Rat(c));
}

} // namespace

TEST_CASE("jacobian of the undeformed chain system is monomial-diagonal") {
    for (long long p : {2, 5}) {
        CoefficientField f = CoefficientField::prime_field(p);
        BinomialSystem sys = plane_branch_chain_system(campillo_semigroup(p), f, false);
        SymbolicJacobian j = jacobian(sys);
        REQUIRE(j.entries.size() == 3);
        CHECK(j.entries[0][0] == mono(f, {p, 0, 0, 0}, -1));  // -(p+1) x^p = -x^p mod p
        CHECK(j.entries[0][1].is_zero());                     // p y^{p-1} = 0
        CHECK(j.entries[0][2].is_zero());
        CHECK(j.entries[0][3].is_zero());
        CHECK(j.entries[1][0].is_zero());                     // -p(p+1) x^{...} y = 0
        CHECK(j.entries[1][1] == mono(f, {p * (p + 1), 0, 0, 0}, -1));
        CHECK(j.entries[1][2].is_zero());
        CHECK(j.entries[2][2] == mono(f, {p * p * (p + 1), 0, 0, 0}, -1));
        CHECK(j.entries[2][3].is_zero());
    }
}

TEST_CASE("jacobian of the deformed chain system gains two -1 entries") {
    for (long long p : {2, 3}) {
        CoefficientField f = CoefficientField::prime_field(p);
        SymbolicJacobian j =
            jacobian(plane_branch_chain_system(campillo_semigroup(p), f, true));
        CHECK(j.entries[0][2] == mono(f, {0, 0, 0, 0}, -1));
        CHECK(j.entries[1][3] == mono(f, {0, 0, 0, 0}, -1));
        CHECK(j.entries[2][0].is_zero());
        CHECK(j.entries[2][2] == mono(f, {p * p * (p + 1), 0, 0, 0}, -1));
    }
}

TEST_CASE("jacobian of x - y over F_2 is the row (1, 1)") {
    CoefficientField f = CoefficientField::prime_field(2);
    BinomialSystem sys({"x", "y"}, vec({1, 1}), f, {Binomial(vec({1, 0}), vec({0, 1}))});
    SymbolicJacobian j = jacobian(sys);
    CHECK(j.entries[0][0] == mono(f, {0, 0}, 1));
    CHECK(j.entries[0][1] == mono(f, {0, 0}, 1));
}

TEST_CASE("jacobian rejects characteristic zero") {
    CoefficientField f = CoefficientField::rationals();
    BinomialSystem sys({"x", "y"}, vec({1, 1}), f, {Binomial(vec({1, 0}), vec({0, 1}))});
    CHECK_THROWS_AS(jacobian(sys), DomainError);
}

TEST_CASE("tame projections of the chain relations keep only u3") {
    for (long long p : {2, 3, 5}) {
        CoefficientField f = CoefficientField::prime_field(p);
        BinomialSystem sys = plane_branch_chain_system(campillo_semigroup(p), f, false);
        RelationMatrix rel = relation_matrix(sys);
        IntMatrix gamma = IntMatrix(
            {vec({p * p * p}), vec({p * p * p + p * p}),
             vec({p * p * p * p + p * p * p + p * p + p}),
             vec({p * p * p * p * p + p * p * p * p + p * p * p + p * p + p + 1})},
            1);
        auto projections = find_tame_projections(rel, gamma, p);
        REQUIRE(projections.size() == 1);
        CHECK(projections[0].kept_variables == std::vector<size_t>{3});
        Int expected = p * p * p * p * p + p * p * p * p + p * p * p + p * p + p + 1;
        CHECK(int_abs(projections[0].minor_value) == expected);
        CHECK(projections[0].index == expected);
        CHECK(projections[0].index % p != 0);
    }
}

TEST_CASE("tame projections: planar semigroup with relation (-1,-1,1)") {
    RelationMatrix rel(IntMatrix({vec({-1, -1, 1})}));
    IntMatrix gamma({vec({1, 0}), vec({0, 1}), vec({1, 1})}, 2);
    for (long long p : {2, 3, 7}) {
        auto projections = find_tame_projections(rel, gamma, p);
        REQUIRE(projections.size() == 3);
        for (const auto& proj : projections) {
            CHECK(int_abs(proj.minor_value) == 1);
            CHECK(proj.index == 1);
        }
    }
}

TEST_CASE("minors through a column that vanishes mod p vanish mod p") {
    CoefficientField f = CoefficientField::prime_field(2);
    BinomialSystem sys = plane_branch_chain_system(campillo_semigroup(2), f, false);
    RelationMatrix rel = relation_matrix(sys);
    // column u3 of the relation matrix is (0,0,2), all even
    for (size_t r = 0; r < 3; ++r) CHECK(rel.rows.at(r, 3) % 2 == 0);
    for (const auto& cols : index_subsets(4, 3)) {
        if (!std::binary_search(cols.begin(), cols.end(), size_t(3))) continue;
        std::vector<IntVec> sub;
        for (size_t i = 0; i < 3; ++i) {
            IntVec row;
            for (size_t c : cols) row.push_back(rel.rows.at(i, c));
            sub.push_back(row);
        }
        CHECK(determinant(IntMatrix(sub, 3)) % 2 == 0);
    }
}

TEST_CASE("congruence sampling holds for the chain system") {
    for (long long p : {2, 3}) {
        CoefficientField f = CoefficientField::prime_field(p);
        BinomialSystem sys = plane_branch_chain_system(campillo_semigroup(p), f, false);
        Rng rng(1234 + p);
        CHECK(minor_congruence_check(sys, {0, 1, 2}, {0, 1, 2}, 20, rng));
        // both sides vanish mod 2 for the (x, y, u3) columns, and still agree
        Rng rng2(77);
        CHECK(minor_congruence_check(sys, {0, 1, 3}, {0, 1, 2}, 20, rng2));
    }
}

TEST_CASE("congruence sampling for a single binomial x^2 - y") {
    CoefficientField f = CoefficientField::prime_field(5);
    BinomialSystem sys({"x", "y"}, vec({1, 2}), f,
                       {Binomial(vec({2, 0}), vec({0, 1}))});
    Rng rng(9);
    CHECK(minor_congruence_check(sys, {0}, {0}, 20, rng));
}

TEST_CASE("congruence check rejects deformed systems") {
    CoefficientField f = CoefficientField::prime_field(2);
    BinomialSystem sys = plane_branch_chain_system(campillo_semigroup(2), f, true);
    Rng rng(1);
    CHECK_THROWS_AS(minor_congruence_check(sys, {0, 1, 2}, {0, 1, 2}, 5, rng), DomainError);
}

TEST_CASE("projection finiteness") {
    IntMatrix numerical({vec({8}), vec({12}), vec({30}), vec({63})}, 1);
    CHECK(projection_is_finite(numerical, {3}));

    IntMatrix planar({vec({1, 0}), vec({0, 1}), vec({1, 1})}, 2);
    CHECK_FALSE(projection_is_finite(planar, {0, 2})); // (0,1) outside cone((1,0),(1,1))
    CHECK(projection_is_finite(planar, {0, 1}));       // extreme rays span everything

    IntMatrix dependent({vec({1, 1}), vec({2, 2}), vec({0, 1})}, 2);
    CHECK_THROWS_AS(projection_is_finite(dependent, {0, 1}), DomainError);
}

TEST_CASE("deformed jacobian keeps the certified minor nonzero on the torus") {
    for (long long p : {2, 3, 5}) {
        CoefficientField f = CoefficientField::prime_field(p);
        SymbolicJacobian j =
            jacobian(plane_branch_chain_system(campillo_semigroup(p), f, true));
        MPoly minor = jacobian_minor(j, {0, 1, 2}, {0, 1, 2});
        CHECK_FALSE(minor.is_zero());
        Rng rng(555 + p);
        CHECK(minor_nonzero_on_cocharacters(minor, 20, rng));
    }
}

TEST_CASE("index subsets enumerate in lexicographic order") {
    auto subsets = index_subsets(4, 2);
    REQUIRE(subsets.size() == 6);
    CHECK(subsets.front() == std::vector<size_t>{0, 1});
    CHECK(subsets.back() == std::vector<size_t>{2, 3});
}
