#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toriclab/branch_semigroup.hpp"

#include <set>

using namespace toric;

namespace {

std::vector<Int> gens(std::vector<long long> xs) {
    std::vector<Int> v;
    for (long long x : xs) v.push_back(x);
    return v;
}

// x = t^{p^3}, y = t^{p^3+p^2} + t^{p^3+p^2+p+1} over F_p
std::pair<TruncatedSeries, TruncatedSeries> branch_parametrization(long long p, std::int64_t t) {
    CoefficientField f = CoefficientField::prime_field(p);
    TruncatedSeries x = TruncatedSeries::monomial(f, t, p * p * p, 1);
    TruncatedSeries y = TruncatedSeries::monomial(f, t, p * p * p + p * p, 1) +
                        TruncatedSeries::monomial(f, t, p * p * p + p * p + p + 1, 1);
    return {x, y};
}

} // namespace

TEST_CASE("series_order") {
    CoefficientField f = CoefficientField::prime_field(2);
    CHECK(*series_order(TruncatedSeries::monomial(f, 64, 8, 1)) == 8);
    TruncatedSeries y = TruncatedSeries::monomial(f, 64, 12, 1) +
                        TruncatedSeries::monomial(f, 64, 15, 1);
    CHECK(*series_order(y) == 12);
    CHECK_FALSE(series_order(TruncatedSeries(f, 64)).has_value());
}

TEST_CASE("series arithmetic respects the characteristic") {
    CoefficientField f = CoefficientField::prime_field(2);
    TruncatedSeries y = TruncatedSeries::monomial(f, 64, 12, 1) +
                        TruncatedSeries::monomial(f, 64, 15, 1);
    TruncatedSeries y2 = y * y;
    // cross term 2 t^27 vanishes mod 2
    CHECK(y2.coefficient(24) == 1);
    CHECK(y2.coefficient(27) == 0);
    CHECK(y2.coefficient(30) == 1);
    CHECK(y2 == y.pow(2));
}

TEST_CASE("value_semigroup: coprime monomials give <2,3>") {
    for (long long ch : {0LL, 5LL}) {
        CoefficientField f = CoefficientField::of_characteristic(ch);
        TruncatedSeries x = TruncatedSeries::monomial(f, 64, 2, 1);
        TruncatedSeries y = TruncatedSeries::monomial(f, 64, 3, 1);
        NumericalSemigroup s = value_semigroup(x, y);
        CHECK(s.generators() == gens({2, 3}));
        CHECK(s.conductor() == 2);
    }
}

TEST_CASE("value_semigroup: p=2 branch gives <8,12,30,63>") {
    auto [x, y] = branch_parametrization(2, 512);
    NumericalSemigroup s = value_semigroup(x, y);
    CHECK(s.generators() == gens({8, 12, 30, 63}));
    CHECK(s.conductor() == 98);
}

TEST_CASE("value_semigroup: p=3 branch gives <27,36,120,364>") {
    auto [x, y] = branch_parametrization(3, 4 * 27 * 36);
    NumericalSemigroup s = value_semigroup(x, y);
    CHECK(s.generators() == gens({27, 36, 120, 364}));
    CHECK(s.conductor() == 1014);
}

TEST_CASE("value_semigroup: stable under doubled truncation") {
    auto [x, y] = branch_parametrization(2, 256);
    auto [x2, y2] = branch_parametrization(2, 512);
    CHECK(value_semigroup(x, y).generators() == value_semigroup(x2, y2).generators());
}

TEST_CASE("value_semigroup: non-coprime-closable input exhausts the truncation") {
    CoefficientField f = CoefficientField::rationals();
    TruncatedSeries x = TruncatedSeries::monomial(f, 128, 2, 1);
    TruncatedSeries y = TruncatedSeries::monomial(f, 128, 4, 1);
    CHECK_THROWS_AS(value_semigroup(x, y), ComputationError);
}

TEST_CASE("value_semigroup: char-0 subduction with coefficient matching") {
    // y^2 - x^3 = 2 t^13 + t^14 exposes 13
    CoefficientField f = CoefficientField::rationals();
    TruncatedSeries x = TruncatedSeries::monomial(f, 256, 4, 1);
    TruncatedSeries y = TruncatedSeries::monomial(f, 256, 6, 1) +
                        TruncatedSeries::monomial(f, 256, 7, 1);
    NumericalSemigroup s = value_semigroup(x, y);
    CHECK(s.generators() == gens({4, 6, 13}));
}

TEST_CASE("semigroup closure and minimality") {
    NumericalSemigroup s(gens({8, 12, 30, 63}));
    CHECK(s.conductor() == 98);
    // every integer in [conductor, conductor + 3*maxgen] is inside
    for (Int k = s.conductor(); k <= s.conductor() + 3 * 63; ++k) CHECK(s.contains(k));
    CHECK_FALSE(s.contains(s.conductor() - 1));
    // removing any generator changes the semigroup: constructor enforces
    // minimality, so a redundant list must throw
    CHECK_THROWS_AS(NumericalSemigroup(gens({2, 3, 5})), DomainError);
    CHECK_THROWS_AS(NumericalSemigroup(gens({4, 6, 10, 13})), DomainError);
}

TEST_CASE("gap count") {
    // <2,3>: the only gap is 1
    CHECK(NumericalSemigroup(gens({2, 3})).gap_count() == 1);
    // plane branch semigroups are symmetric: genus = conductor / 2
    NumericalSemigroup s(gens({8, 12, 30, 63}));
    CHECK(s.gap_count() == 49);
}

TEST_CASE("zariski relations: forward") {
    CHECK(semigroup_from_char_exponents(CharExponents(gens({8, 12, 18, 21}))).generators() ==
          gens({8, 12, 30, 63}));
    CHECK(semigroup_from_char_exponents(CharExponents(gens({27, 36, 48, 52}))).generators() ==
          gens({27, 36, 120, 364}));
    CHECK(semigroup_from_char_exponents(CharExponents(gens({2, 3}))).generators() == gens({2, 3}));
}

TEST_CASE("zariski relations: backward") {
    CHECK(char_exponents_from_semigroup(NumericalSemigroup(gens({8, 12, 30, 63}))).beta() ==
          gens({8, 12, 18, 21}));
    CHECK(char_exponents_from_semigroup(NumericalSemigroup(gens({27, 36, 120, 364}))).beta() ==
          gens({27, 36, 48, 52}));
    CHECK(char_exponents_from_semigroup(NumericalSemigroup(gens({4, 6, 13}))).beta() ==
          gens({4, 6, 7}));
}

TEST_CASE("zariski relations: rejects non-plane-branch data") {
    // <4,6,2k+1> is a plane branch only when 2k+1 > 12; <4,6,11> fails
    CHECK_THROWS_AS(char_exponents_from_semigroup(NumericalSemigroup(gens({4, 6, 11}))),
                    DomainError);
}

TEST_CASE("zariski roundtrip on random valid exponent lists") {
    Rng rng(5150);
    int done = 0;
    while (done < 200) {
        // build a strictly decreasing gcd chain, then exponents on top of it
        size_t g = 1 + rng.below(4);
        std::vector<Int> e(g + 1);
        e[g] = 1;
        for (size_t i = g; i > 0; --i) e[i - 1] = e[i] * rng.range(2, 4);
        std::vector<Int> beta(g + 1);
        beta[0] = e[0];
        bool ok = true;
        for (size_t i = 1; i <= g; ++i) {
            // beta_i = beta_{i-1} + k * e_i with gcd(k, e_{i-1}/e_i) = 1
            Int step = e[i];
            Int k = rng.range(1, 30);
            beta[i] = beta[i - 1] + k * step;
            if (int_gcd(e[i - 1], beta[i]) != e[i]) { ok = false; break; }
            if (beta[i] > 10000) { ok = false; break; }
        }
        if (!ok) continue;
        CharExponents ce(beta);
        NumericalSemigroup s = semigroup_from_char_exponents(ce);
        CHECK(char_exponents_from_semigroup(s) == ce);
        ++done;
    }
}

TEST_CASE("value semigroup agrees with the zariski image of the exponent list") {
    auto [x2, y2] = branch_parametrization(2, 512);
    CHECK(value_semigroup(x2, y2) ==
          semigroup_from_char_exponents(CharExponents(gens({8, 12, 18, 21}))));
    auto [x3, y3] = branch_parametrization(3, 4 * 27 * 36);
    CHECK(value_semigroup(x3, y3) ==
          semigroup_from_char_exponents(CharExponents(gens({27, 36, 48, 52}))));
}

TEST_CASE("curve equation: vanishes for p=2 and p=3") {
    CHECK(verify_curve_equation(2, 200));
    CHECK(verify_curve_equation(3, 2200));
}

TEST_CASE("curve equation: perturbed parametrization fails") {
    CoefficientField f = CoefficientField::prime_field(2);
    TruncatedSeries x = TruncatedSeries::monomial(f, 200, 8, 1);
    TruncatedSeries y = TruncatedSeries::monomial(f, 200, 12, 1) +
                        TruncatedSeries::monomial(f, 200, 13, 1);
    CHECK_FALSE(curve_equation_residual(x, y).is_zero_to_precision());
}

TEST_CASE("curve equation: truncation guard") {
    CHECK_THROWS_AS(verify_curve_equation(2, 100), ComputationError);
}
