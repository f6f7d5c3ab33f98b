#include <catch_amalgamated.hpp>

#include "bderange/enumerate.hpp"
#include "bderange/typea.hpp"

using bderange::IntPolynomial;
using bderange::Statistic;

TEST_CASE("classical derangement polynomials") {
    const auto family = bderange::derangement_a_family(4);
    CHECK(family.at(0) == IntPolynomial{1});
    CHECK(family.at(1).is_zero());
    CHECK(family.at(2) == IntPolynomial{0, 1});
    CHECK(family.at(3) == IntPolynomial{0, 1, 1});
    CHECK(family.at(4) == IntPolynomial{0, 1, 7, 1});
}

TEST_CASE("classical Eulerian polynomials, excedance convention") {
    const auto family = bderange::eulerian_a_exc_family(3);
    CHECK(family.at(0) == IntPolynomial{1});
    CHECK(family.at(1) == IntPolynomial{1});
    CHECK(family.at(2) == IntPolynomial{1, 1});
    CHECK(family.at(3) == IntPolynomial{1, 4, 1});
}

TEST_CASE("the des+1 convention is q times the excedance convention") {
    const auto hat = bderange::eulerian_a_des1_family(8);
    const auto exc = bderange::eulerian_a_exc_family(8);
    CHECK(hat.at(0) == IntPolynomial{1});
    for (int n = 1; n <= 8; ++n) CHECK(hat.at(n) == IntPolynomial{0, 1} * exc.at(n));
    // both sides independently from enumeration
    for (int n = 1; n <= 8; ++n) {
        const auto des1 = bderange::histogram(n, Statistic::des_a, false);
        IntPolynomial des1_poly;
        for (const auto& [k, c] : des1.counts)
            des1_poly += IntPolynomial::monomial(c, static_cast<std::size_t>(k) + 1);
        CHECK(des1_poly == hat.at(n));
        CHECK(bderange::histogram(n, Statistic::exc_a, false).to_polynomial() == exc.at(n));
    }
}

TEST_CASE("enumeration agreement for classical derangements") {
    const auto family = bderange::derangement_a_family(8);
    for (int n = 0; n <= 8; ++n)
        CHECK(bderange::histogram(n, Statistic::exc_a, true).to_polynomial() == family.at(n));
}

TEST_CASE("alternating binomial sum recovers the derangement polynomial") {
    const auto exc = bderange::eulerian_a_exc_family(20);
    const auto der = bderange::derangement_a_family(20);
    for (int n = 0; n <= 20; ++n) CHECK(bderange::binomial_check_a(n, exc, der));
}

TEST_CASE("classical generating function identities") {
    CHECK(bderange::egf_check_typea(12));
    auto hat = bderange::eulerian_a_des1_family(8);
    auto der = bderange::derangement_a_family(8);
    hat.members[2] += IntPolynomial{0, 1};
    CHECK_FALSE(bderange::egf_check_typea(hat, der, 8));
}

TEST_CASE("palindromic coefficient vectors") {
    const auto family = bderange::derangement_a_family(100);
    for (int n = 2; n <= 100; ++n) CHECK(bderange::is_palindromic_after_q(family.at(n)));
    CHECK_FALSE(bderange::is_palindromic_after_q(IntPolynomial{0, 1, 2}));
    CHECK_FALSE(bderange::is_palindromic_after_q(IntPolynomial{1, 1}));
    CHECK_FALSE(bderange::is_palindromic_after_q(IntPolynomial{}));
}
