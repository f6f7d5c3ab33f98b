#include <catch_amalgamated.hpp>

#include <cmath>

#include "bderange/analysis.hpp"

using bderange::Integer;
using bderange::IntPolynomial;
using bderange::Rational;
using bderange::rational_of;

TEST_CASE("partial sums of (-1)^k / (2^k k!)") {
    CHECK(bderange::s_value(0) == 1);
    CHECK(bderange::s_value(1) == rational_of(1, 2));
    CHECK(bderange::s_value(3) == rational_of(29, 48));
    CHECK(Rational(Integer(8) * 6) * bderange::s_value(3) == 29);  // 2^3 3! s_3 = d_3^B(1)
    CHECK(bderange::s_value(-1) == 0);
    CHECK(bderange::s_value(-4) == 0);
}

TEST_CASE("derivative closed forms hold exactly through n = 50") {
    const auto report = bderange::closed_form_checks(50);
    CHECK(report.all_equal());
    CHECK(report.checks_run == 51u * 3u + 50u * 2u + 49u * 2u);
    for (const auto& m : report.mismatches)
        UNSCOPED_INFO(m.identity << " n=" << m.n << ": " << bderange::to_decimal(m.lhs) << " vs "
                                 << bderange::to_decimal(m.rhs));
}

TEST_CASE("closed form spot values") {
    // B_2 = 1 + 6q + q^2: B_2'(1) = 8 = 2 * 2^2 * 2! / 2
    CHECK(IntPolynomial{1, 6, 1}.derivative().eval(Integer(1)) == 8);
    // d_2^B = 4q + q^2: d'(1) = 6 = (2^2 2!/2)(2 s_1 + s_0/2)
    CHECK(Rational(Integer(4)) * (Rational(2) * bderange::s_value(1) + bderange::s_value(0) / 2) ==
          6);
    // d_3^B = 8q + 20q^2 + q^3: d''(1) = 46 = (2^3 3!/12)(13 s_1 + 5 s_0 + (3/4) s_{-1})
    CHECK(IntPolynomial{0, 8, 20, 1}.derivative().derivative().eval(Integer(1)) == 46);
    CHECK(rational_of(48, 12) * (Rational(13) * bderange::s_value(1) + Rational(5) +
                                 rational_of(3, 4) * bderange::s_value(-1)) ==
          46);
}

TEST_CASE("exact moments at small n") {
    const auto m3 = bderange::moments(3);
    CHECK(m3.mean_exact == rational_of(51, 29));

    const auto m4 = bderange::moments(4);
    CHECK(m4.mean_exact == rational_of(524, 233));
    CHECK(m4.mean_asymptotic_gap < rational_of(1, 100));
    CHECK(m4.var_exact == rational_of(18072, 54289));
    CHECK(m4.var_gap_derived < rational_of(1, 1000));
    CHECK(m4.var_gap_paper > rational_of(5, 100));
}

TEST_CASE("moment gaps decay as n grows") {
    const auto family = bderange::derangement_b_family(50);
    Rational prev = -1;
    for (int n = 4; n <= 20; ++n) {
        const auto m = bderange::moments(n, family);
        if (n > 4) CHECK(m.mean_asymptotic_gap < prev);
        prev = m.mean_asymptotic_gap;
    }
    for (int n = 12; n <= 50; ++n) {
        const auto m = bderange::moments(n, family);
        CHECK(m.mean_asymptotic_gap < rational_of(1, 1000000000L));
        CHECK(m.var_gap_derived < rational_of(1, 1000000L));
    }
}

TEST_CASE("polynomial gcd and squarefree certification") {
    const IntPolynomial p{-1, 0, 1};          // (q-1)(q+1)
    const IntPolynomial q{1, 1};              // q+1
    CHECK(bderange::polynomial_gcd(p, q) == q);
    CHECK(bderange::certify_squarefree(p).squarefree);

    const IntPolynomial square = q * q * IntPolynomial{-3, 1};  // (q+1)^2 (q-3)
    const auto cert = bderange::certify_squarefree(square);
    CHECK_FALSE(cert.squarefree);
    CHECK(cert.gcd == q);
    CHECK_THROWS_AS(bderange::isolate_roots(square), bderange::non_squarefree_error);
}

TEST_CASE("Sturm counts on a hand-factored polynomial") {
    // (q - 1)(q + 2)(q + 5) = q^3 + 6q^2 + 3q - 10
    const IntPolynomial p{-10, 3, 6, 1};
    bderange::SturmChain chain(p);
    CHECK(chain.count_all() == 3);
    CHECK(chain.count_in(rational_of(-6), rational_of(0)) == 2);
    CHECK(chain.count_in(rational_of(-6), rational_of(-3)) == 1);
    CHECK(chain.count_in(rational_of(0), rational_of(2)) == 1);
    CHECK(chain.count_in(rational_of(-3), rational_of(-2)) == 1);  // root at the right endpoint
    CHECK(chain.count_in(rational_of(-2), rational_of(0)) == 0);
    CHECK(bderange::sturm_root_count(p, rational_of(-100), rational_of(100)) == 3);
}

TEST_CASE("root isolation for the first derangement polynomials") {
    const auto family = bderange::derangement_b_family(3);

    // d_2^B = q(4 + q): simple zero root plus the single root -4
    auto iso2 = bderange::isolate_roots(family.at(2));
    CHECK(iso2.multiplicity_at_zero == 1);
    REQUIRE(iso2.intervals.size() == 1);
    CHECK(iso2.intervals[0].lo < rational_of(-4));
    CHECK(rational_of(-4) <= iso2.intervals[0].hi);

    // d_3^B / q = 8 + 20q + q^2: two negative roots straddling -4
    auto iso3 = bderange::isolate_roots(family.at(3));
    CHECK(iso3.multiplicity_at_zero == 1);
    REQUIRE(iso3.intervals.size() == 2);
    CHECK(iso3.intervals[0].hi <= rational_of(-4));
    CHECK(rational_of(-4) < iso3.intervals[1].lo);
    CHECK(iso3.intervals[1].hi < rational_of(0));
    // sign of d_3^B/q at -4 is negative, positive at both outer ends
    const IntPolynomial core{8, 20, 1};
    CHECK(core.eval(Integer(-4)) < 0);
    CHECK(core.eval(Integer(-20)) > 0);
    CHECK(core.eval(Integer(0)) > 0);

    // q itself: handled entirely by the multiplicity path
    auto iso_q = bderange::isolate_roots(IntPolynomial{0, 1});
    CHECK(iso_q.multiplicity_at_zero == 1);
    CHECK(iso_q.intervals.empty());
}

TEST_CASE("interlacing certification, type B") {
    const auto family = bderange::derangement_b_family(14);
    for (int n = 2; n <= 14; ++n) {
        const auto w = bderange::interlacing_check(n, family);
        CHECK(w.holds);
        if (!w.holds) UNSCOPED_INFO("n=" << n << ": " << w.message);
        CHECK(w.current.multiplicity_at_zero == 1);
        CHECK(w.current.intervals.size() == static_cast<std::size_t>(n - 1));
        for (const auto& iv : w.current.intervals) CHECK(iv.lo < 0);
    }
    CHECK_THROWS_AS(bderange::interlacing_check(1), std::invalid_argument);
}

TEST_CASE("interlacing certification, type A") {
    const auto family = bderange::derangement_a_family(14);
    for (int n = 2; n <= 14; ++n) {
        const auto w = bderange::interlacing_check_a(n, family);
        CHECK(w.holds);
        if (!w.holds) UNSCOPED_INFO("n=" << n << ": " << w.message);
    }
}

TEST_CASE("interlacing check fails on a family that does not interlace") {
    // f = q(q+1)(q+4), g = q(q+5): the root of g/q does not separate f/q's roots
    bderange::PolynomialFamily fake{bderange::PolynomialFamily::Kind::derangement_b,
                                    bderange::PolynomialFamily::Provenance::recurrence,
                                    {IntPolynomial{1}, IntPolynomial{0, 5, 1},
                                     IntPolynomial{0, 4, 5, 1}}};
    const auto w = bderange::interlacing_check(2, fake);
    CHECK_FALSE(w.holds);
}

TEST_CASE("normality distances") {
    const bderange::DerangementCoeffTable table(100);
    const auto family = bderange::derangement_b_family(100);

    const auto r2 = bderange::normality_report(2, table, family);
    CHECK(r2.sup_cdf_distance_value > 0.0);
    CHECK(r2.sup_cdf_distance_value < 1.0);

    // frozen from an independent high-precision evaluation of the same
    // quantities (exact pmf + erfc-based Phi)
    const double expected_atom[] = {0.219886465368, 0.154942187048, 0.097822698732,
                                    0.069134159540};
    const double expected_mid[] = {0.010018907745, 0.004969255682, 0.001993221811,
                                   0.000991353422};
    const int ns[] = {10, 20, 50, 100};
    double prev = 1.0;
    for (int i = 0; i < 4; ++i) {
        const auto r = bderange::normality_report(ns[i], table, family);
        CHECK(std::abs(r.sup_cdf_distance_value - expected_atom[i]) < 1e-9);
        CHECK(std::abs(r.sup_cdf_distance_midpoint_value - expected_mid[i]) < 1e-9);
        CHECK(r.sup_cdf_distance_value < prev);
        prev = r.sup_cdf_distance_value;
    }
}
