#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "bderange/polynomial.hpp"

using bderange::Integer;
using bderange::IntPolynomial;
using bderange::Rational;

namespace {

IntPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
    IntPolynomial p(std::vector<Integer>{Integer(1), Integer(2), Integer(0), Integer(0)});
    CHECK(p.degree() == 1);
    CHECK(p == IntPolynomial{1, 2});
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK((IntPolynomial{1, -1} - IntPolynomial{1, -1}).is_zero());
}

TEST_CASE("coefficient access beyond the degree yields zero") {
    IntPolynomial p{3, 0, 7};
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 7);
    CHECK(p.coeff(99) == 0);
}

TEST_CASE("arithmetic basics") {
    IntPolynomial a{1, 2, 3};
    IntPolynomial b{5, -2};
    CHECK(a + b == IntPolynomial{6, 0, 3});
    CHECK(a - b == IntPolynomial{-4, 4, 3});
    CHECK(a * b == IntPolynomial{5, 8, 11, -6});
    CHECK(a * IntPolynomial::zero() == IntPolynomial::zero());
    CHECK(a * Integer(0) == IntPolynomial::zero());
    CHECK(-b == IntPolynomial{-5, 2});
}

TEST_CASE("ring axioms on pseudorandom polynomials") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const IntPolynomial p = random_poly(rng);
        const IntPolynomial q = random_poly(rng);
        const IntPolynomial r = random_poly(rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
    }
}

TEST_CASE("derivative and the product rule") {
    CHECK(IntPolynomial{0, 4, 1}.derivative() == IntPolynomial{4, 2});
    CHECK(IntPolynomial{0, 4, 1}.derivative().eval(Integer(1)) == 6);
    CHECK(IntPolynomial{7}.derivative().is_zero());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const IntPolynomial p = random_poly(rng);
        const IntPolynomial q = random_poly(rng);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("evaluation is exact in both rings") {
    // 8q + 20q^2 + q^3 at 1: the n = 3 row sums to 29
    IntPolynomial d3{0, 8, 20, 1};
    CHECK(d3.eval(Integer(1)) == 29);
    CHECK(d3.eval(Integer(-2)) == 8 * -2 + 20 * 4 + -8);
    const Rational half = bderange::rational_of(1, 2);
    CHECK(d3.eval(half) == bderange::rational_of(8, 2) + bderange::rational_of(20, 4) +
                               bderange::rational_of(1, 8));
}

TEST_CASE("monomial and q_run constructors") {
    CHECK(IntPolynomial::monomial(Integer(5), 3) == IntPolynomial{0, 0, 0, 5});
    CHECK(IntPolynomial::monomial(Integer(0), 3).is_zero());
    CHECK(IntPolynomial::q_run(4) == IntPolynomial{0, 1, 1, 1});
    CHECK(IntPolynomial::q_run(2) == IntPolynomial{0, 1});
    CHECK(IntPolynomial::q_run(1).is_zero());
}

TEST_CASE("low degree and shifting") {
    IntPolynomial p{0, 0, 3, 1};
    CHECK(p.low_degree() == 2);
    CHECK(p.shifted_down(2) == IntPolynomial{3, 1});
    CHECK(IntPolynomial{4, 1}.low_degree() == 0);
}

TEST_CASE("text rendering") {
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial{1}.to_compact_string() == "1");
    CHECK(IntPolynomial{0, 4, 1}.to_compact_string() == "4q+q^2");
    CHECK(IntPolynomial{0, 8, 20, 1}.to_compact_string() == "8q+20q^2+q^3");
    CHECK(IntPolynomial{1, -1}.to_string() == "1 - q");
    CHECK(IntPolynomial{-2, 0, 5}.to_string() == "-2 + 5*q^2");
    CHECK(IntPolynomial{0, 1}.to_string() == "q");
}
