#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "bderange/egf.hpp"
#include "bderange/numeric.hpp"
#include "bderange/polynomial.hpp"
#include "bderange/typeb.hpp"

namespace bderange {

// Classical (type A) cross-checks, run through the same engines.
//
// Two Eulerian conventions are kept apart on purpose. A_n^exc sums q^exc
// over S_n (with A_0 = 1), which is the convention under which
// d_n = sum (-1)^{n-k} C(n,k) A_k holds. The hatted variant sums q^{des+1}
// (equivalently q * A_n^exc for n >= 1, with hat(A)_0 = 1) and is the one
// appearing in the classical generating function.

// d_n = (n-1) q d_{n-1} + q(1-q) d'_{n-1} + (n-1) q d_{n-2}, d_0 = 1, d_1 = 0.
inline PolynomialFamily derangement_a_family(int n_max) {
    std::vector<IntPolynomial> members;
    members.reserve(static_cast<std::size_t>(n_max) + 1);
    members.push_back(IntPolynomial::one());
    if (n_max >= 1) members.push_back(IntPolynomial::zero());
    const IntPolynomial q{0, 1};
    const IntPolynomial q_one_minus_q{0, 1, -1};
    for (int n = 2; n <= n_max; ++n) {
        const IntPolynomial& d1 = members[static_cast<std::size_t>(n - 1)];
        const IntPolynomial& d2 = members[static_cast<std::size_t>(n - 2)];
        members.push_back(q * d1 * Integer(n - 1) + q_one_minus_q * d1.derivative() +
                          q * d2 * Integer(n - 1));
    }
    return {PolynomialFamily::Kind::derangement_a, PolynomialFamily::Provenance::recurrence,
            std::move(members)};
}

// A_n^exc = sum_k C(n,k) d_k (binomial inversion of the derangement formula).
inline PolynomialFamily eulerian_a_exc_family(int n_max) {
    const PolynomialFamily der = derangement_a_family(n_max);
    std::vector<IntPolynomial> members;
    members.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        IntPolynomial acc;
        for (int k = 0; k <= n; ++k)
            acc += der.at(k) * binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        members.push_back(std::move(acc));
    }
    return {PolynomialFamily::Kind::eulerian_a_exc, PolynomialFamily::Provenance::binomial_sum,
            std::move(members)};
}

// hat(A)_n = q * A_n^exc for n >= 1, hat(A)_0 = 1.
inline PolynomialFamily eulerian_a_des1_family(int n_max) {
    const PolynomialFamily exc = eulerian_a_exc_family(n_max);
    std::vector<IntPolynomial> members;
    members.reserve(static_cast<std::size_t>(n_max) + 1);
    members.push_back(IntPolynomial::one());
    const IntPolynomial q{0, 1};
    for (int n = 1; n <= n_max; ++n) members.push_back(q * exc.at(n));
    return {PolynomialFamily::Kind::eulerian_a_des1, PolynomialFamily::Provenance::binomial_sum,
            std::move(members)};
}

inline IntPolynomial derangement_a(int n) { return derangement_a_family(n).members.back(); }
inline IntPolynomial eulerian_a(int n) { return eulerian_a_exc_family(n).members.back(); }

// sum_k (-1)^{n-k} C(n,k) A_k^exc == d_n, exactly.
inline bool binomial_check_a(int n, const PolynomialFamily& eulerian_exc,
                             const PolynomialFamily& derangement) {
    IntPolynomial acc;
    for (int k = 0; k <= n; ++k) {
        Integer c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        if ((n - k) % 2 != 0) c = -c;
        acc += eulerian_exc.at(k) * c;
    }
    return acc == derangement.at(n);
}

inline bool binomial_check_a(int n) {
    return binomial_check_a(n, eulerian_a_exc_family(n), derangement_a_family(n));
}

// The two classical generating function identities, cross-multiplied:
//   (sum hat(A)_n t^n/n!) (e^{qt} - q e^t) == (1-q) e^{qt}
//   (sum d_n t^n/n!) (1 - sum_{m>=2} (q+...+q^{m-1}) t^m/m!) == 1
inline bool egf_check_typea(const PolynomialFamily& eulerian_des1,
                            const PolynomialFamily& derangement, int order) {
    const IntPolynomial q{0, 1};
    const EgfSeries etq = egf_exp_linear(1, 1, order);
    const EgfSeries et = egf_exp_linear(1, 0, order);

    const EgfSeries hat(std::vector<IntPolynomial>(
        eulerian_des1.members.begin(), eulerian_des1.members.begin() + order + 1));
    const EgfSeries kernel1 = EgfSeries::from_generator(
        order, [&](int n) { return etq.term(n) - q * et.term(n); });
    const EgfSeries rhs1 = EgfSeries::from_generator(
        order, [&](int n) { return IntPolynomial{1, -1} * etq.term(n); });
    if (egf_mul(hat, kernel1) != rhs1) return false;

    const EgfSeries der(std::vector<IntPolynomial>(
        derangement.members.begin(), derangement.members.begin() + order + 1));
    const EgfSeries kernel2 = EgfSeries::from_generator(order, [&](int n) {
        if (n == 0) return IntPolynomial::one();
        return IntPolynomial::zero() - IntPolynomial::q_run(static_cast<std::size_t>(n));
    });
    const EgfSeries one = EgfSeries::from_generator(
        order, [](int n) { return n == 0 ? IntPolynomial::one() : IntPolynomial::zero(); });
    return egf_mul(der, kernel2) == one;
}

inline bool egf_check_typea(int order) {
    if (order < 2) throw std::invalid_argument("egf_check_typea: order must be >= 2");
    return egf_check_typea(eulerian_a_des1_family(order), derangement_a_family(order), order);
}

// Brenti's symmetry: the coefficient vector of d_n(q)/q is palindromic.
inline bool is_palindromic_after_q(const IntPolynomial& p) {
    if (p.is_zero() || p.coeff(0) != 0) return false;
    const IntPolynomial core = p.shifted_down(1);
    const auto c = core.coefficients();
    for (std::size_t i = 0, j = c.size(); i < j; ++i)
        if (c[i] != c[c.size() - 1 - i]) return false;
    return true;
}

}  // namespace bderange
