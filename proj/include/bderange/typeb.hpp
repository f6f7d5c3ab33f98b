#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bderange/egf.hpp"
#include "bderange/enumerate.hpp"
#include "bderange/numeric.hpp"
#include "bderange/polynomial.hpp"

namespace bderange {

// A polynomial family indexed by n, materialized once per run; members are
// never recomputed, since the recurrences are sequential in n.
struct PolynomialFamily {
    enum class Kind { eulerian_b, derangement_b, eulerian_a_exc, eulerian_a_des1, derangement_a };
    enum class Provenance { enumeration, recurrence, binomial_sum };

    Kind kind;
    Provenance provenance;
    std::vector<IntPolynomial> members;  // index n

    int n_max() const { return static_cast<int>(members.size()) - 1; }

    const IntPolynomial& at(int n) const {
        if (n < 0 || n > n_max())
            throw std::out_of_range("PolynomialFamily: n=" + std::to_string(n) +
                                    " outside [0," + std::to_string(n_max()) + "]");
        return members[static_cast<std::size_t>(n)];
    }
};

inline const char* kind_name(PolynomialFamily::Kind k) {
    switch (k) {
        case PolynomialFamily::Kind::eulerian_b: return "eulerian_b";
        case PolynomialFamily::Kind::derangement_b: return "derangement_b";
        case PolynomialFamily::Kind::eulerian_a_exc: return "eulerian_a_exc";
        case PolynomialFamily::Kind::eulerian_a_des1: return "eulerian_a_des1";
        case PolynomialFamily::Kind::derangement_a: return "derangement_a";
    }
    return "?";
}

inline PolynomialFamily::Kind kind_from_name(std::string_view name) {
    using Kind = PolynomialFamily::Kind;
    if (name == "eulerian_b") return Kind::eulerian_b;
    if (name == "derangement_b") return Kind::derangement_b;
    if (name == "eulerian_a_exc") return Kind::eulerian_a_exc;
    if (name == "eulerian_a_des1") return Kind::eulerian_a_des1;
    if (name == "derangement_a") return Kind::derangement_a;
    throw std::invalid_argument("unknown family kind: " + std::string(name));
}

// B_n = ((2n-1)q + 1) B_{n-1} + 2q(1-q) B'_{n-1}, B_0 = 1.
inline PolynomialFamily eulerian_b_family(int n_max) {
    std::vector<IntPolynomial> members;
    members.reserve(static_cast<std::size_t>(n_max) + 1);
    members.push_back(IntPolynomial::one());
    const IntPolynomial two_q_one_minus_q{0, 2, -2};
    for (int n = 1; n <= n_max; ++n) {
        const IntPolynomial& prev = members.back();
        members.push_back(IntPolynomial{1, 2 * n - 1} * prev +
                          two_q_one_minus_q * prev.derivative());
    }
    return {PolynomialFamily::Kind::eulerian_b, PolynomialFamily::Provenance::recurrence,
            std::move(members)};
}

// d_n^B = (2n-1) q d_{n-1}^B + 2q(1-q) (d_{n-1}^B)' + 2(n-1) q d_{n-2}^B,
// d_0^B = 1, d_1^B = q.
inline PolynomialFamily derangement_b_family(int n_max) {
    std::vector<IntPolynomial> members;
    members.reserve(static_cast<std::size_t>(n_max) + 1);
    members.push_back(IntPolynomial::one());
    if (n_max >= 1) members.push_back(IntPolynomial{0, 1});
    const IntPolynomial q{0, 1};
    const IntPolynomial two_q_one_minus_q{0, 2, -2};
    for (int n = 2; n <= n_max; ++n) {
        const IntPolynomial& d1 = members[static_cast<std::size_t>(n - 1)];
        const IntPolynomial& d2 = members[static_cast<std::size_t>(n - 2)];
        members.push_back(q * d1 * Integer(2 * n - 1) + two_q_one_minus_q * d1.derivative() +
                          q * d2 * Integer(2 * (n - 1)));
    }
    return {PolynomialFamily::Kind::derangement_b, PolynomialFamily::Provenance::recurrence,
            std::move(members)};
}

// d_n^B = sum_k (-1)^{n-k} C(n,k) B_k, the binomial route.
inline IntPolynomial derangement_b_by_binomial(int n, const PolynomialFamily& eulerian) {
    IntPolynomial acc;
    for (int k = 0; k <= n; ++k) {
        Integer c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        if ((n - k) % 2 != 0) c = -c;
        acc += eulerian.at(k) * c;
    }
    return acc;
}

inline PolynomialFamily derangement_b_binomial_family(int n_max) {
    const PolynomialFamily eulerian = eulerian_b_family(n_max);
    std::vector<IntPolynomial> members;
    members.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) members.push_back(derangement_b_by_binomial(n, eulerian));
    return {PolynomialFamily::Kind::derangement_b, PolynomialFamily::Provenance::binomial_sum,
            std::move(members)};
}

// Ground-truth route: exhaustive exc_B histograms over derangements.
// Subject to the enumeration cap.
inline PolynomialFamily derangement_b_enumerated_family(int n_max) {
    std::vector<IntPolynomial> members;
    members.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        members.push_back(histogram(n, Statistic::exc_b, true).to_polynomial());
    return {PolynomialFamily::Kind::derangement_b, PolynomialFamily::Provenance::enumeration,
            std::move(members)};
}

inline IntPolynomial eulerian_b(int n) { return eulerian_b_family(n).members.back(); }
inline IntPolynomial derangement_b(int n) { return derangement_b_family(n).members.back(); }
inline IntPolynomial derangement_b_by_binomial(int n) {
    return derangement_b_by_binomial(n, eulerian_b_family(n));
}

// The d_{n,k} triangle via
// d_{n,k} = 2k d_{n-1,k} + (2n-2k+1) d_{n-1,k-1} + 2(n-1) d_{n-2,k-1}.
class DerangementCoeffTable {
public:
    explicit DerangementCoeffTable(int n_max) {
        if (n_max < 0) throw std::invalid_argument("DerangementCoeffTable: negative n_max");
        rows_.reserve(static_cast<std::size_t>(n_max) + 1);
        rows_.push_back({Integer(1)});                       // d_{0,0} = 1
        if (n_max >= 1) rows_.push_back({Integer(0), Integer(1)});  // d_1^B = q
        for (int n = 2; n <= n_max; ++n) {
            std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
            for (int k = 1; k <= n; ++k) {
                Integer v = Integer(2 * k) * at(n - 1, k) +
                            Integer(2 * n - 2 * k + 1) * at(n - 1, k - 1) +
                            Integer(2 * (n - 1)) * at(n - 2, k - 1);
                row[static_cast<std::size_t>(k)] = std::move(v);
            }
            rows_.push_back(std::move(row));
        }
    }

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    // d_{n,k}; zero outside the triangle.
    const Integer& at(int n, int k) const {
        static const Integer kZero = 0;
        if (n < 0 || n > n_max() || k < 0 || k > n) return kZero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    IntPolynomial row_polynomial(int n) const {
        if (n < 0 || n > n_max()) throw std::out_of_range("DerangementCoeffTable: row out of range");
        return IntPolynomial(rows_[static_cast<std::size_t>(n)]);
    }

private:
    std::vector<std::vector<Integer>> rows_;
};

// B_n = sum_k C(n,k) d_k^B, exactly. (The printed identity sums d_n^B
// independent of k; the inversion it is paired with forces d_k^B.)
inline bool binomial_convolution_check(int n, const PolynomialFamily& eulerian,
                                       const PolynomialFamily& derangement) {
    IntPolynomial acc;
    for (int k = 0; k <= n; ++k)
        acc += derangement.at(k) *
               binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return acc == eulerian.at(n);
}

inline bool binomial_convolution_check(int n) {
    return binomial_convolution_check(n, eulerian_b_family(n), derangement_b_family(n));
}

// (sum B_n t^n/n!) (1 - q e^{2t(1-q)}) == (1-q) e^{t(1-q)}, cross-multiplied
// through the truncation order.
inline bool egf_check_eulerian_b(const PolynomialFamily& eulerian, int order) {
    const EgfSeries series(std::vector<IntPolynomial>(
        eulerian.members.begin(), eulerian.members.begin() + order + 1));
    const IntPolynomial q{0, 1};
    const EgfSeries exp_2t_1mq = egf_poly_arg_exp(IntPolynomial{2, -2}, order);
    const EgfSeries kernel = EgfSeries::from_generator(order, [&](int n) {
        IntPolynomial t = q * exp_2t_1mq.term(n) * Integer(-1);
        if (n == 0) t += IntPolynomial::one();
        return t;
    });
    const EgfSeries rhs_exp = egf_poly_arg_exp(IntPolynomial{1, -1}, order);
    const EgfSeries rhs = EgfSeries::from_generator(
        order, [&](int n) { return IntPolynomial{1, -1} * rhs_exp.term(n); });
    return egf_mul(series, kernel) == rhs;
}

inline bool egf_check_eulerian_b(int order) {
    return egf_check_eulerian_b(eulerian_b_family(order), order);
}

// Both closed forms of the derangement generating function:
//   (sum d_n^B t^n/n!) (e^{2tq} - q e^{2t}) == (1-q) e^{tq}
//   (sum d_n^B t^n/n!) (1 - sum_{m>=2} 2^m (q+...+q^{m-1}) t^m/m!) == e^{tq}
inline bool egf_check_derangement_b(const PolynomialFamily& derangement, int order) {
    const EgfSeries series(std::vector<IntPolynomial>(
        derangement.members.begin(), derangement.members.begin() + order + 1));
    const IntPolynomial q{0, 1};
    const EgfSeries etq = egf_exp_linear(1, 1, order);

    const EgfSeries e2tq = egf_exp_linear(2, 1, order);
    const EgfSeries e2t = egf_exp_linear(2, 0, order);
    const EgfSeries kernel1 = EgfSeries::from_generator(
        order, [&](int n) { return e2tq.term(n) - q * e2t.term(n); });
    const EgfSeries rhs1 = EgfSeries::from_generator(
        order, [&](int n) { return IntPolynomial{1, -1} * etq.term(n); });
    if (egf_mul(series, kernel1) != rhs1) return false;

    const EgfSeries kernel2 = EgfSeries::from_generator(order, [&](int n) {
        if (n == 0) return IntPolynomial::one();
        if (n == 1) return IntPolynomial::zero();
        return IntPolynomial::zero() -
               IntPolynomial::q_run(static_cast<std::size_t>(n)) * pow2(static_cast<unsigned long>(n));
    });
    return egf_mul(series, kernel2) == etq;
}

inline bool egf_check_derangement_b(int order) {
    if (order < 2) throw std::invalid_argument("egf_check_derangement_b: order must be >= 2");
    return egf_check_derangement_b(derangement_b_family(order), order);
}

// The spiral chain d_{n,n} < d_{n,1} < d_{n,n-1} < d_{n,2} < ... listed as
// (k, d_{n,k}) pairs; holds iff the chain is strictly increasing.
struct SpiralWitness {
    int n = 0;
    bool holds = false;
    std::vector<std::pair<int, Integer>> chain;

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (i) out += " < ";
            out += chain[i].second.get_str();
        }
        return out;
    }
};

inline SpiralWitness spiral_check(int n, const DerangementCoeffTable& table) {
    if (n < 2) throw std::invalid_argument("spiral_check: n must be >= 2");
    if (n > table.n_max()) throw std::out_of_range("spiral_check: table too small");
    SpiralWitness w;
    w.n = n;
    int lo = 1, hi = n;
    bool take_hi = true;
    while (lo <= hi) {
        const int k = take_hi ? hi : lo;
        w.chain.emplace_back(k, table.at(n, k));
        if (take_hi)
            --hi;
        else
            ++lo;
        take_hi = !take_hi;
    }
    w.holds = true;
    for (std::size_t i = 0; i + 1 < w.chain.size(); ++i)
        if (!(w.chain[i].second < w.chain[i + 1].second)) w.holds = false;
    return w;
}

inline SpiralWitness spiral_check(int n) { return spiral_check(n, DerangementCoeffTable(n)); }

// des_B and exc_B have the same distribution over B_n (checked by counting).
struct EquidistributionWitness {
    int n = 0;
    bool holds = false;
    StatHistogram des_hist;
    StatHistogram exc_hist;
};

inline EquidistributionWitness equidistribution_check(int n) {
    EquidistributionWitness w;
    w.n = n;
    w.des_hist = histogram(n, Statistic::des_b, false);
    w.exc_hist = histogram(n, Statistic::exc_b, false);
    w.holds = w.des_hist.same_counts(w.exc_hist);
    return w;
}

}  // namespace bderange
