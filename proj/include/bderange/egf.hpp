#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bderange/numeric.hpp"
#include "bderange/polynomial.hpp"

namespace bderange {

// Truncated exponential generating function: term n is the polynomial
// coefficient of t^n/n!. All arithmetic is exact; products use the binomial
// convolution, so the series never leaves the integer-coefficient ring.
class EgfSeries {
public:
    explicit EgfSeries(std::vector<IntPolynomial> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw std::invalid_argument("EgfSeries: needs at least term 0");
    }

    template <typename Gen>
    static EgfSeries from_generator(int order, Gen&& gen) {
        if (order < 0) throw std::invalid_argument("EgfSeries: negative order");
        std::vector<IntPolynomial> t;
        t.reserve(static_cast<std::size_t>(order) + 1);
        for (int n = 0; n <= order; ++n) t.push_back(gen(n));
        return EgfSeries(std::move(t));
    }

    int order() const { return static_cast<int>(terms_.size()) - 1; }

    const IntPolynomial& term(int n) const { return terms_.at(static_cast<std::size_t>(n)); }

    const std::vector<IntPolynomial>& terms() const { return terms_; }

    bool operator==(const EgfSeries&) const = default;

private:
    std::vector<IntPolynomial> terms_;
};

// (f*g) term n = sum_k C(n,k) f_k g_{n-k}; both series must share the order.
inline EgfSeries egf_mul(const EgfSeries& f, const EgfSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("egf_mul: truncation orders differ");
    const int order = f.order();
    std::vector<IntPolynomial> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        IntPolynomial acc;
        for (int k = 0; k <= n; ++k) {
            const IntPolynomial prod = f.term(k) * g.term(n - k);
            if (prod.is_zero()) continue;
            acc += prod * binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        }
        out[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return EgfSeries(std::move(out));
}

// e^{t * p(q)}: term n = p(q)^n.
inline EgfSeries egf_poly_arg_exp(const IntPolynomial& p, int order) {
    if (order < 0) throw std::invalid_argument("egf_poly_arg_exp: negative order");
    std::vector<IntPolynomial> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    out.push_back(IntPolynomial::one());
    for (int n = 1; n <= order; ++n) out.push_back(out.back() * p);
    return EgfSeries(std::move(out));
}

// e^{c * t * q^m}: term n = c^n q^{mn}.
inline EgfSeries egf_exp_linear(long c, unsigned m, int order) {
    return egf_poly_arg_exp(IntPolynomial::monomial(Integer(c), m), order);
}

}  // namespace bderange
