#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bderange/numeric.hpp"
#include "bderange/polynomial.hpp"

namespace bderange {

namespace detail {

// Polynomial arithmetic over Q, used only to build Sturm chains; every chain
// member is scaled back to a primitive integer polynomial by a positive
// rational, which preserves signs everywhere.
using RatPoly = std::vector<Rational>;

inline RatPoly to_rat(const IntPolynomial& p) {
    RatPoly r;
    r.reserve(p.coefficients().size());
    for (const Integer& c : p.coefficients()) r.emplace_back(c);
    return r;
}

inline void rat_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b (degrees small; classical long division).
inline RatPoly rat_rem(RatPoly a, const RatPoly& b) {
    rat_trim(a);
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        rat_trim(a);
    }
    return a;
}

inline IntPolynomial primitive_scale(const RatPoly& p) {
    if (p.empty()) return IntPolynomial();
    Integer lcm_den = 1;
    for (const Rational& c : p) {
        Integer l;
        mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
        lcm_den = std::move(l);
    }
    std::vector<Integer> scaled;
    scaled.reserve(p.size());
    Integer content = 0;
    for (const Rational& c : p) {
        Integer v = c.get_num() * (lcm_den / c.get_den());
        Integer g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = std::move(g);
        scaled.push_back(std::move(v));
    }
    if (content > 1)
        for (Integer& v : scaled) v /= content;
    return IntPolynomial(std::move(scaled));
}

}  // namespace detail

// gcd over Z up to sign, primitive with positive leading coefficient.
inline IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b) {
    detail::RatPoly x = detail::to_rat(a), y = detail::to_rat(b);
    detail::rat_trim(x);
    detail::rat_trim(y);
    while (!y.empty()) {
        detail::RatPoly r = detail::rat_rem(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    IntPolynomial g = detail::primitive_scale(x);
    if (!g.is_zero() && g.coefficients().back() < 0) g = g * Integer(-1);
    return g;
}

struct SquarefreeCertificate {
    bool squarefree = false;
    IntPolynomial gcd;  // gcd(p, p'); constant iff squarefree
};

inline SquarefreeCertificate certify_squarefree(const IntPolynomial& p) {
    if (p.is_zero()) return {false, IntPolynomial()};
    IntPolynomial g = polynomial_gcd(p, p.derivative());
    return {g.degree() == 0, std::move(g)};
}

class non_squarefree_error : public std::runtime_error {
public:
    explicit non_squarefree_error(IntPolynomial gcd)
        : std::runtime_error("polynomial is not squarefree; gcd(p, p') = " + gcd.to_string()),
          gcd_(std::move(gcd)) {}
    const IntPolynomial& gcd() const { return gcd_; }

private:
    IntPolynomial gcd_;
};

// Half-open rational interval (lo, hi].
struct RationalInterval {
    Rational lo;
    Rational hi;
    std::string str() const { return "(" + to_decimal(lo) + ", " + to_decimal(hi) + "]"; }
};

// Standard Sturm chain of a squarefree polynomial: p, p', then negated
// remainders until a constant. Sign variation counts at rational points give
// exact root counts on half-open intervals.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p) {
        if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
        chain_.push_back(p);
        if (p.degree() == 0) return;
        chain_.push_back(p.derivative());
        detail::RatPoly a = detail::to_rat(chain_[0]);
        detail::RatPoly b = detail::to_rat(chain_[1]);
        while (true) {
            detail::RatPoly r = detail::rat_rem(std::move(a), b);
            if (r.empty()) break;  // gcd reached; nonconstant only if p is not squarefree
            for (Rational& c : r) c = -c;
            chain_.push_back(detail::primitive_scale(r));
            a = std::move(b);
            b = std::move(r);
        }
    }

    // Sign variations of the chain at x, zeros skipped.
    int variations_at(const Rational& x) const {
        int variations = 0;
        int last = 0;
        for (const IntPolynomial& p : chain_) {
            const Rational v = p.eval(x);
            const int s = sgn(v);
            if (s == 0) continue;
            if (last != 0 && s != last) ++variations;
            last = s;
        }
        return variations;
    }

    // Number of distinct real roots of p in (a, b].
    int count_in(const Rational& a, const Rational& b) const {
        if (!(a < b)) throw std::invalid_argument("SturmChain: empty interval");
        return variations_at(a) - variations_at(b);
    }

    // Strict bound M with every real root in (-M, M).
    Rational root_bound() const {
        const auto coeffs = chain_.front().coefficients();
        Rational max_ratio = 0;
        const Integer& lead = coeffs.back();
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
            Rational r(coeffs[i], lead);
            r.canonicalize();
            r = bderange::abs(r);
            if (r > max_ratio) max_ratio = r;
        }
        return max_ratio + 1;
    }

    int count_all() const {
        const Rational m = root_bound();
        return count_in(-m, m);
    }

    const std::vector<IntPolynomial>& members() const { return chain_; }

private:
    static int sgn(const Rational& v) { return mpq_sgn(v.get_mpq_t()); }

    std::vector<IntPolynomial> chain_;
};

inline int sturm_root_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
    const auto cert = certify_squarefree(p);
    if (!cert.squarefree) throw non_squarefree_error(cert.gcd);
    return SturmChain(p).count_in(a, b);
}

// Isolating intervals for the real roots of p = q^m * p1 with p1(0) != 0:
// the factored multiplicity at zero plus one disjoint half-open interval per
// distinct real root of p1, in ascending order.
struct RootIsolation {
    std::string family;  // optional id, filled by callers
    int n = 0;
    int multiplicity_at_zero = 0;
    std::vector<RationalInterval> intervals;
};

inline RootIsolation isolate_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    RootIsolation iso;
    iso.multiplicity_at_zero = static_cast<int>(p.low_degree());
    const IntPolynomial core = p.shifted_down(p.low_degree());
    if (core.degree() == 0) return iso;
    const auto cert = certify_squarefree(core);
    if (!cert.squarefree) throw non_squarefree_error(cert.gcd);
    const SturmChain chain(core);
    const Rational bound = chain.root_bound();

    std::deque<std::pair<RationalInterval, int>> work;
    const int total = chain.count_in(-bound, bound);
    if (total > 0) work.push_back({{-bound, bound}, total});
    while (!work.empty()) {
        auto [interval, count] = work.front();
        work.pop_front();
        if (count == 1) {
            iso.intervals.push_back(interval);
            continue;
        }
        const Rational mid = (interval.lo + interval.hi) / 2;
        const int left = chain.count_in(interval.lo, mid);
        if (left > 0) work.push_back({{interval.lo, mid}, left});
        if (count - left > 0) work.push_back({{mid, interval.hi}, count - left});
    }
    std::sort(iso.intervals.begin(), iso.intervals.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return iso;
}

namespace detail {

// Shrinks an isolating interval (keeping its single root) until its width is
// at most `width`.
inline void refine_interval(const SturmChain& chain, RationalInterval& interval,
                            const Rational& width) {
    while (interval.hi - interval.lo > width) {
        const Rational mid = (interval.lo + interval.hi) / 2;
        if (chain.count_in(interval.lo, mid) == 1)
            interval.hi = mid;
        else
            interval.lo = mid;
    }
}

}  // namespace detail

}  // namespace bderange
