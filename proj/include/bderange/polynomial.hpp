#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bderange/numeric.hpp"

namespace bderange {

// Dense univariate polynomial in q over arbitrary-precision integers.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    IntPolynomial(std::initializer_list<long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial{1}; }

    // c * q^k
    static IntPolynomial monomial(Integer c, std::size_t k) {
        if (c == 0) return IntPolynomial();
        std::vector<Integer> v(k + 1);
        v[k] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    // q + q^2 + ... + q^(len-1); the zero polynomial when len < 2.
    static IntPolynomial q_run(std::size_t len) {
        if (len < 2) return IntPolynomial();
        std::vector<Integer> v(len);
        for (std::size_t i = 1; i < len; ++i) v[i] = 1;
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Integer& coeff(std::size_t k) const {
        static const Integer kZero = 0;
        return k < coeffs_.size() ? coeffs_[k] : kZero;
    }

    std::span<const Integer> coefficients() const { return coeffs_; }

    // Index of the lowest nonzero coefficient (the multiplicity of the root
    // at 0); 0 for the zero polynomial.
    std::size_t low_degree() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return i;
        return 0;
    }

    // Divides out q^k. Requires the k lowest coefficients to be zero.
    IntPolynomial shifted_down(std::size_t k) const {
        if (k == 0) return *this;
        std::vector<Integer> v;
        if (coeffs_.size() > k) v.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
        return IntPolynomial(std::move(v));
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator*=(const Integer& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return IntPolynomial();
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
    friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return IntPolynomial();
        std::vector<Integer> r(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = Integer(i) * coeffs_[i];
        return IntPolynomial(std::move(r));
    }

    Integer eval(const Integer& x) const {
        Integer acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
        return acc;
    }

    bool operator==(const IntPolynomial&) const = default;

    // "a0 + a1*q + a2*q^2" with zero terms omitted.
    std::string to_string(std::string_view var = "q") const { return render(var, true); }

    // Compact rendering, "8q+20q^2+q^3".
    std::string to_compact_string(std::string_view var = "q") const { return render(var, false); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::string render(std::string_view var, bool spaced) const {
        if (coeffs_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Integer& c = coeffs_[k];
            if (c == 0) continue;
            const bool neg = c < 0;
            if (first) {
                if (neg) out << "-";
            } else {
                out << (spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+"));
            }
            Integer a = neg ? Integer(-c) : c;
            if (k == 0) {
                out << a.get_str();
            } else {
                if (a != 1) {
                    out << a.get_str();
                    if (spaced) out << "*";
                }
                out << var;
                if (k > 1) out << "^" << k;
            }
            first = false;
        }
        return out.str();
    }

    std::vector<Integer> coeffs_;
};

}  // namespace bderange
