#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace bderange {

// Exact arithmetic backing for the whole library. Coefficients of the
// polynomial families leave the 64-bit range around n = 17, so everything
// that counts or evaluates is arbitrary precision.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow2(unsigned long n) {
    Integer r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), n);
    return r;
}

// (p_1 + ... + p_m)! / (p_1! ... p_m!)
inline Integer multinomial(std::span<const int> parts) {
    Integer r = 1;
    unsigned long total = 0;
    for (int p : parts) {
        total += static_cast<unsigned long>(p);
        r *= binomial(total, static_cast<unsigned long>(p));
    }
    return r;
}

inline Rational rational_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_of(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_of(const Integer& num, long den) {
    return rational_of(num, Integer(den));
}

inline Rational abs(const Rational& x) {
    Rational r;
    mpq_abs(r.get_mpq_t(), x.get_mpq_t());
    return r;
}

inline std::string to_decimal(const Integer& x) { return x.get_str(); }

// "num/den", or just "num" when den == 1.
inline std::string to_decimal(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace bderange
