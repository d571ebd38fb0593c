#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace theta {

// All sequence values are exact signed integers; all series coefficients are
// exact fractions. GMP carries both.
using BigInt = mpz_class;
using Rational = mpq_class;

// Always-on invariant check. Unlike assert(), this never compiles away:
// the guarded conditions (exactness of divisions, evenness before halving,
// integrality of extracted coefficients) must fail loudly in every build.
inline void check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// top * (top-1) * ... * (top-count+1); empty product for count = 0.
inline BigInt falling_factorial(const BigInt& top, unsigned long count) {
    BigInt r = 1;
    for (unsigned long i = 0; i < count; ++i) r *= top - static_cast<long>(i);
    return r;
}

// Exact quotient a / b; throws if b does not divide a.
inline BigInt divide_exact(const BigInt& a, const BigInt& b, const char* what) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    check(r == 0, what);
    return q;
}

}  // namespace theta
