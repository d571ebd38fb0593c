#include "theta/numtheory.hpp"

namespace theta::nt {

unsigned long digit_sum_base(unsigned long n, unsigned long b) {
    if (b < 2) throw std::invalid_argument("digit_sum_base: base must be >= 2");
    unsigned long s = 0;
    while (n > 0) {
        s += n % b;
        n /= b;
    }
    return s;
}

unsigned long factorial_valuation(unsigned long n, unsigned long p) {
    if (p < 2) throw std::invalid_argument("factorial_valuation: p must be a prime >= 2");
    // digit-sum form
    unsigned long by_digits = (n - digit_sum_base(n, p)) / (p - 1);
    // floor-sum form
    unsigned long by_floors = 0;
    for (unsigned long q = n / p; q > 0; q /= p) by_floors += q;
    check(by_digits == by_floors, "factorial_valuation: digit-sum and floor-sum disagree");
    return by_floors;
}

BigInt binomial_exact(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

ResidueClass binomial_mod_lucas(unsigned long n, unsigned long k, unsigned long p) {
    if (p < 2) throw std::invalid_argument("binomial_mod_lucas: p must be a prime >= 2");
    const BigInt mod(static_cast<long>(p));
    BigInt acc = 1;
    while (n > 0 || k > 0) {
        unsigned long nd = n % p, kd = k % p;
        if (kd > nd) return ResidueClass(0, mod);
        acc = (acc * binomial_exact(nd, static_cast<long>(kd))) % mod;
        n /= p;
        k /= p;
    }
    return ResidueClass(acc, mod);
}

int legendre_symbol_two(unsigned long p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("legendre_symbol_two: p must be an odd prime");
    unsigned long r8 = p % 8;
    int by_case = (r8 == 1 || r8 == 7) ? +1 : -1;
    // Euler's criterion: 2^((p-1)/2) is +-1 mod p
    ResidueClass e = ResidueClass(2, BigInt(static_cast<long>(p))).pow((p - 1) / 2);
    int by_euler = (e.value() == 1) ? +1 : -1;
    check(by_case == by_euler, "legendre_symbol_two: case table disagrees with Euler's criterion");
    return by_case;
}

BigInt pi_product(unsigned long p) {
    if (p % 4 != 1) throw std::invalid_argument("pi_product: requires p = 1 (mod 4)");
    BigInt r = 1;
    for (unsigned long i = 1; i <= (p - 1) / 2; ++i) {
        BigInt f(static_cast<long>(4 * i - 1));
        r *= f * f;
    }
    return r;
}

ResidueClass theorem_constant(unsigned long p) {
    if (p % 4 != 1) throw std::invalid_argument("theorem_constant: requires p = 1 (mod 4)");
    const BigInt mod(static_cast<long>(p));
    ResidueClass pow2 = ResidueClass(2, mod).pow((p - 1) / 2);
    return -(pow2 * reduce(pi_product(p), mod));
}

bool is_probable_prime(unsigned long n) {
    BigInt z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

}  // namespace theta::nt
