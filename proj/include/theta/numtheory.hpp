#pragma once

#include "theta/bigint.hpp"
#include "theta/residue.hpp"

namespace theta::nt {

// Sum of the base-b digits of n.
unsigned long digit_sum_base(unsigned long n, unsigned long b);

// nu_p(n!), the exponent of the prime p in n!. Evaluated by both the
// digit-sum form (n - s_p(n)) / (p - 1) and the floor-sum over n / p^i;
// the two must agree.
unsigned long factorial_valuation(unsigned long n, unsigned long p);

// C(n, k) exactly; 0 for k < 0 or k > n.
BigInt binomial_exact(unsigned long n, long k);

// C(n, k) mod p via the digit-by-digit product over base-p expansions.
ResidueClass binomial_mod_lucas(unsigned long n, unsigned long k, unsigned long p);

// (2/p) for an odd prime p: +1 iff p = +-1 (mod 8). Cross-checked against
// 2^((p-1)/2) mod p. Throws for p = 2 or even p.
int legendre_symbol_two(unsigned long p);

// Pi(p) = 3^2 7^2 ... (2p-3)^2 = prod_{i=1}^{(p-1)/2} (4i-1)^2.
// Throws unless p = 1 (mod 4).
BigInt pi_product(unsigned long p);

// (-2^((p-1)/2) * Pi(p)) mod p, the multiplier relating d(n + (p-1)/2)
// to d(n). Throws unless p = 1 (mod 4).
ResidueClass theorem_constant(unsigned long p);

// Miller-Rabin guard for CLI input; callers of the functions above are
// expected to pass actual primes.
bool is_probable_prime(unsigned long n);

}  // namespace theta::nt
