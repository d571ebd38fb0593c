#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "theta/numtheory.hpp"
#include "theta/residue.hpp"

using namespace theta;

namespace {

bool is_prime_trial(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("digit_sum_base") {
    CHECK(nt::digit_sum_base(0, 5) == 0);
    CHECK(nt::digit_sum_base(25, 5) == 1);
    CHECK(nt::digit_sum_base(7, 5) == 3);
    CHECK(nt::digit_sum_base(255, 2) == 8);
    CHECK_THROWS_AS(nt::digit_sum_base(10, 1), std::invalid_argument);
}

TEST_CASE("factorial_valuation") {
    CHECK(nt::factorial_valuation(25, 5) == 6);
    CHECK(nt::factorial_valuation(4, 5) == 0);
    CHECK(nt::factorial_valuation(10, 3) == 4);
    CHECK(nt::factorial_valuation(0, 7) == 0);
}

TEST_CASE("factorial_valuation: both formulas agree on a dense sweep") {
    // the digit-sum/floor-sum agreement is asserted inside the function;
    // a throw here would mean the two branches diverged
    for (unsigned long p : {2ul, 3ul, 5ul, 13ul})
        for (unsigned long n = 0; n <= 100000; ++n) (void)nt::factorial_valuation(n, p);
}

TEST_CASE("binomial_exact") {
    CHECK(nt::binomial_exact(3, 1) == 3);
    CHECK(nt::binomial_exact(5, 7) == 0);
    CHECK(nt::binomial_exact(4, 1) == 4);  // C(2n, 2m+1) for (n,m) = (2,0)
    CHECK(nt::binomial_exact(10, -2) == 0);
    CHECK(nt::binomial_exact(0, 0) == 1);
}

TEST_CASE("binomial_mod_lucas: worked digits") {
    CHECK(nt::binomial_mod_lucas(7, 5, 5) == 1);  // (12)_5 over (10)_5
    CHECK(nt::binomial_mod_lucas(7, 2, 5) == 1);  // C(7,2) = 21
    CHECK(nt::binomial_mod_lucas(5, 3, 5) == 0);  // last digit 0 < 3
}

TEST_CASE("binomial_mod_lucas equals exact binomial mod p") {
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul})
        for (unsigned long n = 0; n <= 500; ++n)
            for (unsigned long k = 0; k <= n; ++k) {
                ResidueClass expect =
                    reduce(nt::binomial_exact(n, static_cast<long>(k)), BigInt((long)p));
                REQUIRE(nt::binomial_mod_lucas(n, k, p) == expect);
            }
    // spot checks far beyond the dense triangle
    for (unsigned long p : {3ul, 13ul, 17ul})
        for (unsigned long n : {9973ul, 8192ul})
            for (unsigned long k : {1ul, 371ul, 4986ul, 9973ul}) {
                if (k > n) continue;
                ResidueClass expect =
                    reduce(nt::binomial_exact(n, static_cast<long>(k)), BigInt((long)p));
                CHECK(nt::binomial_mod_lucas(n, k, p) == expect);
            }
}

TEST_CASE("Wilson: (p-1)! = -1 mod p") {
    for (unsigned long p = 2; p < 100; ++p) {
        if (!is_prime_trial(p)) continue;
        ResidueClass f = reduce(factorial(p - 1), BigInt((long)p));
        CHECK(f == ResidueClass(-1, BigInt((long)p)));
    }
}

TEST_CASE("legendre_symbol_two") {
    CHECK(nt::legendre_symbol_two(17) == 1);
    CHECK(nt::legendre_symbol_two(5) == -1);
    CHECK(nt::legendre_symbol_two(13) == -1);
    CHECK_THROWS_AS(nt::legendre_symbol_two(2), std::invalid_argument);
    // the Euler cross-check inside covers every odd prime below 1000
    for (unsigned long p = 3; p < 1000; p += 2)
        if (is_prime_trial(p)) (void)nt::legendre_symbol_two(p);
}

TEST_CASE("pi_product") {
    CHECK(nt::pi_product(5) == 441);
    CHECK(nt::pi_product(13) == BigInt(1514205) * BigInt(1514205));
    CHECK(nt::pi_product(13) == BigInt("2292816782025"));
    CHECK(reduce(nt::pi_product(5), 5) == 1);
    CHECK_THROWS_AS(nt::pi_product(7), std::invalid_argument);
}

TEST_CASE("theorem_constant") {
    CHECK(nt::theorem_constant(5) == 1);
    CHECK(nt::theorem_constant(13) == 3);  // 16 mod 13, the square of 4
    CHECK(nt::theorem_constant(17) == 4);  // the square of -2
    CHECK_THROWS_AS(nt::theorem_constant(7), std::invalid_argument);
}

TEST_CASE("ResidueClass basics") {
    BigInt m(13);
    ResidueClass a(-1, m);
    CHECK(a.value() == 12);
    CHECK(a.modulus() == 13);
    CHECK(a * a == 1);
    CHECK((a + ResidueClass(2, m)) == 1);
    CHECK(ResidueClass(7, m).inverse() == 2);
    CHECK(ResidueClass(2, m).pow(6) == 12);
    CHECK(-ResidueClass(0, m) == 0);
    CHECK_THROWS_AS(ResidueClass(5, BigInt(10)).inverse(), std::domain_error);
    CHECK_THROWS_AS(ResidueClass(1, BigInt(5)) + ResidueClass(1, BigInt(7)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)(ResidueClass(1, BigInt(5)) == ResidueClass(1, BigInt(7))),
                    std::invalid_argument);
    CHECK_THROWS_AS(ResidueClass(1, BigInt(0)), std::invalid_argument);
}

TEST_CASE("is_probable_prime guard") {
    CHECK(nt::is_probable_prime(13));
    CHECK_FALSE(nt::is_probable_prime(1));
    CHECK_FALSE(nt::is_probable_prime(91));
}
