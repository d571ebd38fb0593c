#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "theta/bigint.hpp"
#include "theta/residue.hpp"
#include "theta/series.hpp"

namespace theta::parts {

// Partition of an even weight into an even number of odd parts, stored as
// (part, multiplicity) pairs with parts strictly decreasing.
struct OddPartition {
    std::vector<std::pair<long, long>> mult;

    long weight() const;               // sum of part * count
    long count() const;                // number of parts
    long multiplicity(long part) const;
    bool operator==(const OddPartition&) const = default;
};

// All partitions of `weight` into exactly `parts` odd parts, each part at
// most max_part (-1 for unbounded). Deterministic: largest-part-first
// descent, so the list is in decreasing lexicographic order.
std::vector<OddPartition> enumerate_odd_partitions(long weight, long parts, long max_part = -1);

// N_lambda = w! / prod_i (i!^(c_i) c_i!) for a partition of weight w: the
// number of set partitions of w elements into blocks of the given sizes.
BigInt n_lambda(const OddPartition& lambda);

// s(n, k) by full enumeration over the partitions of 2n into 2k odd parts
// (the expansion sum of N_lambda * prod u((i-1)/2)^(c_i)). Enumeration is
// super-polynomial, so this is a test oracle only: n above `bound` throws.
BigInt s_oracle(long n, long k, long bound = 8);

// Core configuration: multiplicities of the interior odd parts 3, 5, ..., p-2
// subject to the norm constraint 3 c_3 + 5 c_5 + ... + (p-2) c_(p-2) < p.
struct CoreConfig {
    long p = 0;               // prime this configuration lives under
    std::vector<long> mult;   // mult[j] = multiplicity of part 2j+3

    long norm() const;        // weighted sum over parts
    long length() const;      // total multiplicity
    bool operator==(const CoreConfig&) const = default;
};

// All core configurations for an odd prime p >= 5, smallest part varying
// fastest (lexicographic in the tuple), including the all-zero tuple.
std::vector<CoreConfig> enumerate_core_configs(long p);

// (norm, length); checks that their difference is even.
std::pair<long, long> norm_and_length(const CoreConfig& mu);

// N'_mu = prod_i u(i)^(c_(2i+1)) / ((2i+1)!^(c_(2i+1)) c_(2i+1)!) mod p,
// via modular inverses. All denominators are coprime to p for a valid
// configuration; a non-invertible denominator is an internal error.
ResidueClass n_prime_mu(const CoreConfig& mu);

// The multiplicity of the part p forced on a partition with core mu and
// parameters (n, k): (n - k - (norm-length)/2) / ((p-1)/2) when that is a
// nonnegative integer, otherwise nothing.
std::optional<long> c_p_of_k(long n, long k, const CoreConfig& mu);

// Number of permutations of n letters made of k p-cycles and n-pk fixed
// points: n! / (k! (n-pk)! p^k). Zero when pk > n (or n < 0).
BigInt x_cardinality(long n, long k, long p);

// Count of all order-dividing-p elements of the symmetric group on n
// letters, i.e. sum over k of x_cardinality(n, k, p); divisible by p for
// p <= n. Throws for p > n.
BigInt frobenius_sum(long n, long p);

// s(n, k) mod p assembled from core configurations (p = 1 mod 4): each
// admissible configuration contributes
//   (2n)(2n-1)...(2n-norm+1) * N'_mu * (-1)^c * |X_(2n-norm)^c| * u((p-1)/2)^c
// with c the forced multiplicity of the part p.
ResidueClass s_mod_decomposition(long n, long k, long p);

// Checks the re-indexing identity behind the row sums: the plain sum of
// x_cardinality(2n-gamma, k, p) over all k equals the sum over the residue
// class k = delta (mod (p-1)/2) with re-indexed cycle counts. Admissible
// parameters: gamma = delta = 0, or 0 < gamma < p with
// 0 < delta <= floor((gamma-1)/2); anything else throws.
bool varchange_check(long n, long gamma, long delta, long p);

// Weighted row sum over one residue class l mod (p-1)/2:
//   sum_{k = l (mod (p-1)/2)} 2^(n-k) s(n,k) theorem_constant(p)^((k-l)/((p-1)/2))
// reduced mod p; vanishes for n >= (p+1)/2.
ResidueClass rowsum_check(long n, long l, long p, const series::SMatrix& s);

}  // namespace theta::parts
