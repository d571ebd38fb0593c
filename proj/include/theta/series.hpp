#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "theta/bigint.hpp"
#include "theta/sequences.hpp"

namespace theta::series {

enum class Parity { odd, even };

// Exact truncated power series in z whose terms all share one parity.
// Coefficients at exponents above truncation() are unknown, not zero:
// reading past the truncation throws, and products declare the truncation
// that their inputs can actually support.
class ParitySeries {
  public:
    // coeffs[j] is the coefficient of z^(2j)   (even parity)
    //        or of z^(2j+1) (odd parity).
    ParitySeries(Parity parity, std::vector<Rational> coeffs, long truncation, long min_degree);

    Parity parity() const { return parity_; }
    long truncation() const { return truncation_; }
    long min_degree() const { return min_degree_; }

    // Coefficient of z^exponent. Exponents of the opposite parity are 0;
    // exponents above the truncation throw std::out_of_range.
    Rational coeff(long exponent) const;

    // Exact product. The result's truncation is the largest exponent both
    // inputs can support, optionally clamped to `cap` to bound the work.
    ParitySeries multiply(const ParitySeries& rhs, long cap = -1) const;

  private:
    Parity parity_;
    std::vector<Rational> coeffs_;
    long truncation_;
    long min_degree_;
};

// U(z) = sum_{j=0}^{nmax} u(j)/(2j+1)! z^(2j+1), valid through z^(2 nmax + 1).
ParitySeries build_u_series(long nmax);

// Triangular integer matrix s(n, k) for 1 <= k <= n <= nmax, extracted from
// the even powers of U(z): s(n, k) = (2n)!/(2k)! [z^(2n)] U(z)^(2k).
class SMatrix {
  public:
    long nmax() const { return nmax_; }

    // s(n, k); 0 for k > n. Throws std::out_of_range for n < 1, k < 1, or
    // n > nmax (entries beyond the built range are not zero, just absent).
    const BigInt& at(long n, long k) const;

    void write_csv(std::ostream& os) const;  // header n,k,value
    void save(const std::filesystem::path& path) const;
    static SMatrix load(const std::filesystem::path& path);

    friend SMatrix build_s_matrix(long nmax);

  private:
    long nmax_ = 0;
    std::vector<std::vector<BigInt>> rows_;  // rows_[n-1][k-1], k = 1..n
};

// Builds the matrix by iterated convolution: U^2, then U^(2k) = U^(2k-2) * U^2,
// extracting column k as each power is formed. Every entry is asserted to be
// an exact integer. Cost grows roughly cubically in nmax.
SMatrix build_s_matrix(long nmax);

// Memo table of the Taylor coefficients d(n), built on top of an SMatrix and
// a v-sequence: d(0) = 1, d(n) = v(n) - sum_{k=1}^{n-1} 2^(n-k) s(n,k) d(k).
class DTable {
  public:
    DTable();

    long high_water() const { return static_cast<long>(values_.size()) - 1; }

    // Computed value at n; throws std::out_of_range above high_water().
    const BigInt& at(long n) const;

    // Extends through index n. Throws std::out_of_range if n exceeds
    // s.nmax() (the matrix cannot supply the needed row).
    void ensure(long n, const SMatrix& s);                           // global v(n)
    void ensure(long n, const SMatrix& s, seq::SequenceTable& vtab); // explicit v table

    void write_csv(std::ostream& os) const;  // header n,value
    void save(const std::filesystem::path& path) const;
    bool seed_from_cache(const std::filesystem::path& path);

  private:
    std::vector<BigInt> values_;
};

}  // namespace theta::series
