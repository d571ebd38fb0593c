#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "theta/bigint.hpp"
#include "theta/series.hpp"

namespace theta::verify {

enum class Status { verified, counterexample, inconclusive };

struct Witness {
    long n = 0;
    BigInt lhs;
    BigInt rhs;
};

// Structured outcome of one verification sweep. Conjecture probes never
// report `verified`: a finite scan cannot establish an eventual or
// existential claim, so their best outcome is inconclusive with
// supporting = true.
struct CongruenceReport {
    std::string claim_id;
    long prime = 0;
    BigInt modulus;
    long range_lo = 0;
    long range_hi = 0;
    Status status = Status::inconclusive;
    bool supporting = false;  // refines Status::inconclusive
    std::optional<Witness> witness;
    std::vector<std::string> notes;
    double elapsed_sec = 0.0;

    std::string status_name() const;
    bool same_findings(const CongruenceReport& other) const;  // ignores elapsed

    void write_text(std::ostream& os) const;     // multi-line, versioned header
    void write_summary(std::ostream& os) const;  // one key=value record line
    void write_csv_row(std::ostream& os) const;  // data only, no timing
};

extern const char* const kReportCsvHeader;

// ---- proved statements ---------------------------------------------------

// u(n) = v(n) = 0 (mod p) for (p+1)/2 <= n <= nmax, plus the endpoint
// u((p-1)/2) = Pi(p) (mod p). Requires p = 1 (mod 4).
CongruenceReport verify_uv_vanishing(long p, long nmax);

// d(n + (p-1)/2) = theorem_constant(p) * d(n) (mod p) for
// (p+1)/2 <= n <= nmax - (p-1)/2. Requires p = 1 (mod 4).
CongruenceReport verify_main_theorem(const series::DTable& d, long p, long nmax);

// d(n + (p-1)^2/2) = d(n) (mod p) on the same regime; also reports the
// minimal observed period of d mod p on the checked range. Requires
// nmax >= (p+1)/2 + (p-1)^2/2.
CongruenceReport verify_period_corollary(const series::DTable& d, long p, long nmax);

// Row sums of 2^(n-k) s(n,k) weighted by powers of theorem_constant(p)
// vanish mod p for every residue class l, (p+1)/2 <= n <= nmax.
CongruenceReport verify_rowsum(const series::SMatrix& s, long p, long nmax);

// sum_k |X_n^k| = 0 (mod p) for p <= n <= nmax.
CongruenceReport verify_frobenius(long p, long nmax);

// s_mod_decomposition(n, k, p) equals the exact s(n, k) mod p for
// (p+1)/2 <= n <= nmax, 1 <= k <= n.
CongruenceReport verify_sdecomp(const series::SMatrix& s, long p, long nmax);

// ---- conjecture probes ---------------------------------------------------

// Searches for a constant C with d(n + (p-1)/4) = C d(n) (mod p) on
// (p+1)/2 <= n <= nmax - (p-1)/4; on success records C, checks
// C^2 = theorem_constant(p), and compares C against +-prod(4i-1) and the
// sign against (2/p) without asserting a direction.
CongruenceReport conjecture_quarter_period(const series::DTable& d, long p, long nmax);

// Largest n <= nmax with u(n) != 0 or v(n) != 0 (mod p^k), reported as the
// candidate threshold; supporting when a nonempty all-zero tail follows.
CongruenceReport conjecture_uv_prime_power(long p, long k, long nmax);

// Minimal observed period of the eventual tail of d mod p^k (p = 1 mod 4 or
// p = 2). For p = 2 the stated refinement d(n + 2^k) = d(n) (mod 2^(k+1)) is
// additionally swept and its outcome recorded in the notes.
CongruenceReport conjecture_d_prime_power_period(const series::DTable& d, long p, long k,
                                                 long nmax);

// Largest n <= nmax with d(n) != 0 (mod p^k) for p = 3 (mod 4); supporting
// when the tail beyond it vanishes.
CongruenceReport verify_p3mod4_vanishing(const series::DTable& d, long p, long k, long nmax);

}  // namespace theta::verify
