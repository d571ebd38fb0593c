#include "theta/verify.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

#include "theta/numtheory.hpp"
#include "theta/partitions.hpp"
#include "theta/residue.hpp"
#include "theta/sequences.hpp"

namespace theta::verify {

namespace {

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

  private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
};

void require_1mod4(long p, const char* who) {
    if (p % 4 != 1) throw std::invalid_argument(std::string(who) + ": requires p = 1 (mod 4)");
}

void require_dtable(const series::DTable& d, long nmax, const char* who) {
    if (d.high_water() < nmax)
        throw std::out_of_range(std::string(who) + ": DTable not precomputed through nmax");
}

// a sweep over an empty range would read as vacuously verified
void require_nonempty(long lo, long hi, const char* who) {
    if (hi < lo)
        throw std::invalid_argument(std::string(who) + ": nmax leaves nothing to check");
}

std::string note(const char* key, const std::string& value) {
    return std::string(key) + "=" + value;
}

std::string to_string(const BigInt& x) {
    return x.get_str();
}

// Minimal T >= 1 with values(n + T) == values(n) for all n in [lo, hi - T],
// where lo may float up to the latest violation (eventual tail) when
// fixed_lo is false. Accepts T only when at least T consecutive
// confirmations remain. Returns (T, tail_start).
std::optional<std::pair<long, long>> minimal_tail_period(
    const std::function<BigInt(long)>& value, long lo, long hi, bool fixed_lo) {
    for (long T = 1; 2 * T <= hi - lo + 1; ++T) {
        long last_bad = lo - 1;
        for (long n = lo; n + T <= hi; ++n)
            if (value(n + T) != value(n)) last_bad = n;
        if (fixed_lo && last_bad >= lo) continue;
        long tail_start = last_bad + 1;
        long confirmed = hi - T - tail_start + 1;
        if (confirmed >= T) return std::make_pair(T, tail_start);
    }
    return std::nullopt;
}

}  // namespace

std::string CongruenceReport::status_name() const {
    switch (status) {
        case Status::verified: return "verified";
        case Status::counterexample: return "counterexample";
        case Status::inconclusive: return supporting ? "inconclusive-supporting" : "inconclusive";
    }
    return "unknown";
}

bool CongruenceReport::same_findings(const CongruenceReport& other) const {
    bool witness_equal = witness.has_value() == other.witness.has_value() &&
                         (!witness || (witness->n == other.witness->n &&
                                       witness->lhs == other.witness->lhs &&
                                       witness->rhs == other.witness->rhs));
    return claim_id == other.claim_id && prime == other.prime && modulus == other.modulus &&
           range_lo == other.range_lo && range_hi == other.range_hi && status == other.status &&
           supporting == other.supporting && witness_equal && notes == other.notes;
}

void CongruenceReport::write_text(std::ostream& os) const {
    os << "theta-taylor-report v1\n";
    os << "claim: " << claim_id << '\n';
    os << "p: " << prime << '\n';
    os << "modulus: " << modulus << '\n';
    os << "range: " << range_lo << ".." << range_hi << '\n';
    os << "status: " << status_name() << '\n';
    if (witness)
        os << "witness: n=" << witness->n << " lhs=" << witness->lhs << " rhs=" << witness->rhs
           << '\n';
    for (const std::string& n : notes) os << "note: " << n << '\n';
    os << "elapsed_ms: " << elapsed_sec * 1e3 << '\n';
}

void CongruenceReport::write_summary(std::ostream& os) const {
    os << "claim=" << claim_id << " p=" << prime << " modulus=" << modulus << " lo=" << range_lo
       << " hi=" << range_hi << " status=" << status_name();
    if (witness)
        os << " witness_n=" << witness->n << " witness_lhs=" << witness->lhs
           << " witness_rhs=" << witness->rhs;
    if (!notes.empty()) {
        os << " notes=\"";
        for (std::size_t i = 0; i < notes.size(); ++i) os << (i ? "; " : "") << notes[i];
        os << '"';
    }
    os << " elapsed_ms=" << elapsed_sec * 1e3 << '\n';
}

const char* const kReportCsvHeader = "claim,p,modulus,lo,hi,status,witness_n,witness_lhs,witness_rhs";

void CongruenceReport::write_csv_row(std::ostream& os) const {
    os << claim_id << ',' << prime << ',' << modulus << ',' << range_lo << ',' << range_hi << ','
       << status_name() << ',';
    if (witness)
        os << witness->n << ',' << witness->lhs << ',' << witness->rhs;
    else
        os << ",,";
    os << '\n';
}

CongruenceReport verify_uv_vanishing(long p, long nmax) {
    require_1mod4(p, "verify_uv_vanishing");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "uv-vanishing";
    r.prime = p;
    r.modulus = p;
    r.range_lo = (p + 1) / 2;
    r.range_hi = nmax;
    require_nonempty(r.range_lo, r.range_hi, "verify_uv_vanishing");
    r.status = Status::verified;

    const BigInt mod(p);
    seq::prefetch(nmax);
    for (long n = r.range_lo; n <= nmax && r.status == Status::verified; ++n) {
        if (!reduce(seq::u(n), mod).is_zero()) {
            r.status = Status::counterexample;
            r.witness = Witness{n, reduce(seq::u(n), mod).value(), 0};
            r.notes.push_back("u(n) fails to vanish");
        } else if (!reduce(seq::v(n), mod).is_zero()) {
            r.status = Status::counterexample;
            r.witness = Witness{n, reduce(seq::v(n), mod).value(), 0};
            r.notes.push_back("v(n) fails to vanish");
        }
    }
    if (r.status == Status::verified) {
        ResidueClass endpoint = reduce(seq::u((p - 1) / 2), BigInt(p));
        ResidueClass expected = reduce(nt::pi_product(static_cast<unsigned long>(p)), BigInt(p));
        if (endpoint == expected) {
            r.notes.push_back(note("endpoint", "u((p-1)/2) = Pi(p) holds"));
        } else {
            r.status = Status::counterexample;
            r.witness = Witness{(p - 1) / 2, endpoint.value(), expected.value()};
            r.notes.push_back(note("endpoint", "u((p-1)/2) != Pi(p)"));
        }
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport verify_main_theorem(const series::DTable& d, long p, long nmax) {
    require_1mod4(p, "verify_main_theorem");
    require_dtable(d, nmax, "verify_main_theorem");
    Stopwatch timer;
    const long shift = (p - 1) / 2;
    CongruenceReport r;
    r.claim_id = "main-theorem";
    r.prime = p;
    r.modulus = p;
    r.range_lo = (p + 1) / 2;
    r.range_hi = nmax - shift;
    require_nonempty(r.range_lo, r.range_hi, "verify_main_theorem");
    r.status = Status::verified;

    const BigInt mod(p);
    const ResidueClass constant = nt::theorem_constant(static_cast<unsigned long>(p));
    r.notes.push_back(note("constant", to_string(constant.value())));
    for (long n = r.range_lo; n <= r.range_hi; ++n) {
        ResidueClass lhs = reduce(d.at(n + shift), mod);
        ResidueClass rhs = constant * reduce(d.at(n), mod);
        if (!(lhs == rhs)) {
            r.status = Status::counterexample;
            r.witness = Witness{n, lhs.value(), rhs.value()};
            break;
        }
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport verify_period_corollary(const series::DTable& d, long p, long nmax) {
    require_1mod4(p, "verify_period_corollary");
    const long period = (p - 1) * (p - 1) / 2;
    const long lo = (p + 1) / 2;
    if (nmax < lo + period)
        throw std::invalid_argument(
            "verify_period_corollary: nmax too small to cover one full period");
    require_dtable(d, nmax, "verify_period_corollary");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "period-corollary";
    r.prime = p;
    r.modulus = p;
    r.range_lo = lo;
    r.range_hi = nmax - period;
    r.status = Status::verified;

    const BigInt mod(p);
    for (long n = lo; n <= nmax - period; ++n) {
        ResidueClass lhs = reduce(d.at(n + period), mod);
        ResidueClass rhs = reduce(d.at(n), mod);
        if (!(lhs == rhs)) {
            r.status = Status::counterexample;
            r.witness = Witness{n, lhs.value(), rhs.value()};
            break;
        }
    }
    r.notes.push_back(note("stated_period", std::to_string(period)));
    auto observed = minimal_tail_period(
        [&](long n) { return reduce(d.at(n), mod).value(); }, lo, nmax, /*fixed_lo=*/true);
    if (observed)
        r.notes.push_back(note("minimal_observed_period", std::to_string(observed->first)));
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport verify_rowsum(const series::SMatrix& s, long p, long nmax) {
    require_1mod4(p, "verify_rowsum");
    if (nmax > s.nmax())
        throw std::out_of_range("verify_rowsum: SMatrix not precomputed through nmax");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "rowsum-vanishing";
    r.prime = p;
    r.modulus = p;
    r.range_lo = (p + 1) / 2;
    r.range_hi = nmax;
    require_nonempty(r.range_lo, r.range_hi, "verify_rowsum");
    r.status = Status::verified;

    const long half = (p - 1) / 2;
    for (long n = r.range_lo; n <= nmax && r.status == Status::verified; ++n) {
        for (long l = 0; l < half; ++l) {
            ResidueClass sum = parts::rowsum_check(n, l, p, s);
            if (!sum.is_zero()) {
                r.status = Status::counterexample;
                r.witness = Witness{n, sum.value(), 0};
                r.notes.push_back(note("residue_class_l", std::to_string(l)));
                break;
            }
        }
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport verify_frobenius(long p, long nmax) {
    if (p < 2) throw std::invalid_argument("verify_frobenius: p must be a prime");
    if (nmax < p) throw std::invalid_argument("verify_frobenius: requires nmax >= p");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "frobenius-multiple";
    r.prime = p;
    r.modulus = p;
    r.range_lo = p;
    r.range_hi = nmax;
    r.status = Status::verified;

    const BigInt mod(p);
    for (long n = p; n <= nmax; ++n) {
        ResidueClass residue = reduce(parts::frobenius_sum(n, p), mod);
        if (!residue.is_zero()) {
            r.status = Status::counterexample;
            r.witness = Witness{n, residue.value(), 0};
            break;
        }
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport verify_sdecomp(const series::SMatrix& s, long p, long nmax) {
    require_1mod4(p, "verify_sdecomp");
    if (nmax > s.nmax())
        throw std::out_of_range("verify_sdecomp: SMatrix not precomputed through nmax");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "s-decomposition";
    r.prime = p;
    r.modulus = p;
    r.range_lo = (p + 1) / 2;
    r.range_hi = nmax;
    require_nonempty(r.range_lo, r.range_hi, "verify_sdecomp");
    r.status = Status::verified;

    const BigInt mod(p);
    for (long n = r.range_lo; n <= nmax && r.status == Status::verified; ++n) {
        for (long k = 1; k <= n; ++k) {
            ResidueClass lhs = parts::s_mod_decomposition(n, k, p);
            ResidueClass rhs = reduce(s.at(n, k), mod);
            if (!(lhs == rhs)) {
                r.status = Status::counterexample;
                r.witness = Witness{n, lhs.value(), rhs.value()};
                r.notes.push_back(note("k", std::to_string(k)));
                break;
            }
        }
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport conjecture_quarter_period(const series::DTable& d, long p, long nmax) {
    // (p-1)/4 is an integer exactly when p = 1 (mod 4), so that congruence
    // class is the whole precondition.
    require_1mod4(p, "conjecture_quarter_period");
    require_dtable(d, nmax, "conjecture_quarter_period");
    Stopwatch timer;
    const long shift = (p - 1) / 4;
    CongruenceReport r;
    r.claim_id = "quarter-period";
    r.prime = p;
    r.modulus = p;
    r.range_lo = (p + 1) / 2;
    r.range_hi = nmax - shift;
    require_nonempty(r.range_lo, r.range_hi, "conjecture_quarter_period");
    r.notes.push_back(note("shift", std::to_string(shift)));

    const BigInt mod(p);
    std::optional<ResidueClass> constant;
    for (long n = r.range_lo; n <= r.range_hi; ++n) {
        ResidueClass dn = reduce(d.at(n), mod);
        if (!dn.is_zero()) {
            constant = reduce(d.at(n + shift), mod) * dn.inverse();
            break;
        }
    }
    if (!constant) {
        r.status = Status::inconclusive;
        r.notes.push_back("d(n) vanishes identically on the range; no constant recoverable");
        r.elapsed_sec = timer.seconds();
        return r;
    }

    r.status = Status::inconclusive;
    r.supporting = true;
    for (long n = r.range_lo; n <= r.range_hi; ++n) {
        ResidueClass lhs = reduce(d.at(n + shift), mod);
        ResidueClass rhs = *constant * reduce(d.at(n), mod);
        if (!(lhs == rhs)) {
            r.status = Status::counterexample;
            r.supporting = false;
            r.witness = Witness{n, lhs.value(), rhs.value()};
            break;
        }
    }
    r.notes.push_back(note("C", to_string(constant->value())));
    if (r.status != Status::counterexample) {
        ResidueClass csq = *constant * *constant;
        r.notes.push_back(note("C_squared_matches_theorem_constant",
                               csq == nt::theorem_constant(static_cast<unsigned long>(p))
                                   ? "yes"
                                   : "no"));
        ResidueClass prod(1, mod);
        for (long i = 1; i <= (p - 1) / 2; ++i) prod *= ResidueClass(4 * i - 1, mod);
        std::string match = "none";
        if (*constant == prod)
            match = "+";
        else if (*constant == -prod)
            match = "-";
        r.notes.push_back(note("candidate_product", to_string(prod.value())));
        r.notes.push_back(note("matches_candidate_sign", match));
        r.notes.push_back(
            note("legendre_2_p",
                 nt::legendre_symbol_two(static_cast<unsigned long>(p)) > 0 ? "+1" : "-1"));
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport conjecture_uv_prime_power(long p, long k, long nmax) {
    if (p < 2) throw std::invalid_argument("conjecture_uv_prime_power: p must be a prime");
    if (k < 1) throw std::invalid_argument("conjecture_uv_prime_power: requires k >= 1");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "uv-prime-power";
    r.prime = p;
    r.modulus = pow_ui(BigInt(p), static_cast<unsigned long>(k));
    r.range_lo = 0;
    r.range_hi = nmax;
    require_nonempty(r.range_lo, r.range_hi, "conjecture_uv_prime_power");
    r.status = Status::inconclusive;

    seq::prefetch(nmax);
    long candidate = -1;
    for (long n = 0; n <= nmax; ++n)
        if (!reduce(seq::u(n), r.modulus).is_zero() || !reduce(seq::v(n), r.modulus).is_zero())
            candidate = n;
    if (candidate < 0) {
        // cannot happen for k >= 1 (u(0) = v(0) = 1), but keep the report honest
        r.notes.push_back("u and v vanish on the whole range");
    } else {
        r.notes.push_back(note("candidate_threshold", std::to_string(candidate)));
        r.notes.push_back(note("zero_tail_length", std::to_string(nmax - candidate)));
        r.supporting = candidate < nmax;
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport conjecture_d_prime_power_period(const series::DTable& d, long p, long k,
                                                 long nmax) {
    if (p != 2 && p % 4 != 1)
        throw std::invalid_argument(
            "conjecture_d_prime_power_period: requires p = 1 (mod 4) or p = 2");
    if (k < 1) throw std::invalid_argument("conjecture_d_prime_power_period: requires k >= 1");
    require_dtable(d, nmax, "conjecture_d_prime_power_period");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "d-prime-power-period";
    r.prime = p;
    r.modulus = pow_ui(BigInt(p), static_cast<unsigned long>(k));
    r.range_lo = 0;
    r.range_hi = nmax;
    require_nonempty(r.range_lo, r.range_hi, "conjecture_d_prime_power_period");
    r.status = Status::inconclusive;

    auto observed = minimal_tail_period(
        [&](long n) { return reduce(d.at(n), r.modulus).value(); }, 0, nmax, /*fixed_lo=*/false);
    if (observed) {
        r.supporting = true;
        r.notes.push_back(note("minimal_observed_period", std::to_string(observed->first)));
        r.notes.push_back(note("tail_start", std::to_string(observed->second)));
    } else {
        r.notes.push_back("no period visible within the scanned range");
    }

    if (p == 2) {
        // stated refinement: shift 2^k modulo 2^(k+1)
        const BigInt mod2 = pow_ui(BigInt(2), static_cast<unsigned long>(k + 1));
        const long shift = 1L << k;
        std::optional<Witness> bad;
        for (long n = 0; n + shift <= nmax; ++n) {
            ResidueClass lhs = reduce(d.at(n + shift), mod2);
            ResidueClass rhs = reduce(d.at(n), mod2);
            if (!(lhs == rhs)) {
                bad = Witness{n, lhs.value(), rhs.value()};
                break;
            }
        }
        std::ostringstream what;
        what << "refinement d(n+" << shift << ") = d(n) (mod " << mod2 << "): ";
        if (bad)
            what << "counterexample at n=" << bad->n << " (" << bad->lhs << " vs " << bad->rhs
                 << ")";
        else
            what << "holds for 0 <= n <= " << nmax - shift;
        r.notes.push_back(what.str());
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

CongruenceReport verify_p3mod4_vanishing(const series::DTable& d, long p, long k, long nmax) {
    if (p % 4 != 3)
        throw std::invalid_argument("verify_p3mod4_vanishing: requires p = 3 (mod 4)");
    if (k < 1) throw std::invalid_argument("verify_p3mod4_vanishing: requires k >= 1");
    require_dtable(d, nmax, "verify_p3mod4_vanishing");
    Stopwatch timer;
    CongruenceReport r;
    r.claim_id = "p3mod4-vanishing";
    r.prime = p;
    r.modulus = pow_ui(BigInt(p), static_cast<unsigned long>(k));
    r.range_lo = 0;
    r.range_hi = nmax;
    require_nonempty(r.range_lo, r.range_hi, "verify_p3mod4_vanishing");
    r.status = Status::inconclusive;

    long candidate = -1;
    for (long n = 0; n <= nmax; ++n)
        if (!reduce(d.at(n), r.modulus).is_zero()) candidate = n;
    if (candidate < 0) {
        r.notes.push_back("d vanishes on the whole range");
    } else {
        r.notes.push_back(note("candidate_threshold", std::to_string(candidate)));
        r.notes.push_back(note("zero_tail_length", std::to_string(nmax - candidate)));
        r.supporting = candidate < nmax;
    }
    r.elapsed_sec = timer.seconds();
    return r;
}

}  // namespace theta::verify
