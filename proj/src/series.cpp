#include "theta/series.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "theta/cache.hpp"

namespace theta::series {

namespace {

long parity_bit(Parity p) {
    return p == Parity::odd ? 1 : 0;
}

// Largest exponent of the given parity that is <= e; -1 if none.
long clamp_to_parity(long e, Parity p) {
    if (e < parity_bit(p)) return -1;
    return (e - parity_bit(p)) % 2 == 0 ? e : e - 1;
}

}  // namespace

ParitySeries::ParitySeries(Parity parity, std::vector<Rational> coeffs, long truncation,
                           long min_degree)
    : parity_(parity),
      coeffs_(std::move(coeffs)),
      truncation_(truncation),
      min_degree_(min_degree) {
    check(truncation_ >= min_degree_, "ParitySeries: truncation below min degree");
    check((min_degree_ - parity_bit(parity_)) % 2 == 0, "ParitySeries: min degree parity mismatch");
    long stored_max = parity_bit(parity_) + 2 * (static_cast<long>(coeffs_.size()) - 1);
    check(stored_max >= clamp_to_parity(truncation_, parity_),
          "ParitySeries: fewer coefficients than the truncation promises");
}

Rational ParitySeries::coeff(long exponent) const {
    if (exponent < 0) return Rational(0);
    if (exponent > truncation_)
        throw std::out_of_range("ParitySeries::coeff: exponent beyond truncation");
    if ((exponent - parity_bit(parity_)) % 2 != 0) return Rational(0);
    auto j = static_cast<std::size_t>((exponent - parity_bit(parity_)) / 2);
    if (j >= coeffs_.size()) return Rational(0);
    return coeffs_[j];
}

ParitySeries ParitySeries::multiply(const ParitySeries& rhs, long cap) const {
    Parity out_parity =
        (parity_bit(parity_) + parity_bit(rhs.parity_)) % 2 == 1 ? Parity::odd : Parity::even;
    long out_min = min_degree_ + rhs.min_degree_;
    // The unknown tail of one factor first contaminates the product at
    // (first unknown exponent of that factor) + (min degree of the other).
    long first_unknown_lhs = clamp_to_parity(truncation_, parity_) + 2;
    long first_unknown_rhs = clamp_to_parity(rhs.truncation_, rhs.parity_) + 2;
    long out_trunc =
        std::min(first_unknown_lhs + rhs.min_degree_, first_unknown_rhs + min_degree_) - 1;
    if (cap >= 0) out_trunc = std::min(out_trunc, cap);
    out_trunc = clamp_to_parity(out_trunc, out_parity);
    check(out_trunc >= out_min, "ParitySeries::multiply: empty output window");

    long out_terms = (out_trunc - parity_bit(out_parity)) / 2 + 1;
    std::vector<Rational> out(static_cast<std::size_t>(out_terms), Rational(0));
    for (std::size_t ja = 0; ja < coeffs_.size(); ++ja) {
        long ea = parity_bit(parity_) + 2 * static_cast<long>(ja);
        if (ea < min_degree_ || ea + rhs.min_degree_ > out_trunc) continue;
        const Rational& a = coeffs_[ja];
        if (a == 0) continue;
        for (std::size_t jb = 0; jb < rhs.coeffs_.size(); ++jb) {
            long eb = parity_bit(rhs.parity_) + 2 * static_cast<long>(jb);
            if (eb < rhs.min_degree_ || ea + eb > out_trunc) continue;
            const Rational& b = rhs.coeffs_[jb];
            if (b == 0) continue;
            out[static_cast<std::size_t>((ea + eb - parity_bit(out_parity)) / 2)] += a * b;
        }
    }
    return ParitySeries(out_parity, std::move(out), out_trunc, out_min);
}

ParitySeries build_u_series(long nmax) {
    if (nmax < 0) throw std::invalid_argument("build_u_series: nmax must be >= 0");
    seq::u(nmax);  // make sure the table covers the request
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(nmax) + 1);
    for (long j = 0; j <= nmax; ++j) {
        Rational c(seq::u(j));
        c /= Rational(factorial(static_cast<unsigned long>(2 * j + 1)));
        coeffs.push_back(std::move(c));
    }
    return ParitySeries(Parity::odd, std::move(coeffs), 2 * nmax + 1, 1);
}

const BigInt& SMatrix::at(long n, long k) const {
    static const BigInt zero = 0;
    if (n < 1 || n > nmax_ || k < 1)
        throw std::out_of_range("SMatrix::at: index outside the built range");
    if (k > n) return zero;
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
}

SMatrix build_s_matrix(long nmax) {
    if (nmax < 1) throw std::invalid_argument("build_s_matrix: nmax must be >= 1");
    const long window = 2 * nmax;  // coefficients above z^(2 nmax) are never read

    SMatrix s;
    s.nmax_ = nmax;
    s.rows_.resize(static_cast<std::size_t>(nmax));
    for (long n = 1; n <= nmax; ++n)
        s.rows_[static_cast<std::size_t>(n - 1)].resize(static_cast<std::size_t>(n));

    std::vector<BigInt> fact(static_cast<std::size_t>(2 * nmax) + 1);
    for (long i = 0; i <= 2 * nmax; ++i) fact[static_cast<std::size_t>(i)] = factorial(i);

    const ParitySeries u_series = build_u_series(nmax);
    const ParitySeries u_squared = u_series.multiply(u_series, window);

    // Only two series are live at a time: U^2 and the current power U^(2k).
    ParitySeries power = u_squared;
    for (long k = 1; k <= nmax; ++k) {
        if (k > 1) power = power.multiply(u_squared, window);
        for (long n = k; n <= nmax; ++n) {
            Rational entry = power.coeff(2 * n);
            entry *= Rational(fact[static_cast<std::size_t>(2 * n)]);
            entry /= Rational(fact[static_cast<std::size_t>(2 * k)]);
            check(entry.get_den() == 1, "build_s_matrix: non-integral s(n,k)");
            s.rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] =
                entry.get_num();
        }
    }
    return s;
}

void SMatrix::write_csv(std::ostream& os) const {
    os << "n,k,value\n";
    for (long n = 1; n <= nmax_; ++n)
        for (long k = 1; k <= n; ++k) os << n << ',' << k << ',' << at(n, k) << '\n';
}

void SMatrix::save(const std::filesystem::path& path) const {
    std::ostringstream out;
    out << cache::header_line("s") << '\n';
    for (long n = 1; n <= nmax_; ++n)
        for (long k = 1; k <= n; ++k) out << n << ' ' << k << ' ' << at(n, k) << '\n';
    cache::atomic_write_text(path, out.str());
}

SMatrix SMatrix::load(const std::filesystem::path& path) {
    SMatrix s;
    for (const std::string& line : cache::load_lines(path, "s")) {
        std::istringstream fields(line);
        long n = 0, k = 0;
        std::string digits, rest;
        if (!(fields >> n >> k >> digits) || (fields >> rest))
            throw std::runtime_error("cache: bad s record: " + line);
        bool fresh_row = (k == 1 && n == s.nmax_ + 1);
        bool same_row = (n == s.nmax_ && !s.rows_.empty() &&
                         k == static_cast<long>(s.rows_.back().size()) + 1);
        if (!fresh_row && !same_row)
            throw std::runtime_error("cache: s records out of order at: " + line);
        BigInt value;
        if (value.set_str(digits, 10) != 0)
            throw std::runtime_error("cache: bad s value: " + digits);
        if (fresh_row) {
            s.rows_.emplace_back();
            s.nmax_ = n;
        }
        s.rows_.back().push_back(std::move(value));
    }
    if (!s.rows_.empty() && s.rows_.back().size() != static_cast<std::size_t>(s.nmax_))
        throw std::runtime_error("cache: truncated final s row in " + path.string());
    return s;
}

DTable::DTable() {
    values_.emplace_back(1);  // d(0) = v(0) = 1
}

const BigInt& DTable::at(long n) const {
    if (n < 0 || n > high_water())
        throw std::out_of_range("DTable::at: index beyond high water");
    return values_[static_cast<std::size_t>(n)];
}

namespace {

template <typename VFn>
void extend_dtable(std::vector<BigInt>& values, long n, const SMatrix& s, VFn&& v_at) {
    if (n > s.nmax())
        throw std::out_of_range("DTable::ensure: SMatrix does not cover the requested index");
    while (static_cast<long>(values.size()) <= n) {
        const long m = static_cast<long>(values.size());
        BigInt val = v_at(m);
        BigInt term;
        for (long k = 1; k < m; ++k) {
            term = s.at(m, k) * values[static_cast<std::size_t>(k)];
            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(m - k));
            val -= term;
        }
        values.push_back(std::move(val));
    }
}

}  // namespace

void DTable::ensure(long n, const SMatrix& s) {
    extend_dtable(values_, n, s, [](long m) { return seq::v(m); });
}

void DTable::ensure(long n, const SMatrix& s, seq::SequenceTable& vtab) {
    check(vtab.kind() == seq::SequenceTable::Kind::v, "DTable::ensure: table must hold v values");
    vtab.ensure(n);
    extend_dtable(values_, n, s, [&vtab](long m) { return vtab.at(m); });
}

void DTable::write_csv(std::ostream& os) const {
    os << "n,value\n";
    for (long n = 0; n <= high_water(); ++n) os << n << ',' << at(n) << '\n';
}

void DTable::save(const std::filesystem::path& path) const {
    cache::save_values(path, "d", values_);
}

bool DTable::seed_from_cache(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return false;
    try {
        std::vector<BigInt> values = cache::load_values(path, "d");
        if (values.empty() || values[0] != 1) return false;
        if (static_cast<long>(values.size()) - 1 > high_water()) values_ = std::move(values);
        return true;
    } catch (const std::runtime_error&) {
        return false;
    }
}

}  // namespace theta::series
