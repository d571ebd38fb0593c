#include "theta/partitions.hpp"

#include <algorithm>

#include "theta/numtheory.hpp"
#include "theta/sequences.hpp"

namespace theta::parts {

long OddPartition::weight() const {
    long w = 0;
    for (auto [part, count] : mult) w += part * count;
    return w;
}

long OddPartition::count() const {
    long c = 0;
    for (auto [part, count] : mult) c += count;
    return c;
}

long OddPartition::multiplicity(long part) const {
    for (auto [p, count] : mult)
        if (p == part) return count;
    return 0;
}

namespace {

void descend(long part, long weight_left, long parts_left, OddPartition& current,
             std::vector<OddPartition>& out) {
    if (parts_left == 0) {
        if (weight_left == 0) out.push_back(current);
        return;
    }
    // every part is odd and >= 1; prune branches that cannot close
    if (part < 1 || weight_left < parts_left || weight_left > part * parts_left) return;
    long top = std::min(parts_left, weight_left / part);
    for (long c = top; c >= 0; --c) {
        if (c > 0) current.mult.emplace_back(part, c);
        descend(part - 2, weight_left - part * c, parts_left - c, current, out);
        if (c > 0) current.mult.pop_back();
    }
}

}  // namespace

std::vector<OddPartition> enumerate_odd_partitions(long weight, long parts, long max_part) {
    std::vector<OddPartition> out;
    if (weight < 0 || parts < 0) return out;
    long start = (max_part < 0) ? weight : std::min(max_part, weight);
    if (start % 2 == 0) --start;
    OddPartition current;
    descend(start, weight, parts, current, out);
    return out;
}

BigInt n_lambda(const OddPartition& lambda) {
    BigInt denom = 1;
    for (auto [part, count] : lambda.mult)
        denom *= pow_ui(factorial(static_cast<unsigned long>(part)),
                        static_cast<unsigned long>(count)) *
                 factorial(static_cast<unsigned long>(count));
    return divide_exact(factorial(static_cast<unsigned long>(lambda.weight())), denom,
                        "n_lambda: multinomial not integral");
}

BigInt s_oracle(long n, long k, long bound) {
    if (n > bound)
        throw std::invalid_argument("s_oracle: enumeration bound exceeded (oracle-only operation)");
    if (n < 1 || k < 1) throw std::invalid_argument("s_oracle: requires n, k >= 1");
    BigInt total = 0;
    for (const OddPartition& lambda : enumerate_odd_partitions(2 * n, 2 * k)) {
        BigInt term = n_lambda(lambda);
        for (auto [part, count] : lambda.mult)
            term *= pow_ui(seq::u((part - 1) / 2), static_cast<unsigned long>(count));
        total += term;
    }
    return total;
}

long CoreConfig::norm() const {
    long s = 0;
    for (std::size_t j = 0; j < mult.size(); ++j) s += (2 * static_cast<long>(j) + 3) * mult[j];
    return s;
}

long CoreConfig::length() const {
    long s = 0;
    for (long c : mult) s += c;
    return s;
}

namespace {

void extend_config(long p, std::size_t idx, long norm_so_far, CoreConfig& current,
                   std::vector<CoreConfig>& out) {
    if (idx == current.mult.size()) {
        out.push_back(current);
        return;
    }
    long part = 2 * static_cast<long>(idx) + 3;
    for (long c = 0; norm_so_far + part * c < p; ++c) {
        current.mult[idx] = c;
        extend_config(p, idx + 1, norm_so_far + part * c, current, out);
    }
    current.mult[idx] = 0;
}

}  // namespace

std::vector<CoreConfig> enumerate_core_configs(long p) {
    if (p < 5 || p % 2 == 0)
        throw std::invalid_argument("enumerate_core_configs: requires an odd prime p >= 5");
    CoreConfig current;
    current.p = p;
    current.mult.assign(static_cast<std::size_t>((p - 3) / 2), 0);
    std::vector<CoreConfig> out;
    extend_config(p, 0, 0, current, out);
    return out;
}

std::pair<long, long> norm_and_length(const CoreConfig& mu) {
    long n = mu.norm(), l = mu.length();
    check((n - l) % 2 == 0, "norm_and_length: norm - length must be even");
    return {n, l};
}

ResidueClass n_prime_mu(const CoreConfig& mu) {
    const BigInt mod(mu.p);
    ResidueClass num(1, mod), den(1, mod);
    for (std::size_t j = 0; j < mu.mult.size(); ++j) {
        long c = mu.mult[j];
        if (c == 0) continue;
        long i = static_cast<long>(j) + 1;  // part 2i+1, factor u(i)
        num *= reduce(seq::u(i), mod).pow(c);
        den *= reduce(factorial(static_cast<unsigned long>(2 * i + 1)), mod).pow(c);
        den *= reduce(factorial(static_cast<unsigned long>(c)), mod);
    }
    if (den.is_zero())
        throw std::logic_error("n_prime_mu: denominator divisible by p (config out of range)");
    return num * den.inverse();
}

std::optional<long> c_p_of_k(long n, long k, const CoreConfig& mu) {
    auto [norm, length] = norm_and_length(mu);
    long delta = (norm - length) / 2;
    long half = (mu.p - 1) / 2;
    long num = n - k - delta;
    if (num < 0 || num % half != 0) return std::nullopt;
    return num / half;
}

BigInt x_cardinality(long n, long k, long p) {
    if (k < 0) throw std::invalid_argument("x_cardinality: k must be >= 0");
    if (p < 2) throw std::invalid_argument("x_cardinality: p must be a prime >= 2");
    if (n < 0 || p * k > n) return 0;
    BigInt denom = factorial(static_cast<unsigned long>(k)) *
                   factorial(static_cast<unsigned long>(n - p * k)) *
                   pow_ui(BigInt(p), static_cast<unsigned long>(k));
    return divide_exact(factorial(static_cast<unsigned long>(n)), denom,
                        "x_cardinality: count not integral");
}

BigInt frobenius_sum(long n, long p) {
    if (p < 2) throw std::invalid_argument("frobenius_sum: p must be a prime >= 2");
    if (p > n) throw std::invalid_argument("frobenius_sum: requires p <= n");
    BigInt total = 0;
    for (long k = 0; k <= n / p; ++k) total += x_cardinality(n, k, p);
    return total;
}

ResidueClass s_mod_decomposition(long n, long k, long p) {
    if (p % 4 != 1) throw std::invalid_argument("s_mod_decomposition: requires p = 1 (mod 4)");
    const BigInt mod(p);
    const ResidueClass u_half = reduce(seq::u((p - 1) / 2), mod);
    ResidueClass total(0, mod);
    for (const CoreConfig& mu : enumerate_core_configs(p)) {
        std::optional<long> c = c_p_of_k(n, k, mu);
        if (!c) continue;
        long norm = mu.norm();
        if (2 * n - norm < 0) continue;
        ResidueClass term =
            reduce(falling_factorial(BigInt(2 * n), static_cast<unsigned long>(norm)), mod);
        term *= n_prime_mu(mu);
        term *= reduce(x_cardinality(2 * n - norm, *c, p), mod);
        term *= u_half.pow(*c);
        if (*c % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

bool varchange_check(long n, long gamma, long delta, long p) {
    bool zero_case = (gamma == 0 && delta == 0);
    bool range_case = (gamma > 0 && gamma < p && delta > 0 && delta <= (gamma - 1) / 2);
    if (!zero_case && !range_case)
        throw std::invalid_argument("varchange_check: (gamma, delta) outside the admissible set");

    const long letters = 2 * n - gamma;
    BigInt plain = 0;
    for (long k = 0; p * k <= letters; ++k) plain += x_cardinality(letters, k, p);

    BigInt reindexed = 0;
    const long half = (p - 1) / 2;
    long k_lo = (n + p - 1) / p;  // ceil(n / p)
    for (long k = k_lo; k <= n; ++k) {
        long num = n - k - delta;
        if (num % half != 0) continue;
        long cycles = num / half;  // = 2(n - k - delta) / (p - 1)
        if (cycles < 0) continue;
        reindexed += x_cardinality(letters, cycles, p);
    }
    return plain == reindexed;
}

ResidueClass rowsum_check(long n, long l, long p, const series::SMatrix& s) {
    if (p % 4 != 1) throw std::invalid_argument("rowsum_check: requires p = 1 (mod 4)");
    const long half = (p - 1) / 2;
    if (l < 0 || l >= half)
        throw std::invalid_argument("rowsum_check: l must be a residue mod (p-1)/2");
    if (n > s.nmax()) throw std::out_of_range("rowsum_check: SMatrix does not cover n");

    const BigInt mod(p);
    const ResidueClass constant = nt::theorem_constant(static_cast<unsigned long>(p));
    const ResidueClass two(2, mod);
    ResidueClass total(0, mod);
    for (long k = 1; k <= n; ++k) {
        if ((k - l) % half != 0 || k < l) continue;
        ResidueClass term = two.pow(n - k);
        term *= reduce(s.at(n, k), mod);
        term *= constant.pow((k - l) / half);
        total += term;
    }
    return total;
}

}  // namespace theta::parts
