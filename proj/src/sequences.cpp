#include "theta/sequences.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <vector>

#include "theta/cache.hpp"
#include "theta/numtheory.hpp"

namespace theta::cache {

std::string header_line(std::string_view kind) {
    std::string h(kMagic);
    h += ' ';
    h += kVersion;
    h += " kind=";
    h += kind;
    return h;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("cache: write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

void save_values(const std::filesystem::path& path, std::string_view kind,
                 const std::vector<BigInt>& values) {
    std::ostringstream out;
    out << header_line(kind) << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) out << i << ' ' << values[i] << '\n';
    atomic_write_text(path, out.str());
}

std::vector<std::string> load_lines(const std::filesystem::path& path, std::string_view kind) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cache: cannot open " + path.string());
    std::string header;
    if (!std::getline(in, header) || header != header_line(kind))
        throw std::runtime_error("cache: bad header in " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<BigInt> load_values(const std::filesystem::path& path, std::string_view kind) {
    std::vector<BigInt> values;
    for (const std::string& line : load_lines(path, kind)) {
        std::istringstream fields(line);
        unsigned long index = 0;
        std::string digits;
        if (!(fields >> index >> digits) || index != values.size())
            throw std::runtime_error("cache: bad record in " + path.string() + ": " + line);
        std::string rest;
        if (fields >> rest) throw std::runtime_error("cache: trailing junk in " + path.string());
        BigInt value;
        if (value.set_str(digits, 10) != 0)
            throw std::runtime_error("cache: bad value in " + path.string() + ": " + digits);
        values.push_back(std::move(value));
    }
    return values;
}

}  // namespace theta::cache

namespace theta::seq {

BigInt odd_product_a(unsigned long m) {
    BigInt r = 1;
    for (unsigned long i = 1; i <= m; ++i) {
        BigInt f(static_cast<long>(4 * i - 3));
        r *= f * f;
    }
    return r;
}

BigInt odd_product_b(unsigned long m) {
    BigInt r = 1;
    for (unsigned long i = 1; i <= m; ++i) {
        BigInt f(static_cast<long>(4 * i - 1));
        r *= f * f;
    }
    return r;
}

const char* kind_name(SequenceTable::Kind kind) {
    return kind == SequenceTable::Kind::u ? "u" : "v";
}

SequenceTable::SequenceTable(Kind kind) : kind_(kind) {
    values_.emplace_back(1);  // u(0) = v(0) = 1
    opa_.emplace_back(1);
}

const BigInt& SequenceTable::at(long n) const {
    if (n < 0 || n > high_water())
        throw std::out_of_range("SequenceTable::at: index beyond high water");
    return values_[static_cast<std::size_t>(n)];
}

void SequenceTable::ensure(long n) {
    while (high_water() < n) append_next();
}

void SequenceTable::append_next() {
    const long n = high_water() + 1;
    while (static_cast<long>(opa_.size()) <= n) {
        long m = static_cast<long>(opa_.size());
        BigInt f(4 * m - 3);
        opa_.push_back(opa_.back() * f * f);
    }

    if (kind_ == Kind::u) {
        // u(n) = 3^2 7^2...(4n-1)^2 - sum_{m<n} C(2n+1, 2m+1) 1^2 5^2...(4(n-m)-3)^2 u(m)
        BigInt val = odd_product_b(static_cast<unsigned long>(n));
        for (long m = 0; m < n; ++m) {
            val -= nt::binomial_exact(static_cast<unsigned long>(2 * n + 1), 2 * m + 1) *
                   opa_[static_cast<std::size_t>(n - m)] * values_[static_cast<std::size_t>(m)];
        }
        values_.push_back(std::move(val));
    } else {
        // v(n) = 2^(n-1) 1^2 5^2...(4n-3)^2 - (1/2) sum_{0<m<n} C(2n, 2m) v(m) v(n-m)
        BigInt sum = 0;
        for (long m = 1; m < n; ++m) {
            sum += nt::binomial_exact(static_cast<unsigned long>(2 * n), 2 * m) *
                   values_[static_cast<std::size_t>(m)] * values_[static_cast<std::size_t>(n - m)];
        }
        check(sum % 2 == 0, "v recurrence: symmetric sum is odd");
        BigInt val = opa_[static_cast<std::size_t>(n)];
        mpz_mul_2exp(val.get_mpz_t(), val.get_mpz_t(), static_cast<unsigned long>(n - 1));
        val -= sum / 2;
        values_.push_back(std::move(val));
    }
}

void SequenceTable::save(const std::filesystem::path& path) const {
    cache::save_values(path, kind_name(kind_), {values_.begin(), values_.end()});
}

SequenceTable SequenceTable::load(const std::filesystem::path& path, Kind kind) {
    std::vector<BigInt> values = cache::load_values(path, kind_name(kind));
    if (values.empty() || values[0] != 1)
        throw std::runtime_error("cache: sequence table must start with value 1 at index 0");
    SequenceTable t(kind);
    for (std::size_t i = 1; i < values.size(); ++i) t.values_.push_back(std::move(values[i]));
    return t;
}

bool SequenceTable::seed_from_cache(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return false;
    try {
        SequenceTable loaded = load(path, kind_);
        if (loaded.high_water() > high_water()) *this = std::move(loaded);
        return true;
    } catch (const std::runtime_error&) {
        return false;  // unusable cache; recompute from scratch
    }
}

namespace {

std::mutex g_tables_mutex;

SequenceTable& global_table(SequenceTable::Kind kind) {
    static SequenceTable u_table(SequenceTable::Kind::u);
    static SequenceTable v_table(SequenceTable::Kind::v);
    return kind == SequenceTable::Kind::u ? u_table : v_table;
}

const BigInt& global_at(SequenceTable::Kind kind, long n) {
    std::lock_guard<std::mutex> lock(g_tables_mutex);
    SequenceTable& t = global_table(kind);
    t.ensure(n);
    return t.at(n);  // deque storage: reference survives later extension
}

}  // namespace

const BigInt& u(long n) {
    return global_at(SequenceTable::Kind::u, n);
}

const BigInt& v(long n) {
    return global_at(SequenceTable::Kind::v, n);
}

void prefetch(long nmax) {
    u(nmax);
    v(nmax);
}

}  // namespace theta::seq
