// theta-taylor: exact u/v/s/d tables for the centered Jacobi theta function
// and machine-checked congruence sweeps over them.
//
// Exit codes: 0 success (including conjecture probes, whatever their data
// says), 2 usage error, 3 counterexample against a proved statement,
// 1 internal error.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "theta/numtheory.hpp"
#include "theta/partitions.hpp"
#include "theta/residue.hpp"
#include "theta/sequences.hpp"
#include "theta/series.hpp"
#include "theta/verify.hpp"

namespace fs = std::filesystem;
using namespace theta;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    std::string cache_dir;
    bool no_cache = false;
    long parallelism = 1;
};

std::optional<fs::path> cache_dir(const Options& opt) {
    if (opt.no_cache) return std::nullopt;
    if (!opt.cache_dir.empty()) return fs::path(opt.cache_dir);
    if (const char* env = std::getenv("THETA_TAYLOR_CACHE")) return fs::path(env);
    return fs::path(".theta-taylor-cache");
}

void require_prime(long p) {
    if (p < 2 || !nt::is_probable_prime(static_cast<unsigned long>(p)))
        throw UsageError("p = " + std::to_string(p) + " is not prime");
}

void require_class(long p, long residue, long modulus, const std::string& claim) {
    require_prime(p);
    if (p % modulus != residue)
        throw UsageError("claim '" + claim + "' needs p = " + std::to_string(residue) + " (mod " +
                         std::to_string(modulus) + "), got p = " + std::to_string(p));
}

std::vector<long> parse_primes(long p, const std::string& primes_csv) {
    std::vector<long> out;
    if (p > 0) out.push_back(p);
    std::stringstream ss(primes_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stol(item));
    if (out.empty()) throw UsageError("give a prime with --p or --primes");
    return out;
}

// ---- shared table loading -------------------------------------------------

series::SMatrix obtain_smatrix(long nmax, const std::optional<fs::path>& dir) {
    fs::path file;
    if (dir) {
        file = *dir / "s.cache";
        if (fs::exists(file)) {
            try {
                series::SMatrix s = series::SMatrix::load(file);
                if (s.nmax() >= nmax) return s;
            } catch (const std::runtime_error&) {
                // unusable cache; rebuild below
            }
        }
    }
    if (nmax > 120)
        std::cerr << "note: building the s-matrix to n = " << nmax
                  << "; cost grows roughly cubically in n\n";
    series::SMatrix s = series::build_s_matrix(nmax);
    if (dir) s.save(file);
    return s;
}

series::DTable obtain_dtable(long nmax, const series::SMatrix& s,
                             const std::optional<fs::path>& dir) {
    series::DTable d;
    if (dir) d.seed_from_cache(*dir / "d.cache");
    d.ensure(nmax, s);
    if (dir) d.save(*dir / "d.cache");
    return d;
}

// ---- seq ------------------------------------------------------------------

void print_values(const std::vector<BigInt>& values, std::optional<long> mod,
                  const std::string& format) {
    const bool csv = format == "csv";
    if (csv) std::cout << "n,value\n";
    for (std::size_t n = 0; n < values.size(); ++n) {
        BigInt shown = values[n];
        if (mod) shown = reduce(shown, BigInt(*mod)).value();
        std::cout << n << (csv ? "," : " ") << shown << '\n';
    }
}

int cmd_seq(const std::string& kind, long nmax, std::optional<long> mod, const Options& opt) {
    if (nmax < 0) throw UsageError("--n must be >= 0");
    if (mod && *mod < 1) throw UsageError("--mod must be >= 1");
    auto dir = cache_dir(opt);

    if (kind == "u" || kind == "v") {
        auto k = kind == "u" ? seq::SequenceTable::Kind::u : seq::SequenceTable::Kind::v;
        seq::SequenceTable table(k);
        fs::path file;
        if (dir) {
            file = *dir / (kind + ".cache");
            table.seed_from_cache(file);
        }
        table.ensure(nmax);
        if (dir) table.save(file);
        std::vector<BigInt> values;
        for (long n = 0; n <= nmax; ++n) values.push_back(table.at(n));
        print_values(values, mod, opt.format);
        return 0;
    }

    if (kind == "d") {
        if (nmax < 1) throw UsageError("seq d needs --n >= 1");
        series::SMatrix s = obtain_smatrix(nmax, dir);
        series::DTable d = obtain_dtable(nmax, s, dir);
        std::vector<BigInt> values;
        for (long n = 0; n <= nmax; ++n) values.push_back(d.at(n));
        print_values(values, mod, opt.format);
        return 0;
    }

    if (kind == "s") {
        if (nmax < 1) throw UsageError("seq s needs --n >= 1");
        series::SMatrix s = obtain_smatrix(nmax, dir);
        const bool csv = opt.format == "csv";
        if (csv) std::cout << "n,k,value\n";
        for (long n = 1; n <= nmax; ++n)
            for (long k = 1; k <= n; ++k) {
                BigInt shown = s.at(n, k);
                if (mod) shown = reduce(shown, BigInt(*mod)).value();
                std::cout << n << (csv ? "," : " ") << k << (csv ? "," : " ") << shown << '\n';
            }
        return 0;
    }

    throw UsageError("unknown sequence kind '" + kind + "' (expected u, v, d, or s)");
}

// ---- verify / conjecture --------------------------------------------------

void emit_reports(const std::vector<verify::CongruenceReport>& reports,
                  const std::string& format) {
    if (format == "csv") {
        std::cout << verify::kReportCsvHeader << '\n';
        for (const auto& r : reports) r.write_csv_row(std::cout);
    } else if (format == "summary") {
        for (const auto& r : reports) r.write_summary(std::cout);
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << '\n';
            reports[i].write_text(std::cout);
        }
    }
}

// Runs one job per prime, at most `parallelism` at a time, preserving input
// order in the output.
std::vector<verify::CongruenceReport> run_jobs(
    const std::vector<long>& primes, long parallelism,
    const std::function<verify::CongruenceReport(long)>& job) {
    std::vector<verify::CongruenceReport> reports(primes.size());
    if (parallelism <= 1 || primes.size() <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) reports[i] = job(primes[i]);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::string error;
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1)) {
            try {
                reports[i] = job(primes[i]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (error.empty()) error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    long want = std::min<long>(parallelism, static_cast<long>(primes.size()));
    for (long t = 0; t < want; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (!error.empty()) throw std::runtime_error(error);
    return reports;
}

int cmd_verify(const std::string& claim, const std::vector<long>& primes, long nmax,
               const Options& opt) {
    if (nmax < 1) throw UsageError("--nmax must be >= 1");
    for (long p : primes) {
        if (claim == "frobenius") {
            require_prime(p);
            if (nmax < p) throw UsageError("frobenius needs nmax >= p");
        } else {
            require_class(p, 1, 4, claim);
        }
        if (claim == "period" && nmax < (p + 1) / 2 + (p - 1) * (p - 1) / 2)
            throw UsageError("period for p = " + std::to_string(p) + " needs nmax >= " +
                             std::to_string((p + 1) / 2 + (p - 1) * (p - 1) / 2));
    }

    auto dir = cache_dir(opt);
    std::optional<series::SMatrix> s;
    std::optional<series::DTable> d;
    if (claim == "theorem" || claim == "period" || claim == "rowsum" || claim == "sdecomp")
        s.emplace(obtain_smatrix(nmax, dir));
    if (claim == "theorem" || claim == "period") d.emplace(obtain_dtable(nmax, *s, dir));
    if (claim == "vanishing") seq::prefetch(nmax);

    auto job = [&](long p) -> verify::CongruenceReport {
        if (claim == "vanishing") return verify::verify_uv_vanishing(p, nmax);
        if (claim == "theorem") return verify::verify_main_theorem(*d, p, nmax);
        if (claim == "period") return verify::verify_period_corollary(*d, p, nmax);
        if (claim == "rowsum") return verify::verify_rowsum(*s, p, nmax);
        if (claim == "frobenius") return verify::verify_frobenius(p, nmax);
        if (claim == "sdecomp") return verify::verify_sdecomp(*s, p, nmax);
        throw UsageError("unknown claim '" + claim +
                         "' (expected vanishing, theorem, period, rowsum, frobenius, or sdecomp)");
    };
    std::vector<verify::CongruenceReport> reports;
    try {
        reports = run_jobs(primes, opt.parallelism, job);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit_reports(reports, opt.format);

    for (const auto& r : reports)
        if (r.status == verify::Status::counterexample) return kExitCounterexample;
    return 0;
}

int cmd_conjecture(const std::string& which, const std::vector<long>& primes, long k, long nmax,
                   const Options& opt) {
    if (nmax < 1) throw UsageError("--nmax must be >= 1");
    if (k < 1) throw UsageError("--k must be >= 1");
    for (long p : primes) {
        require_prime(p);
        if (which == "quarter" && p % 4 != 1)
            throw UsageError("quarter needs p = 1 (mod 4), got " + std::to_string(p));
        if (which == "d-power" && p != 2 && p % 4 != 1)
            throw UsageError("d-power needs p = 1 (mod 4) or p = 2, got " + std::to_string(p));
        if (which == "p3-vanish" && p % 4 != 3)
            throw UsageError("p3-vanish needs p = 3 (mod 4), got " + std::to_string(p));
    }

    auto dir = cache_dir(opt);
    std::optional<series::SMatrix> s;
    std::optional<series::DTable> d;
    if (which != "uv-power") {
        s.emplace(obtain_smatrix(nmax, dir));
        d.emplace(obtain_dtable(nmax, *s, dir));
    } else {
        seq::prefetch(nmax);
    }

    auto job = [&](long p) -> verify::CongruenceReport {
        if (which == "quarter") return verify::conjecture_quarter_period(*d, p, nmax);
        if (which == "uv-power") return verify::conjecture_uv_prime_power(p, k, nmax);
        if (which == "d-power") return verify::conjecture_d_prime_power_period(*d, p, k, nmax);
        if (which == "p3-vanish") return verify::verify_p3mod4_vanishing(*d, p, k, nmax);
        throw UsageError("unknown conjecture probe '" + which +
                         "' (expected quarter, uv-power, d-power, or p3-vanish)");
    };
    std::vector<verify::CongruenceReport> reports;
    try {
        reports = run_jobs(primes, opt.parallelism, job);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit_reports(reports, opt.format);
    return 0;  // conjecture outcomes are data, not process failures
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact Taylor-coefficient tables (u, v, s, d) of the centered Jacobi theta\n"
        "function, plus congruence verification sweeps and conjecture probes"};
    app.require_subcommand(1);

    Options opt;
    std::string kind, claim, which, primes_csv;
    long nmax = 100;  // conservative default; the s-matrix cost grows ~cubically
    long p = 0, k = 1;

    auto add_common = [&](CLI::App* sub, bool with_parallelism) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "text", "summary"}));
        sub->add_option("--cache-dir", opt.cache_dir,
                        "cache directory (default $THETA_TAYLOR_CACHE or .theta-taylor-cache)");
        sub->add_flag("--no-cache", opt.no_cache, "do not read or write caches");
        if (with_parallelism)
            sub->add_option("--parallelism", opt.parallelism, "max concurrent report workers")
                ->check(CLI::PositiveNumber);
    };

    CLI::App* seq_cmd = app.add_subcommand("seq", "print a sequence or matrix, exact or reduced");
    seq_cmd->add_option("kind", kind, "u, v, d, or s")->required();
    seq_cmd->add_option("--n,--nmax", nmax, "largest index to print");
    long mod_value = 0;
    CLI::Option* mod_opt = seq_cmd->add_option("--mod", mod_value, "reduce values mod this");
    add_common(seq_cmd, false);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "sweep a proved congruence statement; exit 3 on a counterexample");
    verify_cmd
        ->add_option("claim", claim, "vanishing, theorem, period, rowsum, frobenius, or sdecomp")
        ->required();
    verify_cmd->add_option("--p", p, "prime to check");
    verify_cmd->add_option("--primes", primes_csv, "comma-separated list of primes");
    verify_cmd->add_option("--nmax,--n", nmax, "sweep bound");
    add_common(verify_cmd, true);

    CLI::App* conj_cmd = app.add_subcommand(
        "conjecture", "probe an open conjecture; outcomes are reported, never fatal");
    conj_cmd->add_option("which", which, "quarter, uv-power, d-power, or p3-vanish")->required();
    conj_cmd->add_option("--p", p, "prime to probe");
    conj_cmd->add_option("--primes", primes_csv, "comma-separated list of primes");
    conj_cmd->add_option("--k", k, "prime-power exponent");
    conj_cmd->add_option("--nmax,--n", nmax, "sweep bound");
    add_common(conj_cmd, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (seq_cmd->parsed()) {
            std::optional<long> mod;
            if (mod_opt->count() > 0) mod = mod_value;
            return cmd_seq(kind, nmax, mod, opt);
        }
        if (verify_cmd->parsed()) return cmd_verify(claim, parse_primes(p, primes_csv), nmax, opt);
        if (conj_cmd->parsed())
            return cmd_conjecture(which, parse_primes(p, primes_csv), k, nmax, opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
