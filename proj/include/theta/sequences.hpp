#pragma once

#include <deque>
#include <filesystem>

#include "theta/bigint.hpp"

namespace theta::seq {

// prod_{i=1}^{m} (4i-3)^2, the square of 1*5*9*...; empty product is 1.
BigInt odd_product_a(unsigned long m);

// prod_{i=1}^{m} (4i-1)^2, the square of 3*7*11*...; empty product is 1.
BigInt odd_product_b(unsigned long m);

// Dense memo table for one of the two recurrence sequences, indexed from 0
// with value 1 at index 0. Extension is strictly append-only; computed
// entries are never changed, so a table can be grown once and then shared
// read-only between threads. The table itself is not synchronized.
class SequenceTable {
  public:
    enum class Kind { u, v };

    explicit SequenceTable(Kind kind);

    Kind kind() const { return kind_; }
    long high_water() const { return static_cast<long>(values_.size()) - 1; }

    // Value at index n; throws std::out_of_range above high_water().
    const BigInt& at(long n) const;

    // Extends the table through index n via the recurrence.
    void ensure(long n);

    // Cache round-trips store decimal strings, so they are bit-exact across
    // big-integer backends.
    void save(const std::filesystem::path& path) const;
    static SequenceTable load(const std::filesystem::path& path, Kind kind);

    // Loads `path` if it exists and parses cleanly; otherwise leaves the
    // table unchanged. Returns whether the cache was used.
    bool seed_from_cache(const std::filesystem::path& path);

  private:
    void append_next();

    Kind kind_;
    std::deque<BigInt> values_;
    std::deque<BigInt> opa_;  // odd_product_a(0..), grown alongside values_
};

const char* kind_name(SequenceTable::Kind kind);

// Process-global memoized u(n) and v(n). Extension is serialized behind a
// mutex; returned references stay valid for the life of the process.
const BigInt& u(long n);
const BigInt& v(long n);

// Extends both global tables through nmax (the single-threaded precompute
// step before parallel verification sweeps).
void prefetch(long nmax);

}  // namespace theta::seq
