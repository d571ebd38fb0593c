#pragma once

#include <iosfwd>

#include "theta/bigint.hpp"

namespace theta {

// Element of Z/mZ that carries its modulus. Arithmetic between residues of
// different moduli throws rather than coercing; that mixing is the dominant
// bug class in congruence code, so it is an error, not a conversion.
class ResidueClass {
  public:
    // Reduces value into [0, modulus). modulus must be >= 1.
    ResidueClass(BigInt value, BigInt modulus);

    const BigInt& value() const { return value_; }
    const BigInt& modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    ResidueClass& operator+=(const ResidueClass& rhs);
    ResidueClass& operator-=(const ResidueClass& rhs);
    ResidueClass& operator*=(const ResidueClass& rhs);
    ResidueClass operator-() const;

    friend ResidueClass operator+(ResidueClass a, const ResidueClass& b) { return a += b; }
    friend ResidueClass operator-(ResidueClass a, const ResidueClass& b) { return a -= b; }
    friend ResidueClass operator*(ResidueClass a, const ResidueClass& b) { return a *= b; }

    ResidueClass pow(const BigInt& exponent) const;  // exponent >= 0
    ResidueClass inverse() const;                    // throws if gcd(value, modulus) != 1

    // Same-modulus comparison; comparing across moduli throws.
    friend bool operator==(const ResidueClass& a, const ResidueClass& b);
    friend bool operator==(const ResidueClass& a, long b);
    friend bool operator==(long a, const ResidueClass& b) { return b == a; }

  private:
    void require_same_modulus(const ResidueClass& other) const;

    BigInt value_;
    BigInt modulus_;
};

// x mod m reduced into [0, m).
ResidueClass reduce(const BigInt& x, const BigInt& modulus);

std::ostream& operator<<(std::ostream& os, const ResidueClass& r);

}  // namespace theta
