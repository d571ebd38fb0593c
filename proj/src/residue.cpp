#include "theta/residue.hpp"

#include <ostream>
#include <utility>

namespace theta {

namespace {

BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

ResidueClass::ResidueClass(BigInt value, BigInt modulus) : modulus_(std::move(modulus)) {
    if (modulus_ < 1) throw std::invalid_argument("ResidueClass: modulus must be positive");
    value_ = mod_floor(value, modulus_);
}

void ResidueClass::require_same_modulus(const ResidueClass& other) const {
    if (modulus_ != other.modulus_)
        throw std::invalid_argument("ResidueClass: mixed moduli in arithmetic");
}

ResidueClass& ResidueClass::operator+=(const ResidueClass& rhs) {
    require_same_modulus(rhs);
    value_ += rhs.value_;
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
}

ResidueClass& ResidueClass::operator-=(const ResidueClass& rhs) {
    require_same_modulus(rhs);
    value_ -= rhs.value_;
    if (value_ < 0) value_ += modulus_;
    return *this;
}

ResidueClass& ResidueClass::operator*=(const ResidueClass& rhs) {
    require_same_modulus(rhs);
    value_ = mod_floor(value_ * rhs.value_, modulus_);
    return *this;
}

ResidueClass ResidueClass::operator-() const {
    return ResidueClass(-value_, modulus_);
}

ResidueClass ResidueClass::pow(const BigInt& exponent) const {
    if (exponent < 0) throw std::invalid_argument("ResidueClass::pow: negative exponent");
    BigInt r;
    mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), exponent.get_mpz_t(), modulus_.get_mpz_t());
    return ResidueClass(r, modulus_);
}

ResidueClass ResidueClass::inverse() const {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw std::domain_error("ResidueClass::inverse: value not invertible");
    return ResidueClass(r, modulus_);
}

bool operator==(const ResidueClass& a, const ResidueClass& b) {
    a.require_same_modulus(b);
    return a.value_ == b.value_;
}

bool operator==(const ResidueClass& a, long b) {
    return a == ResidueClass(BigInt(b), a.modulus());
}

ResidueClass reduce(const BigInt& x, const BigInt& modulus) {
    return ResidueClass(x, modulus);
}

std::ostream& operator<<(std::ostream& os, const ResidueClass& r) {
    return os << r.value() << " (mod " << r.modulus() << ")";
}

}  // namespace theta
