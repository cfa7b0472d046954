#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace khtor {

// Signed arbitrary-precision integer, sign-magnitude with base 2^32 limbs.
// Magnitude is little-endian with no leading zero limb; sign() is 0 iff the
// value is zero.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_string(const std::string& s);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if it does not fit
    std::string to_string() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }
    int cmp(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);  // non-negative
    static BigInt pow(const BigInt& base, unsigned long long e);

    // Number of bits in the magnitude (0 for zero).
    size_t bit_length() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

// Exact rational numbers over BigInt; always reduced, denominator > 0.
// Only what polynomial interpolation needs.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    BigRational operator+(const BigRational& o) const;
    BigRational operator-(const BigRational& o) const;
    BigRational operator*(const BigRational& o) const;
    BigRational operator/(const BigRational& o) const;
    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace khtor
