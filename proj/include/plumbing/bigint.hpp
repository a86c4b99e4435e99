#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plumbing {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
/// Every lattice computation in this project must stay exact, so this class
/// is used instead of built-in integers wherever minors, Smith transforms or
/// quadratic forms can grow.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& s) { *this = from_string(s); }

    static BigInt from_string(const std::string& s);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    /// Truncated division (C semantics): a = q*b + r, |r| < |b|, sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    /// Floor division and the matching nonnegative-for-positive-modulus remainder.
    static BigInt fdiv(const BigInt& a, const BigInt& b);
    static BigInt fmod(const BigInt& a, const BigInt& b);

    /// Exact division; throws std::logic_error if b does not divide a.
    static BigInt divexact(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt lcm(const BigInt& a, const BigInt& b);

    int compare(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return compare(o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(o) != 0; }
    bool operator<(const BigInt& o) const { return compare(o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

    bool fits_ll() const;
    long long to_ll() const;  // throws if out of range

    std::string str() const;

private:
    int sign_ = 0;
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zero limbs

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace plumbing
