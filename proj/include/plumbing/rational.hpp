#pragma once

#include <string>
#include <vector>

#include "plumbing/bigint.hpp"

namespace plumbing {

/// Exact rational number: reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);

    static Rational from_string(const std::string& s);  // "p", "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    int compare(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return compare(o) < 0; }
    bool operator<=(const Rational& o) const { return compare(o) <= 0; }
    bool operator>(const Rational& o) const { return compare(o) > 0; }
    bool operator>=(const Rational& o) const { return compare(o) >= 0; }

    BigInt floor() const;
    BigInt ceil() const;
    Rational frac() const;  // x - floor(x), in [0,1)

    /// Canonical form "p/q" with q > 0 and gcd(p,q) = 1.
    std::string str() const;
    /// "p" when integral, "p/q" otherwise.
    std::string str_short() const;

private:
    BigInt num_, den_;
    void reduce();
};

using IVec = std::vector<BigInt>;
using RVec = std::vector<Rational>;

}  // namespace plumbing
