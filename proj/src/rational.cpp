#include "plumbing/rational.hpp"

#include <stdexcept>

namespace plumbing {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = BigInt::divexact(num_, g);
        den_ = BigInt::divexact(den_, g);
    }
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

int Rational::compare(const Rational& o) const {
    return (num_ * o.den_).compare(o.num_ * den_);
}

BigInt Rational::floor() const { return BigInt::fdiv(num_, den_); }

BigInt Rational::ceil() const { return -BigInt::fdiv(-num_, den_); }

Rational Rational::frac() const {
    return Rational(BigInt::fmod(num_, den_), den_);
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

std::string Rational::str_short() const {
    if (is_integer()) return num_.str();
    return str();
}

}  // namespace plumbing
