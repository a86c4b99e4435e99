#include "plumbing/bigint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace plumbing {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ull - static_cast<unsigned long long>(v);
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

bool BigInt::is_one() const {
    return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<uint32_t> out;
    out.reserve(hi.size() + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        out.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        if (!ai) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

namespace {

std::vector<uint32_t> shl_bits(const std::vector<uint32_t>& a, unsigned s) {
    if (a.empty() || s == 0) return a;
    std::vector<uint32_t> out(a.size() + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(a[i]) << s;
        out[i] |= static_cast<uint32_t>(v & 0xffffffffu);
        out[i + 1] |= static_cast<uint32_t>(v >> 32);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> shr_bits(const std::vector<uint32_t>& a, unsigned s) {
    if (a.empty() || s == 0) return a;
    std::vector<uint32_t> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] >> s;
        if (i + 1 < a.size()) out[i] |= static_cast<uint32_t>((static_cast<uint64_t>(a[i + 1]) << (32 - s)) & 0xffffffffu);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    unsigned shift = std::countl_zero(b.back());
    std::vector<uint32_t> u = shl_bits(a, shift);
    std::vector<uint32_t> v = shl_bits(b, shift);
    const size_t n = v.size();
    const size_t m = u.size() > n ? u.size() - n : 0;
    u.resize(a.size() + 1 + (shift ? 1 : 0), 0);
    if (u.size() < m + n + 1) u.resize(m + n + 1, 0);
    q.assign(m + 1, 0);

    const uint64_t vtop = v[n - 1];
    const uint64_t vsec = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop;
        uint64_t rhat = num % vtop;
        if (qhat > 0xffffffffu) {
            rhat += vtop * (qhat - 0xffffffffu);
            qhat = 0xffffffffu;
        }
        while (rhat <= 0xffffffffu && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract qhat * v from u[j .. j+n]
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t d = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
            if (d < 0) {
                d += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(d);
        }
        int64_t d = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (d < 0) {
            // qhat was one too large: add v back
            d += static_cast<int64_t>(kBase);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            d += static_cast<int64_t>(c2);
            d &= 0xffffffff;
        }
        u[j + n] = static_cast<uint32_t>(d);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    r = shr_bits(u, shift);
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        limbs_ = add_mag(limbs_, o.limbs_);
        return *this;
    }
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) {
        sign_ = 0;
        limbs_.clear();
    } else if (c > 0) {
        limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
        limbs_ = sub_mag(o.limbs_, limbs_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.sign_ == 0 || b.sign_ == 0) return out;
    out.sign_ = a.sign_ * b.sign_;
    out.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    return out;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.sign_ = a.sign_ * b.sign_;
    r.sign_ = a.sign_;
    q.trim();  // divmod_mag may leave zero limbs when the shift is 0
    r.trim();
}

BigInt BigInt::operator/(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return r;
}

BigInt BigInt::fdiv(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero() && (r.sign() * b.sign() < 0)) q -= BigInt(1);
    return q;
}

BigInt BigInt::fmod(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero() && (r.sign() * b.sign() < 0)) r += b;
    return r;
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt::divexact: not divisible");
    return q;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    return divexact(a * b, gcd(a, b)).abs();
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return sign_ >= 0 ? c : -c;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t m = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return m <= 0x7fffffffffffffffull;
    return m <= 0x8000000000000000ull;
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt::to_ll: out of range");
    uint64_t m = 0;
    if (limbs_.size() > 1) m = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) m |= limbs_[0];
    if (sign_ < 0) return static_cast<long long>(0ull - m);
    return static_cast<long long>(m);
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> rest = limbs_;
    std::vector<uint32_t> chunks;
    while (!rest.empty()) {
        uint64_t rem = 0;
        std::vector<uint32_t> q(rest.size(), 0);
        for (size_t i = rest.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | rest[i];
            q[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        chunks.push_back(static_cast<uint32_t>(rem));
        rest = std::move(q);
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigInt BigInt::from_string(const std::string& s) {
    size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt out;
    BigInt chunk_base(1000000000);
    while (pos < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - pos);
        long long chunk = 0;
        for (size_t i = 0; i < take; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + (c - '0');
        }
        BigInt scale(1);
        for (size_t i = 0; i < take; ++i) scale *= BigInt(10);
        out = out * scale + BigInt(chunk);
        pos += take;
    }
    if (sign < 0) out = -out;
    return out;
}

}  // namespace plumbing
