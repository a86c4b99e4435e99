#include "plumbing/laurent.hpp"

#include <stdexcept>

namespace plumbing {

LaurentPoly LaurentPoly::monomial(const RVec& e, BigInt coeff) {
    LaurentPoly p;
    p.add_term(e, coeff);
    return p;
}

void LaurentPoly::add_term(const RVec& e, const BigInt& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::mul_monomial(const RVec& e, const BigInt& coeff) const {
    LaurentPoly out;
    if (coeff.is_zero()) return out;
    for (const auto& [te, tc] : terms_) out.terms_.emplace(rvec_add(te, e), tc * coeff);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e, c] : o.terms_) out += mul_monomial(e, c);
    return out;
}

BigInt LaurentPoly::eval_one() const {
    BigInt s;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::truncated(const RVec& cap) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (size_t i = 0; i < e.size() && keep; ++i)
            if (e[i] > cap[i]) keep = false;
        if (keep) out.terms_.emplace(e, c);
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*t^(";
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out += ",";
            out += e[i].str_short();
        }
        out += ")";
    }
    return out;
}

RVec rvec_of(const IVec& v) {
    RVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

RVec rvec_add(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw std::logic_error("rvec_add: size mismatch");
    RVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RVec rvec_sub(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw std::logic_error("rvec_sub: size mismatch");
    RVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

LaurentPoly expand_rational(const RationalSeriesForm& form, const RVec& cap) {
    LaurentPoly total;
    for (const auto& term : form.terms) {
        LaurentPoly cur = term.numerator.mul_monomial(form.offset, BigInt(1)).truncated(cap);
        for (const auto& d : term.denominators) {
            // multiply by 1 + t^d + t^{2d} + ... up to the cap; termination
            // needs strictly positive steps in every coordinate
            RVec dr = rvec_of(d);
            for (const auto& x : dr)
                if (x.sign() <= 0) throw std::logic_error("expand_rational: non-positive denominator direction");
            LaurentPoly acc;
            LaurentPoly layer = cur;
            while (!layer.is_zero()) {
                acc += layer;
                layer = layer.mul_monomial(dr, BigInt(1)).truncated(cap);
            }
            cur = std::move(acc);
        }
        total += cur;
    }
    return total.truncated(cap);
}

}  // namespace plumbing
