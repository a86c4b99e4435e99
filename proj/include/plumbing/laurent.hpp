#pragma once

#include <map>

#include "plumbing/rational.hpp"

namespace plumbing {

/// Laurent polynomial in the node variables with exact rational exponent
/// vectors and integer coefficients. Terms are kept canonically sorted by
/// exponent; zero coefficients are dropped.
class LaurentPoly {
public:
    using Terms = std::map<RVec, BigInt>;

    LaurentPoly() = default;
    static LaurentPoly monomial(const RVec& e, BigInt coeff = BigInt(1));

    void add_term(const RVec& e, const BigInt& coeff);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly mul_monomial(const RVec& e, const BigInt& coeff) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Evaluation at t = 1 (sum of coefficients).
    BigInt eval_one() const;

    /// Drop every term whose exponent exceeds `cap` in some coordinate.
    LaurentPoly truncated(const RVec& cap) const;

    std::string str() const;

private:
    Terms terms_;
};

RVec rvec_of(const IVec& v);
RVec rvec_add(const RVec& a, const RVec& b);
RVec rvec_sub(const RVec& a, const RVec& b);

/// Finite sum of numerator / prod_i (1 - t^{d_i}) terms: the closed form of
/// Z_h and of the Hilbert series of M_a and gr_k M_a. Denominator exponents
/// are integer vectors, listed with multiplicity.
struct RatTerm {
    LaurentPoly numerator;
    std::vector<IVec> denominators;
};

struct RationalSeriesForm {
    std::vector<RatTerm> terms;
    RVec offset;                    // exponent offset applied to numerators (c_a; zero for plain Hilbert forms)
    std::vector<IVec> generators;   // generator vectors in node order
    std::string strategy;
};

/// Exact truncated expansion: multiply numerators by the geometric series of
/// each denominator factor, keeping exponents <= cap componentwise.
LaurentPoly expand_rational(const RationalSeriesForm& form, const RVec& cap);

}  // namespace plumbing
