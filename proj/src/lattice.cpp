#include "plumbing/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace plumbing {

IntersectionData intersection_data(const PlumbingGraph& g) {
    validate_tree(g);
    const int n = g.n();
    IntersectionData d;
    d.I = IMat(n, n);
    for (int v = 0; v < n; ++v) {
        if (g.euler[v] >= 0)
            throw NotNegativeDefinite("vertex '" + g.ids[v] + "' has non-negative Euler number");
        d.I.at(v, v) = BigInt(g.euler[v]);
    }
    for (auto [a, b] : g.edges) {
        d.I.at(a, b) = BigInt(1);
        d.I.at(b, a) = BigInt(1);
    }
    IMat negI(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) negI.at(i, j) = -d.I.at(i, j);
    auto minors = leading_principal_minors(negI);
    for (int k = 0; k < n; ++k)
        if (minors[k].sign() <= 0)
            throw NotNegativeDefinite("leading principal minor " + std::to_string(k + 1) +
                                      " of -I is not positive: graph is not negative definite");
    d.det_gamma = minors[n - 1];
    d.I_inv = inverse_exact(d.I);
    return d;
}

bool HClass::operator<(const HClass& o) const {
    return std::lexicographical_compare(r.begin(), r.end(), o.r.begin(), o.r.end());
}

bool HClass::is_zero() const {
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

std::string HClass::str() const {
    std::string out = "(";
    for (size_t i = 0; i < r.size(); ++i) {
        if (i) out += ",";
        out += r[i].str();
    }
    return out + ")";
}

DiscriminantGroup::DiscriminantGroup(const IntersectionData& d) : n_(d.I.rows) {
    SmithForm s = smith_form(d.I);
    U_ = s.U;
    D_ = s.D;
    RMat uinv = inverse_exact(U_);
    Uinv_ = IMat(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (!uinv.at(i, j).is_integer()) throw std::logic_error("Smith transform inverse not integral");
            Uinv_.at(i, j) = uinv.at(i, j).num();
        }
    for (int i = 0; i < n_; ++i) {
        BigInt di = D_.at(i, i).abs();
        if (!di.is_one()) {
            rows_.push_back(i);
            factors_.push_back(di);
        }
    }
}

BigInt DiscriminantGroup::order() const {
    BigInt o(1);
    for (const auto& f : factors_) o *= f;
    return o;
}

HClass DiscriminantGroup::class_of(const IVec& estar) const {
    if (static_cast<int>(estar.size()) != n_) throw std::logic_error("class_of: bad coordinate size");
    HClass h;
    for (size_t k = 0; k < rows_.size(); ++k) {
        BigInt s;
        int i = rows_[k];
        for (int j = 0; j < n_; ++j) s += U_.at(i, j) * estar[j];
        h.r.push_back(BigInt::fmod(s, factors_[k]));
    }
    return h;
}

HClass DiscriminantGroup::zero() const {
    HClass h;
    h.r.assign(factors_.size(), BigInt(0));
    return h;
}

HClass DiscriminantGroup::add(const HClass& a, const HClass& b) const {
    HClass h;
    for (size_t k = 0; k < factors_.size(); ++k) h.r.push_back(BigInt::fmod(a.r[k] + b.r[k], factors_[k]));
    return h;
}

HClass DiscriminantGroup::neg(const HClass& a) const {
    HClass h;
    for (size_t k = 0; k < factors_.size(); ++k) h.r.push_back(BigInt::fmod(-a.r[k], factors_[k]));
    return h;
}

BigInt DiscriminantGroup::element_order(const HClass& a) const {
    BigInt o(1);
    for (size_t k = 0; k < factors_.size(); ++k) {
        // order of a.r[k] in Z_{d_k}
        BigInt d = factors_[k];
        BigInt g = BigInt::gcd(a.r[k], d);
        BigInt ord = g.is_zero() ? BigInt(1) : BigInt::divexact(d, g);
        o = BigInt::lcm(o, ord);
    }
    return o;
}

IVec DiscriminantGroup::lift(const HClass& h) const {
    if (h.r.size() != factors_.size()) throw std::logic_error("lift: bad class size");
    // Solve U y = c where c has the residues at the nontrivial rows, 0 elsewhere.
    IVec c(n_);
    for (size_t k = 0; k < rows_.size(); ++k) c[rows_[k]] = h.r[k];
    return imat_apply(Uinv_, c);
}

std::vector<HClass> DiscriminantGroup::all_classes(long long cap) const {
    BigInt o = order();
    if (!o.fits_ll() || o.to_ll() > cap) throw DomainError("discriminant group too large to enumerate");
    std::vector<HClass> out{zero()};
    for (size_t k = 0; k < factors_.size(); ++k) {
        std::vector<HClass> next;
        long long d = factors_[k].to_ll();
        for (const auto& h : out)
            for (long long v = 0; v < d; ++v) {
                HClass e = h;
                e.r[k] = BigInt(v);
                next.push_back(e);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RVec estar_to_e(const IntersectionData& d, const IVec& estar) {
    RVec y(estar.size());
    for (size_t i = 0; i < estar.size(); ++i) y[i] = Rational(estar[i]);
    return estar_to_e(d, y);
}

RVec estar_to_e(const IntersectionData& d, const RVec& estar) {
    RVec out = rmat_apply(d.I_inv, estar);
    for (auto& x : out) x = -x;
    return out;
}

IVec e_to_estar_integral(const IntersectionData& d, const RVec& e) {
    IVec out(e.size());
    for (int i = 0; i < d.I.rows; ++i) {
        Rational s;
        for (int j = 0; j < d.I.cols; ++j) s += Rational(d.I.at(i, j)) * e[j];
        s = -s;
        if (!s.is_integer()) throw DomainError("vector is not in L' (non-integral E*-coordinates)");
        out[i] = s.num();
    }
    return out;
}

Representative representative(const IntersectionData& d, const DiscriminantGroup& H, const HClass& h) {
    IVec y = H.lift(h);
    RVec z = estar_to_e(d, y);
    Representative r;
    r.e.resize(z.size());
    for (size_t i = 0; i < z.size(); ++i) r.e[i] = z[i].frac();
    r.estar = e_to_estar_integral(d, r.e);
    return r;
}

RVec canonical_class(const PlumbingGraph& g, const IntersectionData& d) {
    // (K, E_v) = -b_v - 2, i.e. I * K_e = (-b - 2).
    const int n = g.n();
    IMat rhs(n, 1);
    for (int v = 0; v < n; ++v) rhs.at(v, 0) = BigInt(-g.euler[v] - 2);
    RMat k = solve_exact(d.I, rhs);
    RVec out(n);
    for (int v = 0; v < n; ++v) out[v] = k.at(v, 0);
    return out;
}

Rational pairing_e(const IntersectionData& d, const RVec& x, const RVec& y) {
    Rational s;
    for (int i = 0; i < d.I.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d.I.cols; ++j) s += x[i] * Rational(d.I.at(i, j)) * y[j];
    }
    return s;
}

}  // namespace plumbing
