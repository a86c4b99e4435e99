#include "plumbing/series.hpp"

#include <functional>

namespace plumbing {

BigInt generalized_binom(long long m, const BigInt& j) {
    if (j.is_negative()) return BigInt(0);
    long long jj = j.to_ll();
    BigInt num(1), den(1);
    for (long long i = 0; i < jj; ++i) {
        num *= BigInt(m - i);
        den *= BigInt(i + 1);
    }
    return BigInt::divexact(num, den);
}

RVec uniform_cap(const Model& m, long long bound) {
    RVec cap(m.num_nodes());
    for (int i = 0; i < m.num_nodes(); ++i) cap[i] = Rational(bound);
    return cap;
}

namespace {

// integer scan range for exponents c + l in [0, cap]
void scan_range(const Model& m, const ReducedLift& a, const RVec& cap, IVec& lo, IVec& hi) {
    const int nn = m.num_nodes();
    lo.assign(nn, BigInt(0));
    hi.assign(nn, BigInt(0));
    for (int i = 0; i < nn; ++i) {
        lo[i] = (-a.c[i]).ceil();
        hi[i] = (cap[i] - a.c[i]).floor();
    }
}

}  // namespace

LaurentPoly expand_Zh_direct(const Model& m, const ReducedLift& a, const RVec& cap) {
    const int nn = m.num_nodes();
    if (nn == 0) throw DomainError("series expansion requires at least one node");
    std::vector<char> in_nhat(nn, 0);
    for (int n : m.cls.nhat) in_nhat[n] = 1;
    IVec lo, hi;
    scan_range(m, a, cap, lo, hi);
    LaurentPoly out;
    for (const auto& ell : lattice_points_in_range(m, a, lo, hi)) {
        BigInt coeff(1);
        bool ok = true;
        for (int n = 0; n < nn && ok; ++n) {
            BigInt nv = N_eval(m, a, ell, n);
            if (nv.is_negative()) {
                ok = false;
                break;
            }
            long long dN = m.cls.delta_nN[n];
            if (in_nhat[n] && nv > BigInt(dN - 2)) {
                ok = false;
                break;
            }
            BigInt b = generalized_binom(dN - 2, nv);
            if (!BigInt::fmod(nv, BigInt(2)).is_zero()) b = -b;
            coeff *= b;
        }
        if (!ok || coeff.is_zero()) continue;
        RVec e(nn);
        for (int i = 0; i < nn; ++i) e[i] = a.c[i] + Rational(ell[i]);
        out.add_term(e, coeff);
    }
    return out;
}

LaurentPoly expand_Zh_alternative(const Model& m, const ReducedLift& a, const RVec& cap) {
    const int nn = m.num_nodes();
    if (nn == 0) throw DomainError("series expansion requires at least one node");
    if (nn == 1) return expand_Zh_direct(m, a, cap);  // one-variable closed formula

    IVec lo, hi;
    scan_range(m, a, cap, lo, hi);
    auto points = lattice_points_in_range(m, a, lo, hi);

    // all k with 0 <= k_n <= delta_{n,N} - 1
    std::vector<IVec> krange;
    IVec k(nn, BigInt(0));
    std::function<void(int)> rec = [&](int idx) {
        if (idx == nn) {
            krange.push_back(k);
            return;
        }
        for (long long v = 0; v + 1 <= m.cls.delta_nN[idx]; ++v) {
            k[idx] = BigInt(v);
            rec(idx + 1);
        }
        k[idx] = BigInt(0);
    };
    rec(0);

    LaurentPoly out;
    for (const auto& kk : krange) {
        BigInt coeff(1);
        for (int n = 0; n < nn; ++n) {
            BigInt b = generalized_binom(m.cls.delta_nN[n] - 1, kk[n]);
            if (!BigInt::fmod(kk[n], BigInt(2)).is_zero()) b = -b;
            coeff *= b;
        }
        if (coeff.is_zero()) continue;
        for (const auto& ell : points) {
            bool member = true;
            for (int n = 0; n < nn && member; ++n)
                if (N_eval(m, a, ell, n) < kk[n]) member = false;
            if (!member) continue;
            RVec e(nn);
            for (int i = 0; i < nn; ++i) e[i] = a.c[i] + Rational(ell[i]);
            out.add_term(e, coeff);
        }
    }
    return out;
}

GeneratorSet generators_for_rational_form(const Model& m, const ReducedLift& a,
                                          const std::string& strategy, const std::vector<IVec>& pinned) {
    std::vector<ReducedLift> lifts;
    for (const auto& k : khat_range(m, 2)) lifts.push_back(lift_minus(m, a, k));
    return choose_generators(m, lifts, 1, strategy, pinned);
}

namespace {

/// One-node graphs: Z_h(t) is quasilinear with period d = lcm(alpha_u); the
/// second difference (1 - t^d)^2 Z_h is a polynomial, recovered from a
/// bounded expansion and returned over the squared denominator.
RationalSeriesForm rational_form_one_node(const Model& m, const ReducedLift& a, const GeneratorSet& gens) {
    BigInt d(1);
    for (const auto& leg : m.legs) d = BigInt::lcm(d, leg.alpha);
    // make N_a(l) exactly linear-plus-periodic beyond L0:
    // N_a >= Nbar_a - |E_n| and Nbar_a = A - e*l
    Rational neg_e = -m.orb.e[0];
    Rational L0r = (Rational(static_cast<long long>(m.legs.size())) - a.A[0]) / neg_e;
    BigInt L0 = L0r.ceil() + BigInt(1);
    BigInt start = (-a.c[0]).ceil();
    if (L0 < start) L0 = start;
    BigInt top = L0 + BigInt(4) * d;

    auto coeff_at = [&](const BigInt& ell) -> BigInt {
        if (ell < start) return BigInt(0);
        IVec l{ell};
        BigInt nv = N_eval(m, a, l, 0);
        if (nv.is_negative()) return BigInt(0);
        return nv + BigInt(1);
    };

    LaurentPoly num;
    BigInt check_from = L0 + BigInt(2) * d;
    for (BigInt ell = start; ell <= top; ell += BigInt(1)) {
        BigInt f = coeff_at(ell) - BigInt(2) * coeff_at(ell - d) + coeff_at(ell - BigInt(2) * d);
        if (f.is_zero()) continue;
        if (ell > check_from) throw std::logic_error("one-node series: second difference not eventually zero");
        num.add_term(RVec{a.c[0] + Rational(ell)}, f);
    }

    RationalSeriesForm form;
    form.offset = RVec{Rational(0)};
    form.generators = gens.v;
    form.strategy = gens.strategy;
    RatTerm term;
    term.numerator = std::move(num);
    term.denominators = {IVec{d}, IVec{d}};
    form.terms.push_back(std::move(term));
    return form;
}

}  // namespace

RationalSeriesForm rational_form(const Model& m, const ReducedLift& a, const GeneratorSet& gens) {
    const int nn = m.num_nodes();
    if (nn == 0) throw DomainError("rational form requires at least one node");
    if (nn == 1) return rational_form_one_node(m, a, gens);

    RationalSeriesForm form;
    form.offset = a.c;
    form.generators = gens.v;
    form.strategy = gens.strategy;

    std::vector<char> in_nhat(nn, 0);
    for (int n : m.cls.nhat) in_nhat[n] = 1;

    // group terms by denominator subset I (N-hat <= I <= N)
    std::vector<int> free_nodes;
    for (int n = 0; n < nn; ++n)
        if (!in_nhat[n]) free_nodes.push_back(n);

    for (long long mask = 0; mask < (1ll << free_nodes.size()); ++mask) {
        std::vector<int> I = m.cls.nhat;
        for (size_t i = 0; i < free_nodes.size(); ++i)
            if (mask & (1ll << i)) I.push_back(free_nodes[i]);
        std::sort(I.begin(), I.end());
        int sign = (I.size() - m.cls.nhat.size()) % 2 ? -1 : 1;

        LaurentPoly num;
        for (const auto& k : khat_range(m, 2)) {
            BigInt ck(sign);
            for (int n : m.cls.nhat) {
                BigInt b = generalized_binom(m.cls.delta_nN[n] - 2, k[n]);
                if (!BigInt::fmod(k[n], BigInt(2)).is_zero()) b = -b;
                ck *= b;
            }
            if (ck.is_zero()) continue;
            for (const auto& ell : graded_holes(m, gens, a, k, I)) num.add_term(rvec_of(ell), ck);
        }
        if (num.is_zero()) continue;
        RatTerm term;
        term.numerator = std::move(num);
        std::vector<char> inI(nn, 0);
        for (int n : I) inI[n] = 1;
        for (int n = 0; n < nn; ++n)
            if (!inI[n]) term.denominators.push_back(gens.v[n]);
        form.terms.push_back(std::move(term));
    }
    return form;
}

}  // namespace plumbing
