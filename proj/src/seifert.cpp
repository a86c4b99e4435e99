#include "plumbing/seifert.hpp"

namespace plumbing {

NegCF neg_cf_evaluate(const std::vector<BigInt>& ks) {
    // alpha/omega = k_1 - 1/(k_2 - 1/(...)): evaluate back to front.
    BigInt num(1), den(0);  // empty tail = infinity, so k - 1/inf = k
    for (size_t i = ks.size(); i-- > 0;) {
        BigInt n2 = ks[i] * num - den;
        den = num;
        num = n2;
    }
    return {num, den};
}

std::vector<BigInt> neg_cf_expand(const BigInt& alpha, const BigInt& omega) {
    if (!(BigInt(0) < omega && omega < alpha) || !BigInt::gcd(alpha, omega).is_one())
        throw DomainError("neg_cf_expand: need 0 < omega < alpha with gcd(alpha, omega) = 1");
    std::vector<BigInt> ks;
    BigInt a = alpha, w = omega;
    while (!w.is_zero()) {
        BigInt k = -BigInt::fdiv(-a, w);  // ceil(a/w)
        ks.push_back(k);
        BigInt next = k * w - a;  // a/w = k - 1/(w/(k*w - a))
        a = w;
        w = next;
    }
    return ks;
}

namespace {

BigInt det_of(const PlumbingGraph& g, const std::vector<int>& vs) { return subgraph_det(g, vs); }

std::vector<int> drop_front(const std::vector<int>& v, int k = 1) {
    return {v.begin() + std::min<size_t>(k, v.size()), v.end()};
}
std::vector<int> drop_back(const std::vector<int>& v, int k = 1) {
    return {v.begin(), v.end() - std::min<size_t>(k, v.size())};
}

}  // namespace

std::vector<LegInvariant> leg_invariants(const PlumbingGraph& g, const Classification& c) {
    std::vector<LegInvariant> out;
    for (const auto& leg : c.legs) {
        LegInvariant li;
        li.node_pos = leg.node_pos;
        li.end = leg.end;
        li.alpha = det_of(g, leg.vertices);
        li.omega = det_of(g, drop_front(leg.vertices));
        li.omega_tilde = det_of(g, drop_back(leg.vertices));
        if (!BigInt::gcd(li.alpha, li.omega).is_one())
            throw OrbifoldIdentityViolation("leg Seifert pair not coprime");
        if (!BigInt::fmod(li.omega * li.omega_tilde - BigInt(1), li.alpha).is_zero())
            throw OrbifoldIdentityViolation("omega * omega~ != 1 mod alpha on a leg");
        out.push_back(std::move(li));
    }
    return out;
}

std::vector<ChainInvariant> chain_invariants(const PlumbingGraph& g, const Classification& c) {
    std::vector<ChainInvariant> out;
    for (size_t pi = 0; pi < c.pairs.size(); ++pi) {
        const auto& p = c.pairs[pi];
        ChainInvariant ci;
        ci.pair_index = static_cast<int>(pi);
        if (p.between.empty()) {
            // adjacent nodes: det conventions force alpha = 1, then
            // omega*omega~ = alpha*tau + 1 pins tau = -1 with omega = 0
            ci.alpha = BigInt(1);
            ci.omega_lo_hi = BigInt(0);
            ci.omega_hi_lo = BigInt(0);
            ci.tau = BigInt(-1);
        } else {
            ci.alpha = det_of(g, p.between);
            ci.omega_lo_hi = det_of(g, drop_front(p.between));
            ci.omega_hi_lo = det_of(g, drop_back(p.between));
            BigInt prod = ci.omega_lo_hi * ci.omega_hi_lo - BigInt(1);
            ci.tau = BigInt::divexact(prod, ci.alpha);
            if (p.between.size() >= 2) {
                BigInt interior = det_of(g, drop_back(drop_front(p.between)));
                if (interior != ci.tau)
                    throw OrbifoldIdentityViolation("chain tau does not match interior determinant");
            }
        }
        out.push_back(std::move(ci));
    }
    return out;
}

OrbifoldData orbifold_data(const PlumbingGraph& g, const Classification& c,
                           const IntersectionData& d,
                           const std::vector<LegInvariant>& legs,
                           const std::vector<ChainInvariant>& chains) {
    const int nn = static_cast<int>(c.nodes.size());
    OrbifoldData od;
    od.e.assign(nn, Rational());
    od.Iorb = RMat(nn, nn);
    for (int i = 0; i < nn; ++i) od.e[i] = Rational(BigInt(g.euler[c.nodes[i]]));
    for (const auto& li : legs) od.e[li.node_pos] += Rational(li.omega, li.alpha);
    for (const auto& ch : chains) {
        const auto& p = c.pairs[ch.pair_index];
        od.e[p.lo] += Rational(ch.omega_lo_hi, ch.alpha);
        od.e[p.hi] += Rational(ch.omega_hi_lo, ch.alpha);
        od.Iorb.at(p.lo, p.hi) = Rational(BigInt(1), ch.alpha);
        od.Iorb.at(p.hi, p.lo) = Rational(BigInt(1), ch.alpha);
    }
    for (int i = 0; i < nn; ++i) {
        if (od.e[i].sign() >= 0) throw OrbifoldIdentityViolation("orbifold Euler number e_n >= 0");
        od.Iorb.at(i, i) = od.e[i];
    }

    // clear denominators and invert -I^orb exactly
    BigInt denom(1);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) denom = BigInt::lcm(denom, od.Iorb.at(i, j).den());
    IMat scaled(nn, nn);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            Rational v = -od.Iorb.at(i, j) * Rational(denom);
            scaled.at(i, j) = v.num();
        }
    auto minors = leading_principal_minors(scaled);
    for (const auto& m : minors)
        if (m.sign() <= 0) throw OrbifoldIdentityViolation("-I^orb is not positive definite");
    RMat scaled_inv = inverse_exact(scaled);
    od.neg_Iorb_inv = RMat(nn, nn);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) od.neg_Iorb_inv.at(i, j) = scaled_inv.at(i, j) * Rational(denom);

    // det(-I^orb) = det(scaled) / denom^nn
    BigInt det_scaled = minors.empty() ? BigInt(1) : minors.back();
    BigInt dpow(1);
    for (int i = 0; i < nn; ++i) dpow *= denom;
    Rational det_orb(det_scaled, dpow);
    od.det_neg_Iorb_num = det_orb.num();
    od.det_neg_Iorb_den = det_orb.den();

    // identity: det_Gamma = det(-I^orb) * det_{Gamma \ N}
    std::vector<int> non_nodes;
    for (int v = 0; v < g.n(); ++v)
        if (c.node_pos_of(v) < 0) non_nodes.push_back(v);
    BigInt det_rest = subgraph_det(g, non_nodes);
    if (Rational(d.det_gamma) != det_orb * Rational(det_rest))
        throw OrbifoldIdentityViolation("det_Gamma != det(-I^orb) * det_{Gamma \\ N}");

    // identity: (E*_n, E*_n') = (I^orb)^{-1} entrywise against the lattice inverse
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            Rational lhs = d.I_inv.at(c.nodes[i], c.nodes[j]);
            Rational rhs = -od.neg_Iorb_inv.at(i, j);
            if (lhs != rhs) throw OrbifoldIdentityViolation("(E*_n, E*_n') != (I^orb)^{-1}_{n,n'}");
        }
    return od;
}

}  // namespace plumbing
