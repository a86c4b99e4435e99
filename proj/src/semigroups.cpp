#include "plumbing/semigroups.hpp"

#include <functional>

#include <algorithm>
#include <numeric>
#include <set>

#include "plumbing/lifts.hpp"
#include "plumbing/monoid.hpp"

namespace plumbing {

bool NumericalSemigroup::contains(long long x) const {
    if (x < 0) return false;
    if (x <= bound) return member[static_cast<size_t>(x)];
    return true;  // beyond the table everything is a member
}

std::vector<long long> NumericalSemigroup::gaps() const {
    std::vector<long long> out;
    for (long long x = 1; x <= bound; ++x)
        if (!member[static_cast<size_t>(x)]) out.push_back(x);
    return out;
}

long long NumericalSemigroup::frobenius() const {
    auto g = gaps();
    return g.empty() ? -1 : g.back();
}

std::vector<long long> NumericalSemigroup::min_generators() const {
    std::vector<long long> out;
    long long top = conductor();
    long long mult = 0;
    for (long long x = 1; x <= bound; ++x)
        if (member[static_cast<size_t>(x)]) {
            mult = x;
            break;
        }
    if (mult == 0) return out;
    top += mult;
    for (long long x = 1; x <= std::min(bound, top); ++x) {
        if (!member[static_cast<size_t>(x)]) continue;
        bool decomposable = false;
        for (long long y = mult; y <= x - mult && !decomposable; ++y)
            if (contains(y) && contains(x - y)) decomposable = true;
        if (!decomposable) out.push_back(x);
    }
    return out;
}

namespace {

long long mod_inverse_ll(long long a, long long mod) {
    long long old_r = ((a % mod) + mod) % mod, r = mod;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw DomainError("moduli are not coprime");
    return ((old_s % mod) + mod) % mod;
}

NumericalSemigroup table_from_predicate(long long bound, const std::function<bool(long long)>& pred) {
    // grow the table until the top half is solid, so every gap is captured
    for (;; bound *= 2) {
        if (bound > (1ll << 24)) throw DomainError("semigroup scan bound exploded");
        NumericalSemigroup sg;
        sg.bound = bound;
        sg.member.assign(static_cast<size_t>(bound) + 1, 0);
        for (long long x = 0; x <= bound; ++x) sg.member[static_cast<size_t>(x)] = pred(x) ? 1 : 0;
        if (!sg.member[0]) throw std::logic_error("numerical semigroup must contain 0");
        bool solid = true;
        for (long long x = bound / 2 + 1; x <= bound && solid; ++x)
            if (!sg.member[static_cast<size_t>(x)]) solid = false;
        if (solid) return sg;
    }
}

}  // namespace

SeifertSolution seifert_diophantine(const std::vector<long long>& alphas) {
    if (alphas.size() < 2) throw DomainError("need at least two Seifert multiplicities");
    for (size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] <= 1) throw DomainError("Seifert multiplicities must exceed 1");
        for (size_t j = i + 1; j < alphas.size(); ++j)
            if (std::gcd(alphas[i], alphas[j]) != 1)
                throw DomainError("Seifert multiplicities must be pairwise coprime");
    }
    SeifertSolution sol;
    long long prod = 1;
    for (long long a : alphas) prod *= a;
    long long sum = 0;
    for (size_t i = 0; i < alphas.size(); ++i) {
        long long others = prod / alphas[i];
        long long w = ((-mod_inverse_ll(others % alphas[i], alphas[i])) % alphas[i] + alphas[i]) % alphas[i];
        if (w == 0) throw std::logic_error("seifert_diophantine: omega out of range");
        sol.omegas.push_back(w);
        sum += w * others;
    }
    if ((-1 - sum) % prod != 0) throw std::logic_error("seifert_diophantine: no integral b0");
    sol.b0 = (-1 - sum) / prod;
    return sol;
}

NumericalSemigroup seifert_semigroup(const std::vector<long long>& alphas) {
    SeifertSolution sol = seifert_diophantine(alphas);
    long long prod = 1;
    for (long long a : alphas) prod *= a;
    auto pred = [&](long long l) {
        long long v = -sol.b0 * l;
        for (size_t i = 0; i < alphas.size(); ++i)
            v -= (sol.omegas[i] * l + alphas[i] - 1) / alphas[i];  // ceil
        return v >= 0;
    };
    return table_from_predicate(2 * prod, pred);
}

namespace {

CurveInvariants finish_curve(NumericalSemigroup sg) {
    CurveInvariants ci;
    ci.sg = std::move(sg);
    ci.gap_list = ci.sg.gaps();
    ci.delta = static_cast<long long>(ci.gap_list.size());
    long long cond = ci.sg.conductor();
    ci.alexander.assign(static_cast<size_t>(cond) + 1, 0);
    // Delta(t) = (1 - t) * H_M(t): coefficient at s is m_s - m_{s-1}
    for (long long s = 0; s <= cond; ++s) {
        long long cur = ci.sg.contains(s) ? 1 : 0;
        long long prev = s > 0 && ci.sg.contains(s - 1) ? 1 : 0;
        ci.alexander[static_cast<size_t>(s)] = cur - prev;
    }
    return ci;
}

}  // namespace

CurveInvariants curve_from_pair(long long p, long long a) {
    if (p < 2 || a < 2 || std::gcd(p, a) != 1)
        throw DomainError("linking pair must be coprime integers >= 2");
    long long wp = ((-mod_inverse_ll(a % p, p)) % p + p) % p;
    long long wa = ((-mod_inverse_ll(p % a, a)) % a + a) % a;
    if (p * a - wp * a - wa * p != 1) throw std::logic_error("curve pair Diophantine equation failed");
    auto pred = [&](long long l) {
        long long v = l - (wp * l + p - 1) / p - (wa * l + a - 1) / a;
        return v >= 0;
    };
    CurveInvariants ci = finish_curve(table_from_predicate(2 * p * a, pred));
    ci.omega_p = wp;
    ci.omega_a = wa;
    return ci;
}

CurveInvariants curve_from_graph(const PlumbingGraph& g) {
    if (g.arrows.size() != 1) throw DomainError("curve graph must carry exactly one arrow");
    int vr = g.arrows[0];
    if (g.euler[vr] != -1) throw DomainError("the arrow must sit at the unique (-1) vertex");
    Model m = build_model(g, /*allow_arrows=*/true);
    int vr_pos = m.cls.node_pos_of(vr);
    if (vr_pos < 0) throw DomainError("the arrow vertex is not a node of the graph");

    ReducedLift zero;
    zero.a_node.assign(m.num_nodes(), BigInt(0));
    zero.a_end.assign(m.legs.size(), BigInt(0));
    zero.a_conn.assign(m.chains.size(), BigInt(0));
    recompute_projection(m, zero);

    // per-coordinate cap for points of the cone with vr-coordinate <= S
    auto scan = [&](long long S) {
        const int nn = m.num_nodes();
        IVec lo(nn, BigInt(0)), hi(nn, BigInt(0));
        for (int j = 0; j < nn; ++j) {
            Rational best;
            for (int r = 0; r < nn; ++r) {
                RVec ray = m.pi_estar(r);
                Rational ratio = ray[j] / ray[vr_pos];
                if (ratio > best) best = ratio;
            }
            hi[j] = (best * Rational(S)).ceil();
        }
        // Filtration index set: nodes whose effective node-degree (chains
        // plus the arrow) is at least 2; the arrow bumps v_r into it. The
        // zeta-function factor of such a node is (1 - t^{E*})^0, which pins
        // N(l, n) = 0 on the support.
        std::vector<char> in_J(nn, 0);
        for (int n = 0; n < nn; ++n)
            if (m.cls.delta_nN[n] + m.g.arrow_count(m.cls.nodes[n]) >= 2) in_J[n] = 1;
        std::vector<char> mem(static_cast<size_t>(S) + 1, 0);
        std::set<long long> seen;
        for (const auto& ell : lattice_points_in_range(m, zero, lo, hi)) {
            bool gr0 = true;
            for (int n = 0; n < nn && gr0; ++n) {
                BigInt nv = N_eval(m, zero, ell, n);
                if (nv.is_negative()) gr0 = false;
                else if (in_J[n] && !nv.is_zero()) gr0 = false;
            }
            if (!gr0) continue;
            if (ell[vr_pos] > BigInt(S)) continue;
            long long proj = ell[vr_pos].to_ll();
            if (!seen.insert(proj).second)
                throw std::logic_error("gr_0 projection to the arrow coordinate is not injective");
            mem[static_cast<size_t>(proj)] = 1;
        }
        NumericalSemigroup sg;
        sg.bound = S;
        sg.member = std::move(mem);
        return sg;
    };

    for (long long S = 64;; S *= 2) {
        NumericalSemigroup sg = scan(S);
        auto gaps = sg.gaps();
        long long fr = gaps.empty() ? 0 : gaps.back();
        if (2 * fr + 2 <= S) return finish_curve(std::move(sg));
        if (S > (1 << 22)) throw DomainError("curve semigroup scan bound exploded");
    }
}

}  // namespace plumbing
