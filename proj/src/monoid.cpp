#include "plumbing/monoid.hpp"

#include <algorithm>
#include <functional>

namespace plumbing {

Rational N_eval_rational(const Model& m, const ReducedLift& a, const IVec& ell, int n) {
    Rational s(a.a_node[n]);
    Rational lin(BigInt(m.g.euler[m.cls.nodes[n]]));
    for (int ci : m.pairs_at_lo[n]) {
        const auto& ch = m.chains[ci];
        const auto& p = m.cls.pairs[ch.pair_index];
        s += Rational(ch.omega_lo_hi * a.a_conn[ci], ch.alpha);
        lin += Rational(ch.omega_lo_hi, ch.alpha);
        s -= Rational(ell[p.hi], ch.alpha);
    }
    for (int ci : m.pairs_at_hi[n]) {
        const auto& ch = m.chains[ci];
        const auto& p = m.cls.pairs[ch.pair_index];
        s += Rational(a.a_conn[ci], ch.alpha);
        lin += Rational(ch.omega_hi_lo, ch.alpha);
        s -= Rational(ell[p.lo], ch.alpha);
    }
    s -= lin * Rational(ell[n]);
    for (int li : m.legs_at[n]) {
        const auto& leg = m.legs[li];
        s += Rational(BigInt::fdiv(a.a_end[li] - leg.omega * ell[n], leg.alpha));
    }
    return s;
}

BigInt N_eval(const Model& m, const ReducedLift& a, const IVec& ell, int n) {
    Rational v = N_eval_rational(m, a, ell, n);
    if (!v.is_integer()) throw std::logic_error("N_a not integral on the affine lattice");
    return v.num();
}

Rational Nbar_eval(const Model& m, const ReducedLift& a, const IVec& ell, int n) {
    Rational s = a.A[n] - m.orb.e[n] * Rational(ell[n]);
    for (int ci : m.pairs_at_lo[n]) {
        const auto& ch = m.chains[ci];
        s -= Rational(ell[m.cls.pairs[ch.pair_index].hi], ch.alpha);
    }
    for (int ci : m.pairs_at_hi[n]) {
        const auto& ch = m.chains[ci];
        s -= Rational(ell[m.cls.pairs[ch.pair_index].lo], ch.alpha);
    }
    return s;
}

IVec N_all(const Model& m, const ReducedLift& a, const IVec& ell) {
    IVec out(m.num_nodes());
    for (int n = 0; n < m.num_nodes(); ++n) out[n] = N_eval(m, a, ell, n);
    return out;
}

namespace {

// extended gcd: returns g, x with x * a == g (mod b), 0 <= x < b
BigInt mod_inverse(const BigInt& a, const BigInt& mod) {
    BigInt old_r = BigInt::fmod(a, mod), r = mod;
    BigInt old_s(1), s(0);
    while (!r.is_zero()) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (!old_r.is_one()) throw std::logic_error("mod_inverse: not coprime");
    return BigInt::fmod(old_s, mod);
}

// Minimal positive rational t0 such that every admissible lambda is a
// positive integer multiple of t0, given constraints lambda * q_i in Z.
Rational lattice_generator(const std::vector<Rational>& qs) {
    // lambda * (p/q) in Z  <=>  lambda in (q/p) Z. Intersection of a/b Z and
    // c/d Z is lcm(a,c)/gcd(b,d) Z.
    BigInt num(1), den(0);
    for (const auto& q : qs) {
        if (q.is_zero()) continue;
        BigInt a = q.den(), b = q.num().abs();
        num = BigInt::lcm(num, a);
        den = BigInt::gcd(den, b);
    }
    if (den.is_zero()) return Rational(1);  // unconstrained
    return Rational(num, den);
}

// Integerized membership test for the semiopen generator box: for the point
// l + c the coordinates lambda = V^{-1} (l + c) must lie in [0,1)^N. With
// c = cnum / cden and W = cden * adj(V) the test is componentwise
// 0 <= (W l)_i + (w0)_i < cden * det(V) after sign normalization.
struct BoxGeometry {
    IMat W;        // scaled inverse rows applied to integer l
    IVec w0;       // constant offset per row
    BigInt scale;  // cden * |det V|
    RVec vsum;     // sum of generators
};

BoxGeometry box_geometry(const Model& m, const GeneratorSet& gens, const RVec& center) {
    const int nn = m.num_nodes();
    IMat V(nn, nn);
    for (int j = 0; j < nn; ++j)
        for (int i = 0; i < nn; ++i) V.at(i, j) = gens.v[j][i];
    RMat vinv = inverse_exact(V);
    BigInt cden(1);
    for (const auto& c : center) cden = BigInt::lcm(cden, c.den());
    BigInt vden(1);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) vden = BigInt::lcm(vden, vinv.at(i, j).den());
    BoxGeometry bg;
    bg.W = IMat(nn, nn);
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) {
            Rational s = vinv.at(i, j) * Rational(vden) * Rational(cden);
            bg.W.at(i, j) = s.num();
        }
    bg.w0.assign(nn, BigInt(0));
    for (int i = 0; i < nn; ++i) {
        Rational s;
        for (int j = 0; j < nn; ++j) s += vinv.at(i, j) * center[j];
        s *= Rational(vden) * Rational(cden);
        bg.w0[i] = s.num();
    }
    bg.scale = vden * cden;
    bg.vsum.assign(nn, Rational());
    for (int i = 0; i < nn; ++i)
        for (int j = 0; j < nn; ++j) bg.vsum[i] += Rational(gens.v[j][i]);
    return bg;
}

bool in_box(const BoxGeometry& bg, const IVec& ell) {
    const int nn = bg.W.rows;
    for (int i = 0; i < nn; ++i) {
        BigInt s = bg.w0[i];
        for (int j = 0; j < nn; ++j) s += bg.W.at(i, j) * ell[j];
        if (s.is_negative() || s >= bg.scale) return false;
    }
    return true;
}

}  // namespace

// Walk Z^N(a) within an integer coordinate box: the root node coordinate
// ranges freely, every other node is pinned to a residue class by the chain
// congruence toward its BFS parent. Visits in lexicographic order.
void for_each_lattice_point(const Model& m, const ReducedLift& a, const IVec& lo, const IVec& hi,
                            const std::function<void(const IVec&)>& fn) {
    const int nn = m.num_nodes();
    std::vector<int> parent_pair(nn, -1);
    for (size_t ci = 0; ci < m.chains.size(); ++ci) {
        const auto& p = m.cls.pairs[m.chains[ci].pair_index];
        parent_pair[p.hi] = static_cast<int>(ci);
    }
    IVec ell(nn);
    std::function<void(int)> rec = [&](int n) {
        if (n == nn) {
            fn(ell);
            return;
        }
        BigInt start = lo[n], step(1);
        if (parent_pair[n] >= 0) {
            const auto& ch = m.chains[parent_pair[n]];
            const auto& p = m.cls.pairs[ch.pair_index];
            if (!ch.alpha.is_one()) {
                // ell_lo + omega_hi_lo * ell_hi == a_conn (mod alpha); parent is lo
                BigInt target = BigInt::fmod(a.a_conn[parent_pair[n]] - ell[p.lo], ch.alpha);
                BigInt res = BigInt::fmod(mod_inverse(ch.omega_hi_lo, ch.alpha) * target, ch.alpha);
                start = lo[n] + BigInt::fmod(res - lo[n], ch.alpha);
                step = ch.alpha;
            }
        }
        for (BigInt v = start; v <= hi[n]; v += step) {
            ell[n] = v;
            rec(n + 1);
        }
    };
    rec(0);
}

std::vector<IVec> lattice_points_in_range(const Model& m, const ReducedLift& a, const IVec& lo,
                                          const IVec& hi) {
    std::vector<IVec> out;
    for_each_lattice_point(m, a, lo, hi, [&](const IVec& ell) { out.push_back(ell); });
    return out;
}

namespace {

// (Box - center) cap Z^N(a)
std::vector<IVec> scan_box(const Model& m, const GeneratorSet& gens, const ReducedLift& a,
                           const RVec& center) {
    const int nn = m.num_nodes();
    BoxGeometry bg = box_geometry(m, gens, center);
    IVec lo(nn), hi(nn);
    for (int i = 0; i < nn; ++i) {
        lo[i] = (-center[i]).ceil();
        Rational top = bg.vsum[i] - center[i];
        hi[i] = top.is_integer() ? top.num() - BigInt(1) : top.floor();
    }
    std::vector<IVec> out;
    for_each_lattice_point(m, a, lo, hi, [&](const IVec& ell) {
        if (in_box(bg, ell)) out.push_back(ell);
    });
    return out;
}

}  // namespace

std::vector<IVec> box_points(const Model& m, const GeneratorSet& gens, const ReducedLift& a) {
    return scan_box(m, gens, a, a.c);
}

std::vector<IVec> hole_set(const Model& m, const GeneratorSet& gens, const ReducedLift& a,
                           const std::vector<int>& I) {
    std::vector<IVec> out;
    for (auto& ell : box_points(m, gens, a)) {
        bool ok = true;
        for (int n : I)
            if (N_eval(m, a, ell, n).sign() >= 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(ell);
    }
    return out;
}

std::vector<IVec> graded_holes(const Model& m, const GeneratorSet& gens, const ReducedLift& a,
                               const IVec& k, const std::vector<int>& I) {
    std::vector<char> in_nhat(m.num_nodes(), 0);
    for (int n : m.cls.nhat) in_nhat[n] = 1;
    for (int n : m.cls.nhat)
        if (std::find(I.begin(), I.end(), n) == I.end())
            throw std::logic_error("graded_holes: I must contain N-hat");
    ReducedLift amk = lift_minus(m, a, k);
    std::vector<IVec> out;
    for (auto& ell : scan_box(m, gens, a, amk.c)) {
        bool ok = true;
        for (int n : m.cls.nhat)
            if (N_eval(m, a, ell, n) != k[n]) {
                ok = false;
                break;
            }
        for (int n : I) {
            if (!ok) break;
            if (in_nhat[n]) continue;
            if (N_eval(m, a, ell, n).sign() >= 0) ok = false;
        }
        if (ok) out.push_back(ell);
    }
    return out;
}

Membership membership(const Model& m, const ReducedLift& a, const IVec& ell) {
    if (!affine_lattice_member(m, a, ell)) throw DomainError("point not in the affine lattice Z^N(a)");
    bool in_module = true, in_norm = true;
    for (int n = 0; n < m.num_nodes(); ++n) {
        if (Nbar_eval(m, a, ell, n).sign() < 0) in_norm = false;
        if (N_eval(m, a, ell, n).sign() < 0) in_module = false;
    }
    if (!in_norm) return Membership::Outside;
    return in_module ? Membership::InModule : Membership::Hole;
}

void validate_generators(const Model& m, const GeneratorSet& gens, const std::vector<ReducedLift>& lifts,
                         long long kappa) {
    const int nn = m.num_nodes();
    if (static_cast<int>(gens.v.size()) != nn)
        throw PinnedGeneratorsInvalid("expected one generator per node");
    ReducedLift zero;
    zero.a_node.assign(nn, BigInt(0));
    zero.a_end.assign(m.legs.size(), BigInt(0));
    zero.a_conn.assign(m.chains.size(), BigInt(0));
    recompute_projection(m, zero);

    for (int n = 0; n < nn; ++n) {
        if (static_cast<int>(gens.v[n].size()) != nn)
            throw PinnedGeneratorsInvalid("generator dimension mismatch");
        // positive multiple of pi_N(E*_n): cone-span condition
        RVec dir = m.pi_estar(n);
        Rational lambda;
        for (int i = 0; i < nn; ++i)
            if (!dir[i].is_zero()) {
                lambda = Rational(gens.v[n][i]) / dir[i];
                break;
            }
        if (lambda.sign() <= 0)
            throw PinnedGeneratorsInvalid(
                "generator " + std::to_string(n) + " is not a positive multiple of pi_N(E*_n)", n);
        for (int i = 0; i < nn; ++i)
            if (Rational(gens.v[n][i]) != lambda * dir[i])
                throw PinnedGeneratorsInvalid(
                    "generator " + std::to_string(n) + " is not parallel to pi_N(E*_n)", n);
        // member of Z^N(0)
        if (!affine_lattice_member(m, zero, gens.v[n]))
            throw PinnedGeneratorsInvalid("generator " + std::to_string(n) + " is not in Z^N(0)", n);
        // end divisibility away from n: alpha_u | v_{n,n'} for u in E_{n'}, n' != n
        for (int n2 = 0; n2 < nn; ++n2) {
            if (n2 == n) continue;
            for (int li : m.legs_at[n2])
                if (!BigInt::fmod(gens.v[n][n2], m.legs[li].alpha).is_zero())
                    throw PinnedGeneratorsInvalid("generator " + std::to_string(n) +
                                                      " violates end divisibility at node " +
                                                      std::to_string(n2),
                                                  n);
        }
        // v_n in M_0
        for (int n2 = 0; n2 < nn; ++n2)
            if (N_eval(m, zero, gens.v[n], n2).sign() < 0)
                throw PinnedGeneratorsInvalid("generator " + std::to_string(n) + " is not in M_0", n);
    }
    // Box conditions. The strict level kappa is required at the filtration
    // nodes N-hat (where the graded intersection argument needs it); level 0
    // suffices at the other nodes. This matches the worked examples: the
    // level-1 bound holds there only at the N-hat node.
    std::vector<char> in_nhat(nn, 0);
    for (int n : m.cls.nhat) in_nhat[n] = 1;
    for (const auto& a : lifts) {
        auto pts = box_points(m, gens, a);
        for (const auto& ell : pts)
            for (int n = 0; n < nn; ++n) {
                IVec shifted = ell;
                for (int i = 0; i < nn; ++i) shifted[i] += gens.v[n][i];
                long long level = in_nhat[n] ? kappa : 0;
                if (N_eval(m, a, shifted, n) < BigInt(level))
                    throw PinnedGeneratorsInvalid(
                        "generator " + std::to_string(n) + " fails N_a(l + v_n, n) >= kappa on the box", n);
                for (int n2 = 0; n2 < nn; ++n2) {
                    if (n2 == n) continue;
                    if (N_eval(m, a, shifted, n2) != N_eval(m, a, ell, n2))
                        throw PinnedGeneratorsInvalid(
                            "generator " + std::to_string(n) + " shifts N_a at another node", n);
                }
            }
    }
}

GeneratorSet choose_generators(const Model& m, const std::vector<ReducedLift>& lifts, long long kappa,
                               const std::string& strategy, const std::vector<IVec>& pinned) {
    const int nn = m.num_nodes();
    if (nn == 0) throw DomainError("generators require at least one node");
    GeneratorSet gens;
    gens.strategy = strategy;
    gens.v.resize(nn);
    gens.lambda.resize(nn);

    if (strategy == "pinned") {
        if (static_cast<int>(pinned.size()) != nn)
            throw PinnedGeneratorsInvalid("pinned strategy requires one vector per node");
        gens.v = pinned;
        for (int n = 0; n < nn; ++n) {
            RVec dir = m.pi_estar(n);
            for (int i = 0; i < nn; ++i)
                if (!dir[i].is_zero()) {
                    gens.lambda[n] = Rational(pinned[n][i]) / dir[i];
                    break;
                }
        }
        validate_generators(m, gens, lifts, kappa);
        return gens;
    }

    const bool proof = strategy == "proof";
    if (!proof && strategy != "small") throw DomainError("unknown generator strategy '" + strategy + "'");

    // per-node admissible multiplier lattice
    RVec step(nn);
    for (int n = 0; n < nn; ++n) {
        RVec w = m.pi_estar(n);
        std::vector<Rational> qs;
        for (int i = 0; i < nn; ++i) qs.push_back(w[i]);  // integrality
        for (size_t ci = 0; ci < m.chains.size(); ++ci) {  // Z^N(0) congruences
            const auto& ch = m.chains[ci];
            const auto& p = m.cls.pairs[ch.pair_index];
            qs.push_back((w[p.lo] + Rational(ch.omega_hi_lo) * w[p.hi]) / Rational(ch.alpha));
        }
        for (int n2 = 0; n2 < nn; ++n2) {  // end divisibility
            if (!proof && n2 == n) continue;
            for (int li : m.legs_at[n2]) qs.push_back(w[n2] / Rational(m.legs[li].alpha));
        }
        step[n] = lattice_generator(qs);
    }

    std::vector<long long> mult(nn, 1);
    auto assemble = [&]() {
        for (int n = 0; n < nn; ++n) {
            gens.lambda[n] = step[n] * Rational(mult[n]);
            RVec w = m.pi_estar(n);
            gens.v[n].assign(nn, BigInt(0));
            for (int i = 0; i < nn; ++i) {
                Rational x = gens.lambda[n] * w[i];
                if (!x.is_integer()) throw std::logic_error("generator lattice computation failed");
                gens.v[n][i] = x.num();
            }
        }
    };

    if (proof) {
        std::vector<char> in_nhat(nn, 0);
        for (int n : m.cls.nhat) in_nhat[n] = 1;
        for (int n = 0; n < nn; ++n) {
            long long need = static_cast<long long>(m.legs_at[n].size()) + (in_nhat[n] ? kappa : 0);
            while ((step[n] * Rational(mult[n])) < Rational(need)) ++mult[n];
        }
        assemble();
        validate_generators(m, gens, lifts, kappa);
        return gens;
    }

    // small: bump multipliers until validation passes
    for (int rounds = 0; rounds < 1024; ++rounds) {
        assemble();
        try {
            validate_generators(m, gens, lifts, kappa);
            return gens;
        } catch (const PinnedGeneratorsInvalid& e) {
            int n = e.failing_node;
            if (n < 0 || n >= nn) n = 0;
            ++mult[n];
        }
    }
    throw DomainError("small generator search did not converge");
}

std::vector<IVec> khat_range(const Model& m, long long c) {
    std::vector<IVec> out;
    IVec k(m.num_nodes(), BigInt(0));
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == m.cls.nhat.size()) {
            out.push_back(k);
            return;
        }
        int n = m.cls.nhat[idx];
        long long top = m.cls.delta_nN[n] - c;
        for (long long v = 0; v <= top; ++v) {
            k[n] = BigInt(v);
            rec(idx + 1);
        }
        k[n] = BigInt(0);
    };
    rec(0);
    return out;
}

RationalSeriesForm hilbert_form(const Model& m, const ReducedLift& a, const GeneratorSet& gens,
                                HilbertMode mode, const IVec& k) {
    const int nn = m.num_nodes();
    RationalSeriesForm form;
    form.offset.assign(nn, Rational());
    form.generators = gens.v;
    form.strategy = gens.strategy;

    std::vector<char> in_nhat(nn, 0);
    for (int n : m.cls.nhat) in_nhat[n] = 1;

    for (long long mask = 0; mask < (1ll << nn); ++mask) {
        std::vector<int> I;
        for (int n = 0; n < nn; ++n)
            if (mask & (1ll << n)) I.push_back(n);
        int sign;
        std::vector<IVec> pts;
        if (mode == HilbertMode::Module) {
            sign = I.size() % 2 ? -1 : 1;
            ReducedLift amk = lift_minus(m, a, k);
            pts = hole_set(m, gens, amk, I);
        } else {
            bool contains_nhat = true;
            for (int n : m.cls.nhat)
                if (!(mask & (1ll << n))) contains_nhat = false;
            if (!contains_nhat) continue;
            int extra = 0;
            for (int n : I)
                if (!in_nhat[n]) ++extra;
            sign = extra % 2 ? -1 : 1;
            pts = graded_holes(m, gens, a, k, I);
        }
        if (pts.empty()) continue;
        RatTerm term;
        for (const auto& p : pts) term.numerator.add_term(rvec_of(p), BigInt(sign));
        for (int n = 0; n < nn; ++n)
            if (!(mask & (1ll << n))) term.denominators.push_back(gens.v[n]);
        form.terms.push_back(std::move(term));
    }
    return form;
}

}  // namespace plumbing
