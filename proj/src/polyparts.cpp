#include "plumbing/polyparts.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace plumbing {

namespace {

constexpr long long kMaxChain = 1 << 20;  // runaway-division guard

// Divide f by (1 - t^d) with the remainder window [0, w) in the degree
// function deg(e); `shift_deg` is the degree of d itself (must be > 0).
// Per-term: unique k with deg(e) - k*shift in [0, w) when w == shift.
void divide_factor(const LaurentPoly& f, const IVec& d, const std::function<Rational(const RVec&)>& deg,
                   const Rational& shift, LaurentPoly& quotient, LaurentPoly& remainder) {
    if (shift.sign() <= 0) throw TwoVarPreconditionError("division direction has nonpositive degree");
    RVec dr = rvec_of(d);
    for (const auto& [e, c] : f.terms()) {
        Rational val = deg(e) / shift;
        BigInt k = val.floor();
        if (!k.fits_ll() || k.to_ll() > kMaxChain || k.to_ll() < -kMaxChain)
            throw std::logic_error("divide_factor: runaway chain");
        long long kk = k.to_ll();
        if (kk > 0) {
            RVec cur = e;
            for (long long j = 1; j <= kk; ++j) {
                cur = rvec_sub(cur, dr);
                quotient.add_term(cur, -c);
            }
            remainder.add_term(cur, c);
        } else if (kk < 0) {
            RVec cur = e;
            for (long long j = 0; j < -kk; ++j) {
                quotient.add_term(cur, c);
                cur = rvec_add(cur, dr);
            }
            remainder.add_term(cur, c);
        } else {
            remainder.add_term(e, c);
        }
    }
}

// Sequential product division: f = pol * prod(1 - t^{d_i}) + rem with the
// remainder window compounding across factors.
PolDecomposition divide_product(const LaurentPoly& f, const std::vector<IVec>& denoms,
                                const std::function<Rational(const RVec&)>& deg,
                                const std::vector<Rational>& shifts) {
    PolDecomposition out;
    if (f.is_zero()) return out;
    const size_t dim = f.terms().begin()->first.size();
    LaurentPoly work = f;
    LaurentPoly prefix = LaurentPoly::monomial(RVec(dim, Rational(0)));
    for (size_t i = 0; i < denoms.size() && !work.is_zero(); ++i) {
        LaurentPoly q, r;
        divide_factor(work, denoms[i], deg, shifts[i], q, r);
        out.rem += r * prefix;
        prefix -= prefix.mul_monomial(rvec_of(denoms[i]), BigInt(1));  // prefix *= (1 - t^{d_i})
        work = std::move(q);
    }
    out.pol = std::move(work);
    return out;
}

}  // namespace

PolDecomposition decompose_one_var(const LaurentPoly& f, const std::vector<IVec>& denoms, int n) {
    if (f.is_zero()) return {};
    if (denoms.empty()) {
        // no denominator: a monomial is its own polynomial part when its
        // t_n-degree is nonnegative and pure negative-degree part otherwise
        PolDecomposition out;
        for (const auto& [e, c] : f.terms()) {
            if (e[n].sign() >= 0) out.pol.add_term(e, c);
            else out.rem.add_term(e, c);
        }
        return out;
    }
    std::vector<Rational> shifts;
    for (const auto& d : denoms) {
        if (d[n].sign() <= 0)
            throw TwoVarPreconditionError("one-variable division: denominator has no t_n degree");
        shifts.push_back(Rational(d[n]));
    }
    auto deg = [n](const RVec& e) { return e[n]; };
    return divide_product(f, denoms, deg, shifts);
}

namespace {

struct Direction {
    IVec prim;                    // primitive 2D direction (p1, p2), both > 0
    std::vector<BigInt> mults;    // projected factor = mults[i] * prim
};

Direction common_direction(const std::vector<IVec>& factors, int n, int n2) {
    Direction dir;
    if (factors.empty()) return dir;
    BigInt x = factors[0][n], y = factors[0][n2];
    BigInt g = BigInt::gcd(x, y);
    if (g.is_zero() || x.sign() <= 0 || y.sign() <= 0)
        throw TwoVarPreconditionError("projected generator is not positive in the chain plane");
    dir.prim = {BigInt::divexact(x, g), BigInt::divexact(y, g)};
    for (const auto& f : factors) {
        BigInt m = BigInt::divexact(f[n] + f[n2], dir.prim[0] + dir.prim[1]);
        if (m.sign() <= 0 || f[n] != m * dir.prim[0] || f[n2] != m * dir.prim[1])
            throw TwoVarPreconditionError("projected generators on one side are not collinear");
        dir.mults.push_back(m);
    }
    return dir;
}

BigInt det2(const BigInt& a1, const BigInt& a2, const BigInt& b1, const BigInt& b2) {
    return a1 * b2 - a2 * b1;
}

}  // namespace

TwoVarDecomposition decompose_two_var(const LaurentPoly& f, const std::vector<IVec>& A,
                                      const std::vector<IVec>& B, int n, int n2) {
    TwoVarDecomposition out;
    if (f.is_zero()) return out;

    if (A.empty() && B.empty()) {
        // no denominators: split by the proper/polynomial sign semantics in
        // the two chain variables; only the polynomial bucket feeds P_h
        for (const auto& [e, c] : f.terms()) {
            int s1 = e[n].sign(), s2 = e[n2].sign();
            if (s1 >= 0 && s2 >= 0) out.pol.add_term(e, c);
            else if (s1 < 0 && s2 >= 0) out.r1.add_term(e, c);
            else if (s2 < 0 && s1 >= 0) out.r2.add_term(e, c);
            else out.rem.add_term(e, c);
        }
        return out;
    }

    if (A.empty() || B.empty()) {
        // single-sided: divide along the first (resp. second) coordinate and
        // classify the remainder by its side of the remaining ray.
        const bool b_side = A.empty();
        const auto& fac = b_side ? B : A;
        const int wcoord = b_side ? n : n2;  // window coordinate
        Direction dir = common_direction(fac, n, n2);
        std::vector<Rational> shifts;
        for (size_t i = 0; i < fac.size(); ++i)
            shifts.push_back(Rational(dir.mults[i] * (b_side ? dir.prim[0] : dir.prim[1])));
        auto deg = [wcoord](const RVec& e) { return e[wcoord]; };
        PolDecomposition d = divide_product(f, fac, deg, shifts);
        out.pol = std::move(d.pol);
        for (const auto& [e, c] : d.rem.terms()) {
            // side test against the ray: det((e_n, e_n2), prim)
            Rational det = e[n] * Rational(dir.prim[1]) - e[n2] * Rational(dir.prim[0]);
            int s = b_side ? det.sign() : -det.sign();
            if (s > 0) {
                // below beta (resp. above alpha): the naked remainder slot
                if (b_side) out.r2.add_term(e, c);
                else out.r1.add_term(e, c);
            } else if (s == 0) {
                out.rem.add_term(e, c);
            } else {
                throw TwoVarPreconditionError("single-sided remainder on the wrong side of the ray");
            }
        }
        return out;
    }

    Direction da = common_direction(A, n, n2);
    Direction db = common_direction(B, n, n2);
    BigInt D = det2(da.prim[0], da.prim[1], db.prim[0], db.prim[1]);
    if (D.sign() == 0) throw TwoVarPreconditionError("chain-plane directions are proportional");
    if (D.sign() < 0) throw TwoVarPreconditionError("chain-plane directions are misoriented");

    auto lam = [&](const RVec& e) {  // alpha-coordinate
        return (e[n] * Rational(db.prim[1]) - e[n2] * Rational(db.prim[0])) / Rational(D);
    };
    auto mu = [&](const RVec& e) {  // beta-coordinate
        return (Rational(da.prim[0]) * e[n2] - Rational(da.prim[1]) * e[n]) / Rational(D);
    };

    std::vector<Rational> sa_lam, sb_mu, sa_p2, sb_p1;
    for (size_t i = 0; i < A.size(); ++i) {
        sa_lam.push_back(Rational(da.mults[i]));
        sa_p2.push_back(Rational(da.mults[i] * da.prim[1]));
    }
    for (size_t i = 0; i < B.size(); ++i) {
        sb_mu.push_back(Rational(db.mults[i]));
        sb_p1.push_back(Rational(db.mults[i] * db.prim[0]));
    }

    // Phase 1: divide by D_B along mu; quotient U sits over D_B.
    PolDecomposition p1 = divide_product(f, B, mu, sb_mu);
    LaurentPoly U = std::move(p1.pol);
    LaurentPoly V = std::move(p1.rem);

    // Phase 2: divide V by D_A along lambda; remainder is the final rem.
    PolDecomposition p2 = divide_product(V, A, lam, sa_lam);
    out.rem = std::move(p2.rem);
    LaurentPoly Q = std::move(p2.pol);

    // Phase 3: push Q through D_B along the first coordinate; remainder is r2.
    auto degp1 = [n](const RVec& e) { return e[n]; };
    PolDecomposition p3 = divide_product(Q, B, degp1, sb_p1);
    out.r2 = std::move(p3.rem);
    out.pol += p3.pol;

    // Phase 4: push U through D_A along the second coordinate; remainder is r1.
    auto degp2 = [n2](const RVec& e) { return e[n2]; };
    PolDecomposition p4 = divide_product(U, A, degp2, sa_p2);
    out.r1 = std::move(p4.rem);
    out.pol += p4.pol;

    // support checks (the uniqueness certificate)
    for (const auto& [e, c] : out.pol.terms())
        if (e[n].sign() < 0 && e[n2].sign() < 0)
            throw TwoVarPreconditionError("polynomial part hits the negative quadrant");
    Rational MA, MB;
    for (const auto& m : da.mults) MA += Rational(m);
    for (const auto& m : db.mults) MB += Rational(m);
    for (const auto& [e, c] : out.r1.terms()) {
        Rational lt = e[n2] / Rational(da.prim[1]);
        if (mu(e).sign() < 0 || lt.sign() < 0 || lt >= MA)
            throw TwoVarPreconditionError("r1 support violated");
    }
    for (const auto& [e, c] : out.r2.terms()) {
        Rational mt = e[n] / Rational(db.prim[0]);
        if (lam(e).sign() < 0 || mt.sign() < 0 || mt >= MB)
            throw TwoVarPreconditionError("r2 support violated");
    }
    for (const auto& [e, c] : out.rem.terms())
        if (lam(e).sign() < 0 || lam(e) >= MA || mu(e).sign() < 0 || mu(e) >= MB)
            throw TwoVarPreconditionError("rem support violated");
    return out;
}

namespace {

// Node positions on each side after removing the chain of `pair_idx`.
std::pair<std::vector<int>, std::vector<int>> node_sides(const Model& m, int pair_idx) {
    const int nn = m.num_nodes();
    std::vector<std::vector<int>> adj(nn);
    for (size_t ci = 0; ci < m.cls.pairs.size(); ++ci) {
        if (static_cast<int>(ci) == pair_idx) continue;
        adj[m.cls.pairs[ci].lo].push_back(m.cls.pairs[ci].hi);
        adj[m.cls.pairs[ci].hi].push_back(m.cls.pairs[ci].lo);
    }
    const auto& p = m.cls.pairs[pair_idx];
    std::vector<char> vis(nn, 0);
    std::vector<int> stack{p.lo}, lo_side;
    vis[p.lo] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        lo_side.push_back(v);
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                stack.push_back(w);
            }
    }
    std::vector<int> hi_side;
    for (int v = 0; v < nn; ++v)
        if (!vis[v]) hi_side.push_back(v);
    return {lo_side, hi_side};
}

}  // namespace

LaurentPoly pol_assembled(const Model& m, const RVec& x, const std::vector<int>& dset,
                          const GeneratorSet& gens) {
    const int nn = m.num_nodes();
    std::vector<IVec> denoms;
    for (int n : dset) denoms.push_back(gens.v[n]);
    LaurentPoly f = LaurentPoly::monomial(x);

    LaurentPoly total;
    for (size_t pi = 0; pi < m.cls.pairs.size(); ++pi) {
        auto [lo_side, hi_side] = node_sides(m, static_cast<int>(pi));
        std::vector<IVec> A, B;
        for (int n : dset) {
            if (std::find(lo_side.begin(), lo_side.end(), n) != lo_side.end()) A.push_back(gens.v[n]);
            else B.push_back(gens.v[n]);
        }
        total += decompose_two_var(f, A, B, m.cls.pairs[pi].lo, m.cls.pairs[pi].hi).pol;
    }
    for (int n = 0; n < nn; ++n) {
        long long w = m.cls.delta_nN[n] - 1;
        if (w == 0) continue;
        LaurentPoly pn = decompose_one_var(f, denoms, n).pol;
        for (const auto& [e, c] : pn.terms()) total.add_term(e, c * BigInt(-w));
    }
    return total;
}

SWResult assemble_P_h(const Model& m, const ReducedLift& a, const GeneratorSet& gens) {
    const int nn = m.num_nodes();
    if (nn == 0) throw DomainError("P_h requires at least one node");

    if (nn == 1) {
        RationalSeriesForm form = rational_form(m, a, gens);
        SWResult res;
        res.strategy = gens.strategy;
        for (const auto& term : form.terms)
            res.P += decompose_one_var(term.numerator, term.denominators, 0).pol;
        res.sw_norm = Rational(res.P.eval_one());
        return res;
    }

    auto run = [&](const GeneratorSet& gg) {
        SWResult res;
        res.strategy = gg.strategy;
        std::vector<char> in_nhat(nn, 0);
        for (int n : m.cls.nhat) in_nhat[n] = 1;
        std::vector<int> free_nodes;
        for (int n = 0; n < nn; ++n)
            if (!in_nhat[n]) free_nodes.push_back(n);

        for (long long mask = 0; mask < (1ll << free_nodes.size()); ++mask) {
            std::vector<int> I = m.cls.nhat;
            for (size_t i = 0; i < free_nodes.size(); ++i)
                if (mask & (1ll << i)) I.push_back(free_nodes[i]);
            std::sort(I.begin(), I.end());
            int sign = (I.size() - m.cls.nhat.size()) % 2 ? -1 : 1;
            std::vector<char> inI(nn, 0);
            for (int n : I) inI[n] = 1;
            std::vector<int> dset;
            for (int n = 0; n < nn; ++n)
                if (!inI[n]) dset.push_back(n);

            for (const auto& k : khat_range(m, 2)) {
                BigInt ck(sign);
                for (int n : m.cls.nhat) {
                    BigInt b = generalized_binom(m.cls.delta_nN[n] - 2, k[n]);
                    if (!BigInt::fmod(k[n], BigInt(2)).is_zero()) b = -b;
                    ck *= b;
                }
                if (ck.is_zero()) continue;
                for (const auto& ell : graded_holes(m, gg, a, k, I)) {
                    RVec x(nn);
                    for (int i = 0; i < nn; ++i) x[i] = a.c[i] + Rational(ell[i]);
                    LaurentPoly pol = pol_assembled(m, x, dset, gg);
                    for (const auto& [e, c] : pol.terms()) res.P.add_term(e, c * ck);
                }
            }
        }
        res.sw_norm = Rational(res.P.eval_one());
        return res;
    };

    try {
        return run(gens);
    } catch (const TwoVarPreconditionError&) {
        if (gens.strategy == "proof") throw;
        GeneratorSet fallback = generators_for_rational_form(m, a, "proof");
        return run(fallback);
    }
}

namespace {

// Q_h is evaluated on an int64 fast path: exponents are det-scaled integer
// E-coordinates, classes are packed residue tuples. Desk-scale graphs stay
// far below the guard bound; anything larger aborts loudly.
constexpr long long kOracleGuard = (1ll << 61);

long long checked_ll(const BigInt& b, const char* what) {
    if (!b.fits_ll() || b.to_ll() >= kOracleGuard || b.to_ll() <= -kOracleGuard)
        throw std::logic_error(std::string("oracle: value out of the fast-path range in ") + what);
    return b.to_ll();
}

}  // namespace

Rational oracle_sw_counting(const Model& m, const HClass& h, int variant) {
    const int V = m.g.n();
    // reference point x = -K + sum c_v E*_v with [x] = h and every c_v >= 1.
    // Start from the componentwise-reduced solution and try to replace it by
    // all-ones plus a single bump, whichever keeps the scan region smaller.
    IVec k_estar = e_to_estar_integral(m.lat, m.K);
    HClass hk = m.H->add(h, m.H->class_of(k_estar));
    IVec y = m.H->lift(hk);

    std::vector<HClass> gv(V);
    std::vector<long long> ord(V), mass(V, 0);
    const BigInt det = m.lat.det_gamma;
    std::vector<std::vector<long long>> estar_scaled(V, std::vector<long long>(V));
    for (int v = 0; v < V; ++v) {
        IVec ev(V, BigInt(0));
        ev[v] = BigInt(1);
        gv[v] = m.H->class_of(ev);
        ord[v] = checked_ll(m.H->element_order(gv[v]), "element order");
        for (int w = 0; w < V; ++w) {
            Rational s = -m.lat.I_inv.at(w, v) * Rational(det);
            estar_scaled[v][w] = checked_ll(s.num(), "dual coordinates");
            mass[v] += estar_scaled[v][w];
        }
    }

    std::vector<long long> c(V, 1);
    {
        std::vector<long long> base(V, 1);
        HClass ones = m.H->zero();
        for (int v = 0; v < V; ++v) ones = m.H->add(ones, gv[v]);
        HClass defect = m.H->add(hk, m.H->neg(ones));
        // candidates: all-ones plus t * e_v solving the class defect
        struct Cand {
            long long cost;
            int v;
            long long t;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < V; ++v) {
            HClass acc = m.H->zero();
            for (long long t = 0; t < ord[v]; ++t) {
                // t = 0 candidates all coincide; keep a single one
                if (acc == defect && (t > 0 || v == 0 || !defect.is_zero()))
                    cands.push_back({t * mass[v], v, t});
                acc = m.H->add(acc, gv[v]);
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return std::tie(a.cost, a.v, a.t) < std::tie(b.cost, b.v, b.t);
        });
        if (!cands.empty()) {
            const Cand& pick = cands[std::min<size_t>(variant, cands.size() - 1)];
            c = base;
            c[pick.v] += pick.t;
            if (variant >= static_cast<int>(cands.size())) c[0] += ord[0];
        } else {
            // componentwise reduction fallback
            for (int v = 0; v < V; ++v)
                c[v] = 1 + checked_ll(BigInt::fmod(y[v] - BigInt(1), BigInt(ord[v])), "residue");
            if (variant >= 1) c[0] += ord[0];
        }
    }
    IVec x_estar(V);
    for (int v = 0; v < V; ++v) x_estar[v] = BigInt(c[v]) - k_estar[v];
    if (!(m.H->class_of(x_estar) == h)) throw std::logic_error("oracle: reference point has wrong class");

    std::vector<long long> x_scaled(V, 0);
    for (int v = 0; v < V; ++v)
        for (int w = 0; w < V; ++w) x_scaled[w] += c[v] * estar_scaled[v][w];
    for (int w = 0; w < V; ++w) {
        Rational s = -m.K[w] * Rational(det);
        if (!s.is_integer()) throw std::logic_error("oracle: K coordinates not det-integral");
        x_scaled[w] += checked_ll(s.num(), "canonical class");
    }

    // packed classes: residues mixed into one integer
    std::vector<long long> fac;
    for (const auto& f : m.H->factors()) fac.push_back(checked_ll(f, "invariant factor"));
    auto pack = [&](const HClass& cl) {
        long long out = 0;
        for (size_t i = 0; i < fac.size(); ++i) out = out * fac[i] + cl.r[i].to_ll();
        return out;
    };
    std::vector<long long> gpacked(V);
    // addition table approach: residues per vertex class
    std::vector<std::vector<long long>> gres(V, std::vector<long long>(fac.size()));
    for (int v = 0; v < V; ++v)
        for (size_t i = 0; i < fac.size(); ++i) gres[v][i] = gv[v].r[i].to_ll();
    const long long target_packed = pack(h);

    struct Factor {
        int v;
        long long top;   // -1 for unbounded (geometric)
        long long expo;  // delta_v - 2
    };
    std::vector<Factor> factors;
    for (int v = 0; v < V; ++v) {
        long long d = m.g.valency(v);
        if (d == 2) continue;
        factors.push_back({v, d >= 3 ? d - 2 : -1, d - 2});
    }
    std::sort(factors.begin(), factors.end(), [&](const Factor& a, const Factor& b) {
        if ((a.top >= 0) != (b.top >= 0)) return (a.top >= 0) > (b.top >= 0);
        return mass[a.v] > mass[b.v];  // big strides first prune sooner
    });

    std::vector<long long> partial(V, 0);
    std::vector<long long> res(fac.size(), 0);
    BigInt Qsum(0);
    long long qsmall = 0;

    auto dominated = [&]() {
        for (int w = 0; w < V; ++w)
            if (partial[w] < x_scaled[w]) return false;
        return true;
    };

    std::function<void(size_t, long long)> rec = [&](size_t fi, long long coeff) {
        if (dominated()) return;
        if (fi == factors.size()) {
            long long packed = 0;
            for (size_t i = 0; i < fac.size(); ++i) packed = packed * fac[i] + res[i];
            if (packed == target_packed) {
                qsmall += coeff;
                if (qsmall >= kOracleGuard || qsmall <= -kOracleGuard) {
                    Qsum += BigInt(qsmall);
                    qsmall = 0;
                }
            }
            return;
        }
        const Factor& f = factors[fi];
        const auto& step = estar_scaled[f.v];
        long long mdeg = 0;
        for (;; ++mdeg) {
            if (f.top >= 0 && mdeg > f.top) break;
            if (mdeg > 0) {
                for (int w = 0; w < V; ++w) partial[w] += step[w];
                for (size_t i = 0; i < fac.size(); ++i) res[i] = (res[i] + gres[f.v][i]) % fac[i];
                if (dominated()) {
                    ++mdeg;  // include this increment in the rollback
                    break;
                }
            }
            long long cf = coeff;
            if (f.expo >= 1) {
                long long b = 1;
                for (long long i = 0; i < mdeg; ++i) b = b * (f.expo - i) / (i + 1);
                cf *= (mdeg % 2) ? -b : b;
            } else if (f.expo == -2) {
                cf *= (mdeg + 1);
            }
            rec(fi + 1, cf);
        }
        for (long long t = 1; t < mdeg; ++t) {
            for (int w = 0; w < V; ++w) partial[w] -= step[w];
            for (size_t i = 0; i < fac.size(); ++i) res[i] = (res[i] - gres[f.v][i] % fac[i] + fac[i]) % fac[i];
        }
    };
    rec(0, 1);
    Qsum += BigInt(qsmall);
    Rational Q(Qsum);

    // sw^norm_h = Q_h(x) + ((K+2x)^2 - (K+2r_h)^2) / 8
    RVec x_e(V);
    for (int w = 0; w < V; ++w) x_e[w] = Rational(BigInt(x_scaled[w]), det);
    Representative rh = representative(m.lat, *m.H, h);
    RVec kx(V), kr(V);
    for (int w = 0; w < V; ++w) {
        kx[w] = m.K[w] + Rational(2) * x_e[w];
        kr[w] = m.K[w] + Rational(2) * rh.e[w];
    }
    Rational quad = (pairing_e(m.lat, kx, kx) - pairing_e(m.lat, kr, kr)) / Rational(8);
    return Q + quad;
}

}  // namespace plumbing
