#include "plumbing/lifts.hpp"

namespace plumbing {

namespace {

// Open/half-open subpath determinants along an ordered vertex list.
BigInt det_range(const PlumbingGraph& g, const std::vector<int>& vs, int from, int to) {
    // determinant of vs[from..to] inclusive; empty range = 1
    if (from > to) return BigInt(1);
    std::vector<int> sub(vs.begin() + from, vs.begin() + to + 1);
    return subgraph_det(g, sub);
}

}  // namespace

void recompute_projection(const Model& m, ReducedLift& a) {
    const int nn = m.num_nodes();
    a.A.assign(nn, Rational());
    for (int i = 0; i < nn; ++i) a.A[i] = Rational(a.a_node[i]);
    for (size_t li = 0; li < m.legs.size(); ++li) {
        const auto& leg = m.legs[li];
        a.A[leg.node_pos] += Rational(a.a_end[li], leg.alpha);
    }
    for (size_t ci = 0; ci < m.chains.size(); ++ci) {
        const auto& ch = m.chains[ci];
        const auto& p = m.cls.pairs[ch.pair_index];
        a.A[p.lo] += Rational(ch.omega_lo_hi, ch.alpha) * Rational(a.a_conn[ci]);
        a.A[p.hi] += Rational(BigInt(1), ch.alpha) * Rational(a.a_conn[ci]);
    }
    a.c = rmat_apply(m.orb.neg_Iorb_inv, a.A);
}

ReducedLift reduced_transform(const Model& m, const IVec& estar) {
    if (static_cast<int>(estar.size()) != m.g.n())
        throw DomainError("reduced_transform: coordinate size mismatch");
    ReducedLift a;
    a.a_node.assign(m.num_nodes(), BigInt(0));
    a.a_end.assign(m.legs.size(), BigInt(0));
    a.a_conn.assign(m.chains.size(), BigInt(0));

    for (int i = 0; i < m.num_nodes(); ++i) a.a_node[i] = estar[m.cls.nodes[i]];

    for (size_t li = 0; li < m.legs.size(); ++li) {
        const auto& vs = m.cls.legs[li].vertices;  // (n,u] from the node
        const int t = static_cast<int>(vs.size());
        BigInt acc = estar[vs[t - 1]];  // l'_u
        for (int j = 0; j + 1 < t; ++j)
            acc += estar[vs[j]] * det_range(m.g, vs, j + 1, t - 1);  // det_{(v,u]}
        a.a_end[li] = acc;
    }

    for (size_t ci = 0; ci < m.chains.size(); ++ci) {
        const auto& p = m.cls.pairs[m.chains[ci].pair_index];
        const auto& w = p.between;  // ordered from lo; w[0] is the connector
        if (w.empty()) continue;    // coefficient stays on the node itself
        const int s = static_cast<int>(w.size());
        BigInt conn = estar[w[0]];
        BigInt node_corr(0);
        for (int j = 1; j < s; ++j) {
            conn += estar[w[j]] * det_range(m.g, w, 0, j - 1);       // det_{(v, conn]}
            node_corr += estar[w[j]] * det_range(m.g, w, 1, j - 1);  // det_{(v, conn)}
        }
        a.a_conn[ci] = conn;
        a.a_node[p.lo] -= node_corr;
    }

    recompute_projection(m, a);
    return a;
}

IVec lift_estar(const Model& m, const ReducedLift& a) {
    IVec y(m.g.n(), BigInt(0));
    for (int i = 0; i < m.num_nodes(); ++i) y[m.cls.nodes[i]] += a.a_node[i];
    for (size_t li = 0; li < m.legs.size(); ++li) y[m.legs[li].end] += a.a_end[li];
    for (size_t ci = 0; ci < m.chains.size(); ++ci) {
        const auto& p = m.cls.pairs[m.chains[ci].pair_index];
        if (!p.between.empty()) y[p.between[0]] += a.a_conn[ci];
    }
    return y;
}

HClass lift_class(const Model& m, const ReducedLift& a) { return m.H->class_of(lift_estar(m, a)); }

ReducedLift canonical_lift(const Model& m, const HClass& h) {
    Representative r = representative(m.lat, *m.H, h);
    return reduced_transform(m, r.estar);
}

bool affine_lattice_member(const Model& m, const ReducedLift& a, const IVec& ell) {
    for (size_t ci = 0; ci < m.chains.size(); ++ci) {
        const auto& ch = m.chains[ci];
        const auto& p = m.cls.pairs[ch.pair_index];
        BigInt lhs = ell[p.lo] + ch.omega_hi_lo * ell[p.hi] - a.a_conn[ci];
        if (!BigInt::fmod(lhs, ch.alpha).is_zero()) return false;
    }
    return true;
}

ReducedLift lift_minus(const Model& m, const ReducedLift& a, const IVec& k) {
    ReducedLift out = a;
    for (int i = 0; i < m.num_nodes(); ++i) out.a_node[i] -= k[i];
    recompute_projection(m, out);
    return out;
}

}  // namespace plumbing
