#include "plumbing/model.hpp"

namespace plumbing {

RVec Model::pi_estar(int node_pos) const {
    RVec out(num_nodes());
    for (int i = 0; i < num_nodes(); ++i) out[i] = orb.neg_Iorb_inv.at(i, node_pos);
    return out;
}

Model build_model(const PlumbingGraph& g, bool allow_arrows) {
    if (!allow_arrows && !g.arrows.empty())
        throw GraphError("graph has arrows; they are only supported by the semigroup pipeline");
    Model m;
    m.g = g;
    validate_tree(m.g);
    m.cls = classify(m.g);
    m.lat = intersection_data(m.g);
    m.H = std::make_unique<DiscriminantGroup>(m.lat);
    m.legs = leg_invariants(m.g, m.cls);
    m.chains = chain_invariants(m.g, m.cls);
    m.orb = orbifold_data(m.g, m.cls, m.lat, m.legs, m.chains);
    m.K = canonical_class(m.g, m.lat);

    m.legs_at.assign(m.cls.nodes.size(), {});
    m.pairs_at_lo.assign(m.cls.nodes.size(), {});
    m.pairs_at_hi.assign(m.cls.nodes.size(), {});
    for (size_t i = 0; i < m.legs.size(); ++i) m.legs_at[m.legs[i].node_pos].push_back(static_cast<int>(i));
    for (size_t i = 0; i < m.chains.size(); ++i) {
        const auto& p = m.cls.pairs[m.chains[i].pair_index];
        m.pairs_at_lo[p.lo].push_back(static_cast<int>(i));
        m.pairs_at_hi[p.hi].push_back(static_cast<int>(i));
    }
    return m;
}

}  // namespace plumbing
