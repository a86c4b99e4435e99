#pragma once

#include <memory>

#include "plumbing/seifert.hpp"

namespace plumbing {

/// Everything derived from a validated plumbing graph that the series,
/// monoid and Seiberg-Witten layers consume. Immutable after construction.
struct Model {
    PlumbingGraph g;
    Classification cls;
    IntersectionData lat;
    std::unique_ptr<DiscriminantGroup> H;
    std::vector<LegInvariant> legs;
    std::vector<ChainInvariant> chains;
    OrbifoldData orb;
    RVec K;  // canonical class, E-coordinates

    std::vector<std::vector<int>> legs_at;      // node pos -> leg indices
    std::vector<std::vector<int>> pairs_at_lo;  // node pos -> pair indices with lo = pos
    std::vector<std::vector<int>> pairs_at_hi;  // node pos -> pair indices with hi = pos

    int num_nodes() const { return static_cast<int>(cls.nodes.size()); }

    /// pi_N(E*_n) in node E-coordinates: column of (-I^orb)^{-1}.
    RVec pi_estar(int node_pos) const;
};

Model build_model(const PlumbingGraph& g, bool allow_arrows = false);

}  // namespace plumbing
