#pragma once

#include "plumbing/model.hpp"

namespace plumbing {

/// Reduced lift of a class: integer coefficients on node duals, end duals
/// and chain-connector duals, plus the node projection data.
struct ReducedLift {
    IVec a_node;  // per node position
    IVec a_end;   // parallel to Model::legs
    IVec a_conn;  // parallel to Model::chains; 0 for empty chains
    RVec A;       // c_a = sum A_n pi_N(E*_n)
    RVec c;       // c_a in E_n coordinates

    bool operator==(const ReducedLift& o) const {
        return a_node == o.a_node && a_end == o.a_end && a_conn == o.a_conn;
    }
};

/// Reduced transform of an element of L' given by integer E*-coordinates.
ReducedLift reduced_transform(const Model& m, const IVec& estar);

/// Full E*-coordinate vector of the lift itself.
IVec lift_estar(const Model& m, const ReducedLift& a);

HClass lift_class(const Model& m, const ReducedLift& a);

/// Reduced transform of the unique representative r_h.
ReducedLift canonical_lift(const Model& m, const HClass& h);

/// Node projections recomputed for a lift whose coefficients were shifted.
void recompute_projection(const Model& m, ReducedLift& a);

/// Membership of an integer node vector in the affine lattice Z^N(a).
bool affine_lattice_member(const Model& m, const ReducedLift& a, const IVec& ell);

/// a - k for a node-supported shift k (indexed by node position).
ReducedLift lift_minus(const Model& m, const ReducedLift& a, const IVec& k);

}  // namespace plumbing
