#pragma once

#include "plumbing/lattice.hpp"

namespace plumbing {

/// Internal consistency failure in the orbifold identities; indicates a bug,
/// not bad input.
struct OrbifoldIdentityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Negative (Hirzebruch) continued fraction [k_1,...,k_s] = alpha/omega.
struct NegCF {
    BigInt alpha, omega;
};
NegCF neg_cf_evaluate(const std::vector<BigInt>& ks);
/// Expansion of alpha/omega with 0 < omega < alpha, gcd = 1; all k_i >= 2.
std::vector<BigInt> neg_cf_expand(const BigInt& alpha, const BigInt& omega);

/// Normalized Seifert invariant of the leg (n,u]: alpha = det_{(n,u]},
/// omega = det of the leg minus its first vertex, omega*omega_tilde = 1 mod alpha.
struct LegInvariant {
    int node_pos;
    int end;
    BigInt alpha, omega, omega_tilde;
};

/// Chain invariants of the ordered node pair lo < hi.
struct ChainInvariant {
    int pair_index;
    BigInt alpha;       // symmetric
    BigInt omega_lo_hi; // chain as leg of Gamma_lo
    BigInt omega_hi_lo; // chain as leg of Gamma_hi
    BigInt tau;         // omega_lo_hi * omega_hi_lo = alpha * tau + 1
};

std::vector<LegInvariant> leg_invariants(const PlumbingGraph& g, const Classification& c);
std::vector<ChainInvariant> chain_invariants(const PlumbingGraph& g, const Classification& c);

/// Orbifold Euler numbers and the orbifold intersection matrix, with both
/// determinant identities checked against the lattice data.
struct OrbifoldData {
    RVec e;                // e_n per node
    RMat Iorb;             // nodes x nodes
    RMat neg_Iorb_inv;     // (-I^orb)^{-1}; column n = pi_N(E*_n)
    BigInt det_neg_Iorb_num, det_neg_Iorb_den;  // det(-I^orb) as a fraction
};

OrbifoldData orbifold_data(const PlumbingGraph& g, const Classification& c,
                           const IntersectionData& d,
                           const std::vector<LegInvariant>& legs,
                           const std::vector<ChainInvariant>& chains);

}  // namespace plumbing
