#pragma once

#include "plumbing/model.hpp"

namespace plumbing {

/// Numerical semigroup realized as an explicit membership table on [0, bound].
/// The bound always exceeds twice the largest gap, so the table determines
/// the semigroup.
struct NumericalSemigroup {
    long long bound = 0;
    std::vector<char> member;  // size bound + 1

    bool contains(long long x) const;
    std::vector<long long> gaps() const;
    long long genus() const { return static_cast<long long>(gaps().size()); }
    long long frobenius() const;  // -1 if there are no gaps
    long long conductor() const { return frobenius() + 1; }
    std::vector<long long> min_generators() const;
};

/// Seifert homology sphere data: b_0 prod(alpha) + sum omega_i prod_{j!=i} alpha_j = -1.
struct SeifertSolution {
    long long b0;
    std::vector<long long> omegas;
};
SeifertSolution seifert_diophantine(const std::vector<long long>& alphas);

/// Semigroup of Sigma(alpha_1,...,alpha_d): membership
/// -b_0 l - sum ceil(omega_i l / alpha_i) >= 0.
NumericalSemigroup seifert_semigroup(const std::vector<long long>& alphas);

/// Plane-curve data: semigroup, delta invariant, Alexander polynomial and
/// the polynomial part P_g(t) = -sum_{s not in M} t^s.
struct CurveInvariants {
    NumericalSemigroup sg;
    long long delta = 0;
    std::vector<long long> alexander;        // coefficient of t^i at index i
    std::vector<long long> gap_list;         // support of -P_g
    long long omega_p = 0, omega_a = 0;      // one-pair case only
};

/// One linking pair (p, a), gcd = 1: solve p a - omega_p a - omega_a p = 1.
CurveInvariants curve_from_pair(long long p, long long a);

/// Arrowed minimal plumbing graph of an algebraic knot: project gr_0 of the
/// associated monoid to the arrow vertex coordinate.
CurveInvariants curve_from_graph(const PlumbingGraph& g);

}  // namespace plumbing
