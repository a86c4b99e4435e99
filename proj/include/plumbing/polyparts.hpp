#pragma once

#include "plumbing/series.hpp"

namespace plumbing {

/// The two-variable decomposition needs the projected generators on each
/// side of a chain to share a common direction; failing that, the caller
/// re-runs with proof-strategy generators.
struct TwoVarPreconditionError : DomainError {
    using DomainError::DomainError;
};

/// One-variable division: f = pol * prod_i (1 - t^{d_i}) + rem, where rem is
/// supported on t_n-degrees in sum_i [0, pi_n(d_i)).
struct PolDecomposition {
    LaurentPoly pol, rem;
};
PolDecomposition decompose_one_var(const LaurentPoly& f, const std::vector<IVec>& denoms, int n);

/// Two-variable division with respect to the chain plane (t_n, t_n2):
/// f = pol * D_A * D_B + r1 * D_B + r2 * D_A + rem with the four support
/// conditions on the (e_n, e_n2) projections.
struct TwoVarDecomposition {
    LaurentPoly pol, r1, r2, rem;
};
TwoVarDecomposition decompose_two_var(const LaurentPoly& f, const std::vector<IVec>& A,
                                      const std::vector<IVec>& B, int n, int n2);

/// Pol_{(x, D)}: the chain-and-node weighted combination of polynomial parts
/// of t^x / prod_{d in D}(1 - t^{v_d}).
LaurentPoly pol_assembled(const Model& m, const RVec& x, const std::vector<int>& dset,
                          const GeneratorSet& gens);

struct SWResult {
    LaurentPoly P;
    Rational sw_norm;
    std::string strategy;
};

/// Polynomial part P_h of Z_h and the normalized Seiberg-Witten invariant
/// P_h(1). Falls back to proof-strategy generators if the two-variable
/// precondition fails.
SWResult assemble_P_h(const Model& m, const ReducedLift& a, const GeneratorSet& gens);

/// Independent route: counting function of the full multivariable series
/// plus the quadratic correction. `variant` selects among valid reference
/// points x; the result must not depend on it.
Rational oracle_sw_counting(const Model& m, const HClass& h, int variant = 0);

}  // namespace plumbing
