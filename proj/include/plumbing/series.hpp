#pragma once

#include "plumbing/monoid.hpp"

namespace plumbing {

/// Generalized binomial coefficient binom(m, j) for integer m and j >= 0.
BigInt generalized_binom(long long m, const BigInt& j);

/// Truncated h-equivariant reduced Poincare series, computed directly from
/// the bounded lattice scan of S_a. `cap` bounds the exponent c_a + l
/// componentwise (inclusive). Requires at least one node.
LaurentPoly expand_Zh_direct(const Model& m, const ReducedLift& a, const RVec& cap);

/// The same series through the alternative binomial-sum decomposition over
/// the modules M_a(k). Coincides with the direct route for one-node graphs.
LaurentPoly expand_Zh_alternative(const Model& m, const ReducedLift& a, const RVec& cap);

/// Closed rational representation of Z_h built from graded hole sets. For
/// one-node graphs a dedicated one-variable form over (1 - t^d)^2 is
/// produced by direct division.
RationalSeriesForm rational_form(const Model& m, const ReducedLift& a, const GeneratorSet& gens);

/// Convenience: choose generators for the Thm-3(b) lift family and level 1.
GeneratorSet generators_for_rational_form(const Model& m, const ReducedLift& a,
                                          const std::string& strategy,
                                          const std::vector<IVec>& pinned = {});

RVec uniform_cap(const Model& m, long long bound);

}  // namespace plumbing
