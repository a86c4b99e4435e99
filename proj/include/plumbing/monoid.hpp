#pragma once

#include <functional>

#include "plumbing/laurent.hpp"
#include "plumbing/lifts.hpp"

namespace plumbing {

struct PinnedGeneratorsInvalid : DomainError {
    explicit PinnedGeneratorsInvalid(const std::string& msg, int node = -1)
        : DomainError(msg), failing_node(node) {}
    int failing_node;  // generator index that failed, -1 if structural
};

/// Evaluation of the quasilinear function N_a(l, n) and its linear
/// normalization Nbar_a(l, n).
Rational N_eval_rational(const Model& m, const ReducedLift& a, const IVec& ell, int n);
BigInt N_eval(const Model& m, const ReducedLift& a, const IVec& ell, int n);  // must be integral
Rational Nbar_eval(const Model& m, const ReducedLift& a, const IVec& ell, int n);
IVec N_all(const Model& m, const ReducedLift& a, const IVec& ell);

/// Scaffolding generators of M_0: one vector per node, each a positive
/// multiple of pi_N(E*_n).
struct GeneratorSet {
    std::vector<IVec> v;
    RVec lambda;           // v[i] = lambda[i] * pi_N(E*_i)
    std::string strategy;  // proof | small | pinned
};

/// Chooses generators satisfying the hole-decomposition requirements for all
/// of `lifts` at level kappa. Strategies:
///   proof  - lambda_n = smallest admissible multiple >= |E_n| + kappa,
///            with end divisibility at every node;
///   small  - smallest multiples passing the explicit box checks;
///   pinned - caller-supplied vectors, fully validated.
GeneratorSet choose_generators(const Model& m, const std::vector<ReducedLift>& lifts, long long kappa,
                               const std::string& strategy, const std::vector<IVec>& pinned = {});

/// Throws PinnedGeneratorsInvalid if `gens` fails any requirement for
/// `lifts` at level kappa.
void validate_generators(const Model& m, const GeneratorSet& gens, const std::vector<ReducedLift>& lifts,
                         long long kappa);

/// Walk the points of Z^N(a) inside the integer coordinate box [lo, hi] in
/// lexicographic order without materializing them.
void for_each_lattice_point(const Model& m, const ReducedLift& a, const IVec& lo, const IVec& hi,
                            const std::function<void(const IVec&)>& fn);

/// Points of Z^N(a) inside the integer coordinate box [lo, hi], sorted
/// lexicographically.
std::vector<IVec> lattice_points_in_range(const Model& m, const ReducedLift& a, const IVec& lo,
                                          const IVec& hi);

/// (Box - c_a) cap Z^N(a), sorted lexicographically. Box = sum_n [0,1) v_n.
std::vector<IVec> box_points(const Model& m, const GeneratorSet& gens, const ReducedLift& a);

/// M^-_{a,I}: box points with N_a(l, n) < 0 for every n in I.
std::vector<IVec> hole_set(const Model& m, const GeneratorSet& gens, const ReducedLift& a,
                           const std::vector<int>& I);

/// gr_k M^-_{a,I} for I containing N-hat: points of (Box - c_{a-k}) cap Z^N(a)
/// with N_a < 0 on I minus N-hat and N_a = k_n on N-hat.
std::vector<IVec> graded_holes(const Model& m, const GeneratorSet& gens, const ReducedLift& a,
                               const IVec& k, const std::vector<int>& I);

enum class Membership { InModule, Hole, Outside };
Membership membership(const Model& m, const ReducedLift& a, const IVec& ell);

enum class HilbertMode { Module, Graded };

/// Rational form of the fine Hilbert series of M_a(k) (Module mode) or of
/// gr_k M_a (Graded mode, filtration over N-hat). Numerator exponents are the
/// bare lattice points.
RationalSeriesForm hilbert_form(const Model& m, const ReducedLift& a, const GeneratorSet& gens,
                                HilbertMode mode, const IVec& k);

/// All k with 0 <= k_n <= delta_{n,N} - c for n in N-hat (zero elsewhere).
std::vector<IVec> khat_range(const Model& m, long long c);

}  // namespace plumbing
