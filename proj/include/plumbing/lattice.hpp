#pragma once

#include "plumbing/graph.hpp"

namespace plumbing {

/// Intersection form of the plumbing: I, det_Gamma = det(-I) and the exact
/// inverse. Construction verifies negative definiteness (all leading
/// principal minors of -I positive).
struct IntersectionData {
    IMat I;
    BigInt det_gamma;
    RMat I_inv;
};

IntersectionData intersection_data(const PlumbingGraph& g);

/// Element of H = L'/L as a residue tuple modulo the nontrivial invariant
/// factors.
struct HClass {
    IVec r;  // r[i] in [0, d_i)

    bool operator==(const HClass& o) const { return r == o.r; }
    bool operator!=(const HClass& o) const { return !(*this == o); }
    bool operator<(const HClass& o) const;
    bool is_zero() const;
    std::string str() const;
};

/// Discriminant group with the unimodular transforms of the Smith normal
/// form retained, so classes of arbitrary L' elements and lifts of classes
/// are cheap.
class DiscriminantGroup {
public:
    explicit DiscriminantGroup(const IntersectionData& d);

    const IVec& factors() const { return factors_; }  // nontrivial d_1 | d_2 | ...
    BigInt order() const;

    /// Class of an element given by integer E*-coordinates.
    HClass class_of(const IVec& estar) const;
    HClass zero() const;
    HClass add(const HClass& a, const HClass& b) const;
    HClass neg(const HClass& a) const;
    BigInt element_order(const HClass& a) const;

    /// Some integer E*-coordinate lift of a class.
    IVec lift(const HClass& h) const;

    /// All classes in lexicographic residue order. Throws if |H| > cap.
    std::vector<HClass> all_classes(long long cap = 1 << 20) const;

private:
    int n_;
    IVec factors_;
    std::vector<int> rows_;  // rows of U with d_i != 1
    IMat U_, Uinv_;
    IMat D_;
};

/// E-basis/E*-basis conversions for lattice vectors.
RVec estar_to_e(const IntersectionData& d, const IVec& estar);   // -I^{-1} * y
RVec estar_to_e(const IntersectionData& d, const RVec& estar);
IVec e_to_estar_integral(const IntersectionData& d, const RVec& e);  // -I * z, must be integral

/// Unique representative r_h with E-coordinates in [0,1). Returned in
/// E-coordinates together with its (integral) E*-coordinates.
struct Representative {
    RVec e;
    IVec estar;
};
Representative representative(const IntersectionData& d, const DiscriminantGroup& H, const HClass& h);

/// Canonical class K: (K, E_v) = -b_v - 2 for all v; E-coordinates.
RVec canonical_class(const PlumbingGraph& g, const IntersectionData& d);

/// Intersection pairing (x, y) for vectors given in E-coordinates.
Rational pairing_e(const IntersectionData& d, const RVec& x, const RVec& y);

}  // namespace plumbing
