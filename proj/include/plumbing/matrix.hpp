#pragma once

#include <vector>

#include "plumbing/rational.hpp"

namespace plumbing {

template <class T>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    T& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }
};

using IMat = Matrix<BigInt>;
using RMat = Matrix<Rational>;

IMat imat_mul(const IMat& a, const IMat& b);
IVec imat_apply(const IMat& a, const IVec& x);
RVec rmat_apply(const RMat& a, const RVec& x);

/// Determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(IMat m);

/// Leading principal minors det(m[0..k-1, 0..k-1]) for k = 1..n.
std::vector<BigInt> leading_principal_minors(const IMat& m);

/// Exact solve A X = B for square nonsingular integer A; fraction-free
/// forward elimination followed by back substitution in rationals.
RMat solve_exact(const IMat& A, const IMat& B);

RMat inverse_exact(const IMat& A);

/// Smith normal form U*A*V = D with unimodular U, V and diagonal D,
/// d_1 | d_2 | ... (nonnegative diagonal).
struct SmithForm {
    IMat D, U, V;
};
SmithForm smith_form(IMat A);

}  // namespace plumbing
