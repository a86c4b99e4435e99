#include "plumbing/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace plumbing {

IMat imat_mul(const IMat& a, const IMat& b) {
    if (a.cols != b.rows) throw std::logic_error("imat_mul: shape mismatch");
    IMat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

IVec imat_apply(const IMat& a, const IVec& x) {
    if (a.cols != static_cast<int>(x.size())) throw std::logic_error("imat_apply: shape mismatch");
    IVec out(a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * x[j];
    return out;
}

RVec rmat_apply(const RMat& a, const RVec& x) {
    if (a.cols != static_cast<int>(x.size())) throw std::logic_error("rmat_apply: shape mismatch");
    RVec out(a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out[i] += a.at(i, j) * x[j];
    return out;
}

BigInt det_bareiss(IMat m) {
    if (m.rows != m.cols) throw std::logic_error("det_bareiss: not square");
    int n = m.rows;
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return BigInt(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = BigInt::divexact(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    BigInt d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

std::vector<BigInt> leading_principal_minors(const IMat& m) {
    if (m.rows != m.cols) throw std::logic_error("leading_principal_minors: not square");
    std::vector<BigInt> out;
    for (int k = 1; k <= m.rows; ++k) {
        IMat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
        out.push_back(det_bareiss(std::move(sub)));
    }
    return out;
}

RMat solve_exact(const IMat& A, const IMat& B) {
    if (A.rows != A.cols || A.rows != B.rows) throw std::logic_error("solve_exact: shape mismatch");
    int n = A.rows, w = B.cols;
    IMat m(n, n + w);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = A.at(i, j);
        for (int j = 0; j < w; ++j) m.at(i, n + j) = B.at(i, j);
    }
    BigInt prev(1);
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) throw std::domain_error("solve_exact: singular matrix");
            for (int j = 0; j < n + w; ++j) std::swap(m.at(k, j), m.at(p, j));
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n + w; ++j)
                m.at(i, j) = BigInt::divexact(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        for (int i = k + 1; i < n; ++i) m.at(i, k) = BigInt(0);
        prev = m.at(k, k);
    }
    RMat x(n, w);
    for (int j = 0; j < w; ++j)
        for (int i = n - 1; i >= 0; --i) {
            Rational s(m.at(i, n + j));
            for (int k2 = i + 1; k2 < n; ++k2) s -= Rational(m.at(i, k2)) * x.at(k2, j);
            x.at(i, j) = s / Rational(m.at(i, i));
        }
    return x;
}

RMat inverse_exact(const IMat& A) { return solve_exact(A, IMat::identity(A.rows)); }

namespace {

void row_op(IMat& m, int r1, int r2, const BigInt& c) {  // row r1 += c * row r2
    for (int j = 0; j < m.cols; ++j) m.at(r1, j) += c * m.at(r2, j);
}
void col_op(IMat& m, int c1, int c2, const BigInt& c) {  // col c1 += c * col c2
    for (int i = 0; i < m.rows; ++i) m.at(i, c1) += c * m.at(i, c2);
}
void row_swap(IMat& m, int r1, int r2) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r1, j), m.at(r2, j));
}
void col_swap(IMat& m, int c1, int c2) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, c1), m.at(i, c2));
}
void row_neg(IMat& m, int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SmithForm smith_form(IMat A) {
    const int n = A.rows, c = A.cols;
    SmithForm out;
    out.U = IMat::identity(n);
    out.V = IMat::identity(c);
    IMat& D = A;

    int t = 0;
    while (t < n && t < c) {
        // find pivot: nonzero entry of smallest magnitude in D[t.., t..]
        int pr = -1, pc = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < c; ++j) {
                if (D.at(i, j).is_zero()) continue;
                if (pr < 0 || D.at(i, j).abs() < D.at(pr, pc).abs()) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        if (pr != t) {
            row_swap(D, pr, t);
            row_swap(out.U, pr, t);
        }
        if (pc != t) {
            col_swap(D, pc, t);
            col_swap(out.V, pc, t);
        }
        bool again = false;
        for (int i = t + 1; i < n; ++i) {
            if (D.at(i, t).is_zero()) continue;
            BigInt q = BigInt::fdiv(D.at(i, t), D.at(t, t));
            if (!q.is_zero()) {
                row_op(D, i, t, -q);
                row_op(out.U, i, t, -q);
            }
            if (!D.at(i, t).is_zero()) again = true;
        }
        for (int j = t + 1; j < c; ++j) {
            if (D.at(t, j).is_zero()) continue;
            BigInt q = BigInt::fdiv(D.at(t, j), D.at(t, t));
            if (!q.is_zero()) {
                col_op(D, j, t, -q);
                col_op(out.V, j, t, -q);
            }
            if (!D.at(t, j).is_zero()) again = true;
        }
        if (again) continue;  // smaller remainders appeared; repick pivot
        // divisibility fix: pivot must divide every remaining entry
        bool bad = false;
        for (int i = t + 1; i < n && !bad; ++i)
            for (int j = t + 1; j < c && !bad; ++j)
                if (!(D.at(i, j) % D.at(t, t)).is_zero()) {
                    row_op(D, t, i, BigInt(1));
                    row_op(out.U, t, i, BigInt(1));
                    bad = true;
                }
        if (bad) continue;
        if (D.at(t, t).is_negative()) {
            row_neg(D, t);
            row_neg(out.U, t);
        }
        ++t;
    }
    out.D = std::move(D);
    return out;
}

}  // namespace plumbing
