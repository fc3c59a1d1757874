#pragma once

#include "catlim/matrix.hpp"

#include <optional>
#include <vector>

namespace catlim {

/// Smith decomposition U*A*V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... and every d_i >= 0.
template <class Scalar>
struct SmithDecomposition {
    Mat<Scalar> U, D, V;
    Index rank = 0;

    std::vector<Scalar> invariant_factors() const {
        std::vector<Scalar> out;
        for (Index i = 0; i < rank; ++i) out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

// Locates the entry of smallest nonzero absolute value in A[t:, t:].
template <class Scalar>
bool find_pivot(const Mat<Scalar>& a, Index t, Index& pr, Index& pc) {
    bool found = false;
    Scalar best(0);
    for (Index j = t; j < a.cols(); ++j) {
        for (Index i = t; i < a.rows(); ++i) {
            if (a(i, j) == Scalar(0)) continue;
            Scalar v = abs(a(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pr = i;
                pc = j;
            }
        }
    }
    return found;
}

}  // namespace detail

/// Elementary-operation Smith normal form, pivoting on the smallest nonzero
/// entry. Exact over any ordered integral scalar.
template <class Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Mat<Scalar>& a) {
    const Index m = a.rows(), n = a.cols();
    SmithDecomposition<Scalar> s;
    s.U = Mat<Scalar>::Identity(m, m);
    s.V = Mat<Scalar>::Identity(n, n);
    s.D = a;
    Mat<Scalar>& d = s.D;

    const Index steps = std::min(m, n);
    Index t = 0;
    for (; t < steps; ++t) {
        Index pr = t, pc = t;
        if (!detail::find_pivot(d, t, pr, pc)) break;
        d.row(t).swap(d.row(pr));
        s.U.row(t).swap(s.U.row(pr));
        d.col(t).swap(d.col(pc));
        s.V.col(t).swap(s.V.col(pc));

        for (;;) {
            // Clear below and to the right of the pivot; truncated division
            // shrinks remainders, so re-pivoting terminates.
            bool dirty = false;
            for (Index i = t + 1; i < m; ++i) {
                if (d(i, t) == Scalar(0)) continue;
                Scalar q = d(i, t) / d(t, t);
                if (!(q == Scalar(0))) {
                    d.row(i) -= d.row(t) * q;
                    s.U.row(i) -= s.U.row(t) * q;
                }
                if (!(d(i, t) == Scalar(0))) dirty = true;
            }
            for (Index j = t + 1; j < n; ++j) {
                if (d(t, j) == Scalar(0)) continue;
                Scalar q = d(t, j) / d(t, t);
                if (!(q == Scalar(0))) {
                    d.col(j) -= d.col(t) * q;
                    s.V.col(j) -= s.V.col(t) * q;
                }
                if (!(d(t, j) == Scalar(0))) dirty = true;
            }
            if (dirty) {
                Index pr2 = t, pc2 = t;
                detail::find_pivot(d, t, pr2, pc2);
                d.row(t).swap(d.row(pr2));
                s.U.row(t).swap(s.U.row(pr2));
                d.col(t).swap(d.col(pc2));
                s.V.col(t).swap(s.V.col(pc2));
                continue;
            }
            // Pivot is lone; enforce divisibility into the remaining block.
            Index br = t, bc = t;
            bool divides = true;
            for (Index i = t + 1; i < m && divides; ++i)
                for (Index j = t + 1; j < n && divides; ++j)
                    if (!(d(i, j) % d(t, t) == Scalar(0))) {
                        br = i;
                        bc = j;
                        divides = false;
                    }
            if (divides) break;
            (void)bc;
            d.row(t) += d.row(br);
            s.U.row(t) += s.U.row(br);
        }
        if (d(t, t) < Scalar(0)) {
            d.row(t) *= Scalar(-1);
            s.U.row(t) *= Scalar(-1);
        }
    }
    s.rank = t;
    return s;
}

template <class Scalar>
std::vector<Scalar> invariant_factors(const Mat<Scalar>& a) {
    return smith_normal_form(a).invariant_factors();
}

template <class Scalar>
Index matrix_rank(const Mat<Scalar>& a) {
    return smith_normal_form(a).rank;
}

/// Basis of the integer kernel of A, as columns. The kernel of an integer
/// matrix is a direct summand, so the basis extends to a basis of the domain.
template <class Scalar>
Mat<Scalar> kernel_basis(const Mat<Scalar>& a) {
    auto s = smith_normal_form(a);
    const Index n = a.cols();
    Mat<Scalar> k(n, n - s.rank);
    for (Index j = s.rank; j < n; ++j) k.col(j - s.rank) = s.V.col(j);
    return k;
}

/// Exact integer solve A*X = B; nullopt when no integral solution exists.
template <class Scalar>
std::optional<Mat<Scalar>> solve_exact(const SmithDecomposition<Scalar>& s, const Mat<Scalar>& b) {
    const Index m = s.D.rows(), n = s.D.cols();
    if (b.rows() != m) throw StructureError("solve_exact: row mismatch");
    Mat<Scalar> c = s.U * b;
    Mat<Scalar> w = Mat<Scalar>::Zero(n, b.cols());
    for (Index j = 0; j < b.cols(); ++j) {
        for (Index i = 0; i < m; ++i) {
            if (i < s.rank) {
                if (!(c(i, j) % s.D(i, i) == Scalar(0))) return std::nullopt;
                w(i, j) = c(i, j) / s.D(i, i);
            } else if (!(c(i, j) == Scalar(0))) {
                return std::nullopt;
            }
        }
    }
    return s.V * w;
}

template <class Scalar>
std::optional<Mat<Scalar>> solve_exact(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    return solve_exact(smith_normal_form(a), b);
}

}  // namespace catlim
