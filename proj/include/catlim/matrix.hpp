#pragma once

#include "catlim/integer.hpp"

#include <Eigen/Dense>

#include <initializer_list>
#include <stdexcept>
#include <string>

namespace catlim {

using Index = Eigen::Index;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IMat = Mat<Int>;
using IVec = Vec<Int>;

/// Raised when an input exceeds a configured size limit.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when data is structurally malformed (bad indices, shape mismatch).
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an external document cannot be parsed.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class Scalar>
bool is_zero_matrix(const Mat<Scalar>& a) {
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            if (!(a(i, j) == Scalar(0))) return false;
    return true;
}

/// Test/IO convenience: dense matrix from a row-major initializer list.
inline IMat imat(std::initializer_list<std::initializer_list<long long>> rows) {
    Index r = static_cast<Index>(rows.size());
    Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    IMat m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c)
            throw StructureError("imat: ragged initializer");
        Index j = 0;
        for (long long x : row) m(i, j++) = Int(x);
        ++i;
    }
    return m;
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
template <class Scalar>
Scalar determinant(Mat<Scalar> a) {
    if (a.rows() != a.cols()) throw StructureError("determinant: matrix not square");
    const Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar sign(1), prev(1);
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Index p = k + 1;
            while (p < n && a(p, k) == Scalar(0)) ++p;
            if (p == n) return Scalar(0);
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

template <class Scalar>
bool is_unimodular(const Mat<Scalar>& a) {
    if (a.rows() != a.cols()) return false;
    Scalar d = determinant<Scalar>(a);
    return d == Scalar(1) || d == Scalar(-1);
}

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace catlim
