#ifndef QCAP_LINALG_HPP
#define QCAP_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qcap/errors.hpp"

namespace qcap {

using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;

/// Gaussian elimination with partial pivoting. Works for any fixed or
/// dynamic square size and any (real or complex) scalar. Throws
/// SingularSystem when a pivot vanishes or the relative residual
/// ||A x - b|| / ||b|| exceeds `residual_tol`.
template <typename MatA, typename VecB>
typename VecB::PlainObject solve_partial_pivot(const Eigen::MatrixBase<MatA>& A,
                                               const Eigen::MatrixBase<VecB>& b,
                                               double residual_tol = 1e-10) {
    using Scalar = typename MatA::Scalar;
    const Eigen::Index n = A.rows();
    if (A.cols() != n || b.rows() != n) throw InvalidArgument("solve_partial_pivot: shape mismatch");
    if (!A.allFinite() || !b.allFinite()) throw SingularSystem("non-finite entries in linear system");

    typename MatA::PlainObject lu = A;
    typename VecB::PlainObject x = b;
    const double scale = A.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p;
        const double pivot_abs = lu.col(k).tail(n - k).cwiseAbs().maxCoeff(&p);
        p += k;
        if (pivot_abs == 0.0 || pivot_abs <= std::numeric_limits<double>::epsilon() * scale * 1e-3)
            throw SingularSystem("zero pivot in column " + std::to_string(k));
        if (p != k) {
            lu.row(k).swap(lu.row(p));
            std::swap(x(k), x(p));
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const Scalar m = lu(i, k) / lu(k, k);
            lu.row(i).tail(n - k) -= m * lu.row(k).tail(n - k);
            x(i) -= m * x(k);
        }
    }
    for (Eigen::Index k = n - 1; k >= 0; --k) {
        Scalar s = x(k);
        for (Eigen::Index j = k + 1; j < n; ++j) s -= lu(k, j) * x(j);
        x(k) = s / lu(k, k);
    }

    const double bnorm = b.norm();
    const double residual = (A * x - b).norm();
    if (!(residual <= residual_tol * (bnorm > 0.0 ? bnorm : 1.0)))
        throw SingularSystem("linear solve residual " + std::to_string(residual) +
                             " exceeds contract");
    return x;
}

inline Vector3c complex_solve(const Matrix3c& A, const Vector3c& b) {
    return solve_partial_pivot(A, b);
}

namespace detail {

// Householder reduction of a real symmetric matrix to tridiagonal form.
// On return `diag` holds the diagonal and `off(i)` couples i and i+1.
template <typename Scalar>
void tridiagonalize(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
                    Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& diag,
                    Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& off) {
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = a.rows();
    diag.resize(n);
    off.setZero(n);
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index m = n - k - 1;
        Vec v = a.col(k).tail(m);
        const Scalar xnorm = v.norm();
        if (xnorm == Scalar(0)) {
            off(k) = 0;
            continue;
        }
        const Scalar alpha = v(0) > 0 ? -xnorm : xnorm;
        v(0) -= alpha;
        const Scalar vnorm = v.norm();
        if (vnorm == Scalar(0)) {
            off(k) = alpha;
            continue;
        }
        v /= vnorm;
        auto block = a.bottomRightCorner(m, m);
        const Vec p = block * v;
        const Vec q = p - v.dot(p) * v;
        block -= 2 * (v * q.transpose() + q * v.transpose());
        off(k) = alpha;
    }
    if (n >= 2) off(n - 2) = a(n - 1, n - 2);
    diag = a.diagonal();
}

}  // namespace detail

/// Eigenvalues (ascending) of a real symmetric matrix via Householder
/// tridiagonalization and implicit-shift QL. Only the lower triangle's
/// symmetry is assumed, not checked.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> symmetric_eigenvalues(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a, int max_iterations = 60) {
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw InvalidArgument("symmetric_eigenvalues: matrix must be square");
    Vec d, e;
    detail::tridiagonalize<Scalar>(a, d, e);
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();

    for (Eigen::Index l = 0; l < n; ++l) {
        int iter = 0;
        Eigen::Index m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const Scalar dd = std::abs(d(m)) + std::abs(d(m + 1));
                if (std::abs(e(m)) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == max_iterations)
                    throw NumericalError("symmetric_eigenvalues: QL iteration did not converge");
                Scalar g = (d(l + 1) - d(l)) / (2 * e(l));
                Scalar r = std::hypot(g, Scalar(1));
                g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
                Scalar s = 1, c = 1, p = 0;
                Eigen::Index i;
                bool underflow = false;
                for (i = m - 1; i >= l; --i) {
                    Scalar f = s * e(i);
                    const Scalar b = c * e(i);
                    r = std::hypot(f, g);
                    e(i + 1) = r;
                    if (r == Scalar(0)) {
                        d(i + 1) -= p;
                        e(m) = 0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d(i + 1) - p;
                    r = (d(i) - g) * s + 2 * c * b;
                    p = s * r;
                    d(i + 1) = g + p;
                    g = c * r - b;
                }
                if (underflow) continue;
                d(l) -= p;
                e(l) = g;
                e(m) = 0;
            }
        } while (m != l);
    }
    std::sort(d.data(), d.data() + n);
    return d;
}

}  // namespace qcap

#endif  // QCAP_LINALG_HPP
