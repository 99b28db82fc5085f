#pragma once

// Dense complex linear algebra kernels used by every other header: Hermitian
// eigendecomposition, PSD square roots, operator norms, numerical radius and
// range-space helpers. All matrices are Eigen::MatrixXcd; "norm" always means
// the operator (spectral) norm.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "fundop/errors.hpp"

namespace fundop {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool all_finite(const Mat& m) { return m.allFinite(); }

inline Mat identity_like(const Mat& m) { return Mat::Identity(m.rows(), m.rows()); }

inline void require_square(const Mat& m, const char* who) {
    if (m.rows() != m.cols())
        throw NonSquare(std::string(who) + ": expected a square matrix, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

// Largest singular value; 0 for matrices with an empty dimension.
inline double op_norm(const Mat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
    if (std::min(a.rows(), a.cols()) > 16) {
        Eigen::BDCSVD<Mat> svd(a);
        return svd.singularValues()(0);
    }
    Eigen::JacobiSVD<Mat> svd(a);
    return svd.singularValues()(0);
}

inline Mat matrix_power(Mat base, unsigned long long n) {
    require_square(base, "matrix_power");
    Mat acc = Mat::Identity(base.rows(), base.cols());
    while (n > 0) {
        if (n & 1ull) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

struct HermEig {
    RealVec values; // ascending
    Mat vectors;    // unitary, columns match `values`
};

// Eigendecomposition of a Hermitian matrix. The input is symmetrized before
// factoring so rounding-level asymmetry cannot leak into the eigenvectors,
// but anything beyond `tol * max(1, |H|)` of asymmetry is a caller bug.
inline HermEig herm_eig(const Mat& h, double tol = 1e-10) {
    require_square(h, "herm_eig");
    double dev = op_norm(h - h.adjoint());
    if (dev > tol * std::max(1.0, op_norm(h)))
        throw NotHermitian("herm_eig: asymmetry " + std::to_string(dev) +
                           " exceeds tolerance");
    Mat sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(sym);
    if (es.info() != Eigen::Success)
        throw NoConvergence("herm_eig: eigensolver failed to converge");
    return HermEig{es.eigenvalues(), es.eigenvectors()};
}

// Largest eigenvalue of a Hermitian matrix, assumed valid. Closed forms for
// the 1x1 and 2x2 cases keep the numerical-radius search cheap.
inline double herm_lambda_max(const Mat& h) {
    const Index n = h.rows();
    if (n == 0) return 0.0;
    if (n == 1) return h(0, 0).real();
    if (n == 2) {
        double a = h(0, 0).real(), d = h(1, 1).real();
        double mid = 0.5 * (a + d), half = 0.5 * (a - d);
        return mid + std::sqrt(half * half + std::norm(h(0, 1)));
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(n - 1);
}

// Hermitian PSD square root. Eigenvalues in [-tol * max(1,|H|), 0) are
// rounding debris and get clamped to zero; anything more negative is a
// genuine violation.
inline Mat psd_sqrt(const Mat& h, double tol = 1e-10) {
    HermEig eig = herm_eig(h, tol);
    const double floor = tol * std::max(1.0, op_norm(h));
    RealVec roots(eig.values.size());
    for (Index i = 0; i < eig.values.size(); ++i) {
        double v = eig.values(i);
        if (v < -floor)
            throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(v) +
                         " below -" + std::to_string(floor));
        roots(i) = v > 0.0 ? std::sqrt(v) : 0.0;
    }
    Mat r = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
    return 0.5 * (r + r.adjoint());
}

inline double spectral_radius(const Mat& a) {
    require_square(a, "spectral_radius");
    if (a.rows() == 0) return 0.0;
    if (a.rows() == 1) return std::abs(a(0, 0));
    Eigen::ComplexEigenSolver<Mat> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw NoConvergence("spectral_radius: eigensolver failed to converge");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

namespace detail {

// f(theta) = lambda_max(Re(e^{i theta} A)), the support function whose global
// maximum over the circle is the numerical radius.
inline double radius_objective(const Mat& a, const Mat& a_adj, double theta) {
    Complex phase(std::cos(theta), std::sin(theta));
    Mat h = 0.5 * (phase * a + std::conj(phase) * a_adj);
    return herm_lambda_max(h);
}

} // namespace detail

// Numerical radius w(A) = max_theta lambda_max(Re(e^{i theta} A)).
//
// The objective is a pointwise maximum of cosines: for every unit vector u,
// u* Re(e^{i theta} A) u = |u*Au| cos(theta + arg u*Au) with amplitude at
// most |A|. On an interval, any such cosine exceeds the larger of its
// endpoint values by at most |A| (1 - cos(width/2)), so the same holds for
// the max. That bound is quadratic in the width, which makes interval
// bisection against the incumbent a certified global search: starting from a
// 720-point grid, halving an interval shrinks its headroom fourfold, and
// only O(1) intervals around the maximizer survive each level.
inline double numerical_radius(const Mat& a, double accuracy = 1e-10) {
    require_square(a, "numerical_radius");
    if (a.rows() == 0) return 0.0;
    if (a.rows() == 1) return std::abs(a(0, 0));
    const double lip = op_norm(a);
    if (lip == 0.0) return 0.0;

    const Mat a_adj = a.adjoint();
    constexpr double two_pi = 6.283185307179586476925286766559;
    const int n0 = 720;
    const double step = two_pi / n0;

    struct Interval {
        double left, width, f_left, f_right;
    };
    auto headroom = [lip](double width) { return lip * (1.0 - std::cos(0.5 * width)); };

    std::vector<double> grid(n0 + 1);
    for (int k = 0; k < n0; ++k) grid[static_cast<size_t>(k)] =
        detail::radius_objective(a, a_adj, k * step);
    grid[n0] = grid[0];
    double best = *std::max_element(grid.begin(), grid.end());

    std::vector<Interval> frontier;
    frontier.reserve(n0);
    for (int k = 0; k < n0; ++k)
        frontier.push_back(Interval{k * step, step, grid[static_cast<size_t>(k)],
                                    grid[static_cast<size_t>(k) + 1]});

    std::vector<Interval> next;
    long evals = n0;
    const long eval_cap = 200000; // safety net, never reached in practice
    while (!frontier.empty() && evals < eval_cap) {
        next.clear();
        const double gap = headroom(frontier.front().width);
        for (const Interval& iv : frontier) {
            if (std::max(iv.f_left, iv.f_right) + gap <= best + accuracy) continue;
            const double mid = iv.left + 0.5 * iv.width;
            const double fm = detail::radius_objective(a, a_adj, mid);
            ++evals;
            best = std::max(best, fm);
            next.push_back(Interval{iv.left, 0.5 * iv.width, iv.f_left, fm});
            next.push_back(Interval{mid, 0.5 * iv.width, fm, iv.f_right});
        }
        frontier.swap(next);
    }
    return best;
}

struct RangeBasis {
    Mat Q; // orthonormal columns spanning the numerical range of D
    Index rank = 0;
};

// Orthonormal basis for the range of a Hermitian PSD matrix. Eigenvalues at
// or below `tol * lambda_max` count as zero. Columns keep the solver's order
// for tied eigenvalues and are phase-fixed (largest entry real positive), so
// the basis is reproducible and coordinate projectors come out as the plain
// coordinate frame.
inline RangeBasis range_basis(const Mat& d, double tol = 1e-10) {
    HermEig eig = herm_eig(d);
    const Index n = d.rows();
    double lam_max = eig.values.size() ? eig.values(eig.values.size() - 1) : 0.0;
    RangeBasis rb;
    if (lam_max <= 0.0) {
        rb.Q = Mat(n, 0);
        return rb;
    }
    const double cut = tol * lam_max;
    std::vector<Index> keep;
    for (Index i = 0; i < eig.values.size(); ++i)
        if (eig.values(i) > cut) keep.push_back(i);
    rb.rank = static_cast<Index>(keep.size());
    rb.Q = Mat(n, rb.rank);
    for (Index j = 0; j < rb.rank; ++j) {
        Vec col = eig.vectors.col(keep[static_cast<size_t>(j)]);
        Index top = 0;
        col.cwiseAbs().maxCoeff(&top);
        Complex pivot = col(top);
        double mag = std::abs(pivot);
        if (mag > 0) col *= std::conj(pivot) / mag;
        rb.Q.col(j) = col;
    }
    return rb;
}

// Moore-Penrose inverse restricted to the range spanned by Q (which must be
// an invariant subspace of the Hermitian matrix D, as produced by
// range_basis). Satisfies D+ D = D D+ = Q Q*.
inline Mat pinv_on_range(const Mat& d, const Mat& q) {
    require_square(d, "pinv_on_range");
    if (d.rows() != q.rows())
        throw DimMismatch("pinv_on_range: basis rows do not match matrix");
    const Index r = q.cols();
    if (r == 0) return Mat::Zero(d.rows(), d.cols());
    Mat b = q.adjoint() * d * q;
    Mat b_inv = b.ldlt().solve(Mat::Identity(r, r));
    return q * b_inv * q.adjoint();
}

} // namespace fundop
