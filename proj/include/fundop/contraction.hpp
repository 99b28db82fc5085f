#pragma once

// Single-contraction model data: defect operators and spaces, purity
// classification, the characteristic function (pointwise and as a Taylor
// series), the strong limit of P^n P*^n, and boundary defect values.

#include <cmath>
#include <complex>
#include <vector>

#include "fundop/complexmat.hpp"
#include "fundop/errors.hpp"

namespace fundop {

// A validated square contraction. Everything downstream assumes |P| <= 1 up
// to rounding, so the check lives in the constructor instead of being
// re-litigated at every call site.
struct Contraction {
    Mat P;

    explicit Contraction(Mat p, double tol = 1e-10) : P(std::move(p)) {
        require_square(P, "Contraction");
        if (P.rows() == 0) throw NonSquare("Contraction: dimension must be at least 1");
        if (!all_finite(P)) throw NotContraction("Contraction: non-finite entries");
        const double n = op_norm(P);
        if (n > 1.0 + tol)
            throw NotContraction("Contraction: operator norm " + std::to_string(n) +
                                 " exceeds 1");
    }

    Index dim() const { return P.rows(); }
};

struct DefectData {
    Mat D;      // defect operator, (I - P*P)^{1/2} or (I - P P*)^{1/2}
    Mat Q;      // orthonormal basis of its range (defect space coordinates)
    Index rank = 0;
};

// Defect data of P (adjoint = false) or of P* (adjoint = true). Operators
// "on the defect space" are stored rank x rank in the Q coordinates and embed
// into the full space as Q X Q*.
//
// The rank cut is an absolute threshold on the eigenvalues of I - P*P. The
// gram matrix of a contraction lives on a fixed scale (norm at most 2 with
// rounding noise near machine epsilon), so a relative cut would misfire
// exactly where it matters: for a unitary P the largest eigenvalue is itself
// noise, and anything relative to it promotes that noise to defect rank.
// Taking the square root first would be worse still - it lifts a 1e-16
// perturbation of the gram to a 1e-8 singular value of D.
inline DefectData defect(const Contraction& c, bool adjoint = false, double rank_tol = 1e-10) {
    const Mat& p = c.P;
    Mat gram = adjoint ? Mat(identity_like(p) - p * p.adjoint())
                       : Mat(identity_like(p) - p.adjoint() * p);
    gram = 0.5 * (gram + gram.adjoint());
    HermEig eig = herm_eig(gram);
    const Index n = p.rows();

    std::vector<Index> keep;
    for (Index i = 0; i < n; ++i)
        if (eig.values(i) > rank_tol) keep.push_back(i);

    DefectData dd;
    dd.rank = static_cast<Index>(keep.size());
    dd.Q = Mat(n, dd.rank);
    dd.D = Mat::Zero(n, n);
    for (Index j = 0; j < dd.rank; ++j) {
        Vec col = eig.vectors.col(keep[static_cast<size_t>(j)]);
        // phase-fix each basis column (largest entry real positive) so defect
        // coordinates are reproducible across runs
        Index top = 0;
        col.cwiseAbs().maxCoeff(&top);
        Complex pivot = col(top);
        double mag = std::abs(pivot);
        if (mag > 0) col *= std::conj(pivot) / mag;
        dd.Q.col(j) = col;
        dd.D += std::sqrt(eig.values(keep[static_cast<size_t>(j)])) *
                (col * col.adjoint());
    }
    return dd;
}

struct Classification {
    double norm = 0.0;
    double rho = 0.0;            // spectral radius
    bool is_pure = false;        // rho < 1 - tol
    bool is_cnu = false;         // no unimodular eigenvalues
    Index unitary_part_dim = 0;  // eigenvalues with |lambda| >= 1 - tol
};

// In finite dimension a contraction splits orthogonally as unitary + pure,
// so "completely non-unitary" and "pure" coincide; both are reported.
inline Classification classify(const Contraction& c, double tol = 1e-8) {
    Classification cl;
    cl.norm = op_norm(c.P);
    if (c.dim() == 1) {
        cl.rho = std::abs(c.P(0, 0));
        cl.unitary_part_dim = cl.rho >= 1.0 - tol ? 1 : 0;
    } else {
        Eigen::ComplexEigenSolver<Mat> es(c.P, false);
        if (es.info() != Eigen::Success)
            throw NoConvergence("classify: eigensolver failed to converge");
        cl.rho = 0.0;
        for (Index i = 0; i < es.eigenvalues().size(); ++i) {
            double m = std::abs(es.eigenvalues()(i));
            cl.rho = std::max(cl.rho, m);
            if (m >= 1.0 - tol) ++cl.unitary_part_dim;
        }
    }
    cl.is_pure = cl.rho < 1.0 - tol;
    cl.is_cnu = cl.unitary_part_dim == 0;
    return cl;
}

namespace detail {

// Solve (I - z P*) X = rhs with one step of iterative refinement. Throws
// ResolventSingular when z is (numerically) a reciprocal eigenvalue of P*.
inline Mat resolvent_solve(const Mat& p, Complex z, const Mat& rhs) {
    Mat lhs = Mat::Identity(p.rows(), p.rows()) - z * p.adjoint();
    Eigen::PartialPivLU<Mat> lu(lhs);
    Mat x = lu.solve(rhs);
    if (!x.allFinite())
        throw ResolventSingular("resolvent_solve: I - z P* is singular");
    x += lu.solve(rhs - lhs * x);
    const double resid = op_norm(lhs * x - rhs);
    const double scale = std::max(1.0, op_norm(rhs)) * std::max(1.0, op_norm(x));
    if (resid > 1e-10 * scale)
        throw ResolventSingular("resolvent_solve: solve residual " + std::to_string(resid));
    return x;
}

} // namespace detail

// Characteristic function
//   Theta_P(z) = [-P + z D_{P*} (I - z P*)^{-1} D_P] restricted to D_P,
// returned in defect coordinates: rank(D_{P*}) x rank(D_P). Well defined
// whenever 1/z avoids the spectrum of P*; in particular on the open disc and,
// for t away from unimodular eigenvalues, on the boundary.
inline Mat char_fn_eval(const Contraction& c, Complex z) {
    DefectData dp = defect(c, false);
    DefectData dq = defect(c, true);
    Mat x = detail::resolvent_solve(c.P, z, dp.D);
    Mat full = -c.P + z * (dq.D * x);
    return dq.Q.adjoint() * full * dp.Q;
}

struct TaylorSeries {
    std::vector<Mat> coeffs; // coeffs[n] of z^n, defect coordinates
    double decay = 0.0;      // |P^N|, bounds the dropped coefficients
};

// Taylor coefficients of the characteristic function:
//   Theta_0 = -P|,  Theta_{n+1} = D_{P*} P*^n D_P|   (defect coordinates).
inline TaylorSeries char_fn_taylor(const Contraction& c, int n_max) {
    if (n_max < 0) throw PreconditionFailed("char_fn_taylor: negative degree");
    DefectData dp = defect(c, false);
    DefectData dq = defect(c, true);
    TaylorSeries ts;
    ts.coeffs.reserve(static_cast<size_t>(n_max) + 1);
    ts.coeffs.push_back(-(dq.Q.adjoint() * c.P * dp.Q));
    Mat power = Mat::Identity(c.dim(), c.dim()); // P*^{n-1}
    const Mat left = dq.Q.adjoint() * dq.D;
    const Mat right = dp.D * dp.Q;
    for (int n = 1; n <= n_max; ++n) {
        ts.coeffs.push_back(left * power * right);
        power = power * c.P.adjoint();
    }
    ts.decay = op_norm(power); // |P*^{n_max}| = |P^{n_max}|
    return ts;
}

// Strong limit of P^n P*^n. For a finite-dimensional contraction this is the
// orthogonal projection onto the unitary summand H_u, and H_u has an exact
// finite characterization: x lies in H_u iff |P^m x| = |x| = |P*^m x| for
// m = dim + 1 (the nested kernels of K_m = (I - P*^m P^m) + (I - P^m P*^m)
// decrease until they hit an invariant subspace, which takes at most dim
// steps, and a stabilized kernel is reducing and hence all of H_u). Chasing
// the limit by repeated squaring instead is numerically unusable here:
// every squaring doubles the accumulated rounding error, so the iterates
// stall at a noise floor far above the spectral gap.
inline Mat power_limit(const Contraction& c, double tol = 1e-9) {
    const Index d = c.dim();
    const Mat pm = matrix_power(c.P, static_cast<unsigned>(d) + 1);
    Mat k = 2.0 * Mat::Identity(d, d) - pm.adjoint() * pm - pm * pm.adjoint();
    k = 0.5 * (k + k.adjoint());
    HermEig eig = herm_eig(k);
    Mat proj = Mat::Zero(d, d);
    for (Index i = 0; i < d; ++i)
        if (eig.values(i) <= tol)
            proj += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
    return proj;
}

// Boundary defect Delta_P(t) = [I - Theta_P(e^{it})* Theta_P(e^{it})]^{1/2}
// in defect coordinates of P. Boundary values are assembled from O(1)
// resolvent data, so eigenvalues of I - Theta*Theta below 1e-13 are rounding
// and clamp to zero (in finite dimension the exact value is zero whenever
// it exists, and the clamp lets that come out exactly).
inline Mat boundary_defect(const Contraction& c, double t) {
    Complex z(std::cos(t), std::sin(t));
    Mat theta = char_fn_eval(c, z);
    Mat gram = Mat::Identity(theta.cols(), theta.cols()) - theta.adjoint() * theta;
    gram = 0.5 * (gram + gram.adjoint());
    HermEig eig = herm_eig(gram);
    RealVec roots(eig.values.size());
    for (Index i = 0; i < eig.values.size(); ++i) {
        double v = eig.values(i);
        roots(i) = v > 1e-13 ? std::sqrt(v) : 0.0;
    }
    Mat r = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
    return 0.5 * (r + r.adjoint());
}

} // namespace fundop
