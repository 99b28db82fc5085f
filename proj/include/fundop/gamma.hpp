#pragma once

// Fundamental operators of a commuting pair (S, P) with |P| <= 1, |S| <= 2:
// extraction from the defining equations S - S*P = D_P F D_P and
// S* - S P* = D_{P*} G D_{P*}, the relations tying F and G together, the
// coefficient-wise admissibility test, and certificates for the
// gamma-contraction / gamma-isometry / gamma-unitary classes.

#include <limits>
#include <string>
#include <vector>

#include "fundop/complexmat.hpp"
#include "fundop/contraction.hpp"
#include "fundop/errors.hpp"
#include "fundop/report.hpp"

namespace fundop {

// Commuting-pair candidate. Deliberately not validated on construction:
// certificates must be able to inspect pairs that violate the class bounds
// and report which bound broke.
struct GammaPair {
    Mat S;
    Mat P;
};

inline void require_pair_shape(const GammaPair& pair, const char* who) {
    require_square(pair.S, who);
    require_square(pair.P, who);
    if (pair.S.rows() != pair.P.rows())
        throw DimMismatch(std::string(who) + ": S and P sizes differ");
    if (!all_finite(pair.S) || !all_finite(pair.P))
        throw PreconditionFailed(std::string(who) + ": non-finite entries");
}

inline Mat embed_defect_op(const DefectData& dd, const Mat& x) {
    if (x.rows() != dd.rank || x.cols() != dd.rank)
        throw DimMismatch("embed_defect_op: operator does not match defect rank");
    return dd.Q * x * dd.Q.adjoint();
}

struct ExtractResult {
    Mat F;                    // defect coordinates, rank x rank
    double eq_residual = 0.0; // | D (QFQ*) D - (S - S*P) |
    double rel_residual = 0.0; // | D_P S - F D_P - F* D_P P |, the uniqueness relation
};

// Solve S - S*P = D_P F D_P for F on the defect space of P. The solution is
// unique when it exists; `eq_residual` measures exact solvability and
// `rel_residual` the first-order relation that pins uniqueness down.
inline ExtractResult extract_F(const GammaPair& pair, double tol = 1e-8) {
    require_pair_shape(pair, "extract_F");
    Contraction c(pair.P);
    DefectData dp = defect(c);
    Mat pinv = pinv_on_range(dp.D, dp.Q);
    Mat rhs = pair.S - pair.S.adjoint() * pair.P;
    ExtractResult out;
    out.F = dp.Q.adjoint() * pinv * rhs * pinv * dp.Q;
    Mat emb = dp.Q * out.F * dp.Q.adjoint();
    out.eq_residual = op_norm(dp.D * emb * dp.D - rhs);
    out.rel_residual =
        op_norm(dp.D * pair.S - emb * dp.D - emb.adjoint() * dp.D * pair.P);
    const double scale = std::max(1.0, op_norm(pair.S));
    if (out.eq_residual > tol * scale)
        throw InconsistentEquation("extract_F: fundamental equation residual " +
                                   std::to_string(out.eq_residual));
    return out;
}

// Fundamental operator of the adjoint pair (S*, P*), acting on the defect
// space of P*. Same code path as extract_F by construction.
inline ExtractResult extract_G(const GammaPair& pair, double tol = 1e-8) {
    return extract_F(GammaPair{pair.S.adjoint(), pair.P.adjoint()}, tol);
}

// Relations between the two fundamental operators (F on D_P, G on D_{P*}):
//   (a)  P F = G* P          on D_P
//   (b)  D_{P*} D_P F - P F* = G* D_{P*} D_P - G P   on D_P.
inline Report fundamental_relations_check(const GammaPair& pair, const Mat& f,
                                          const Mat& g, double tol = 1e-8) {
    require_pair_shape(pair, "fundamental_relations_check");
    Contraction c(pair.P);
    DefectData dp = defect(c, false);
    DefectData dq = defect(c, true);
    Mat ef = embed_defect_op(dp, f);
    Mat eg = embed_defect_op(dq, g);
    Mat proj = dp.Q * dp.Q.adjoint();
    const double scale = std::max(1.0, op_norm(pair.S));

    Report rep;
    rep.name = "fundamental_relations";
    double res_a = op_norm(pair.P * ef - eg.adjoint() * pair.P * proj);
    rep.add("pf_equals_gadj_p", res_a, tol * scale);
    Mat lhs_b = dq.D * dp.D * ef - pair.P * ef.adjoint();
    Mat rhs_b = (eg.adjoint() * dq.D * dp.D - eg * pair.P) * proj;
    rep.add("mixed_defect_relation", op_norm(lhs_b - rhs_b), tol * scale);
    return rep;
}

// (P, F, G) candidate for the coefficient-wise admissibility test. F and G
// must live on the right defect spaces and have numerical radius at most 1.
struct AdmissibleCandidate {
    Contraction P;
    Mat F;
    Mat G;
    DefectData dp;
    DefectData dq;

    AdmissibleCandidate(Contraction p, Mat f, Mat g, double radius_tol = 1e-8)
        : P(std::move(p)), F(std::move(f)), G(std::move(g)),
          dp(defect(P, false)), dq(defect(P, true)) {
        if (F.rows() != dp.rank || F.cols() != dp.rank)
            throw DimMismatch("AdmissibleCandidate: F does not match rank of D_P");
        if (G.rows() != dq.rank || G.cols() != dq.rank)
            throw DimMismatch("AdmissibleCandidate: G does not match rank of D_P*");
        double wf = numerical_radius(F), wg = numerical_radius(G);
        if (wf > 1.0 + radius_tol)
            throw NumericalRadiusExceeded("AdmissibleCandidate: w(F) = " + std::to_string(wf));
        if (wg > 1.0 + radius_tol)
            throw NumericalRadiusExceeded("AdmissibleCandidate: w(G) = " + std::to_string(wg));
    }
};

// Coefficient horizon: smallest N with |P^{N-1}| <= 1e-8, capped. Past the
// cap the check is still sound, just certified only up to the reported tail.
inline int admissibility_horizon(const Mat& p, double decay_tol = 1e-8, int cap = 200) {
    Mat power = Mat::Identity(p.rows(), p.cols());
    for (int n = 1; n <= cap; ++n) {
        // power = P^{n-1} here
        if (op_norm(power) <= decay_tol) return n;
        power = power * p;
    }
    return cap;
}

// Check the coefficient form of the intertwining
//   Theta_P(z) (F + F* z) = (G* + G z) Theta_P(z):
//   Theta_n F + Theta_{n-1} F* = G* Theta_n + G Theta_{n-1}  for 0 <= n <= N.
// A pass certifies the identity on the whole disc up to the reported tail
// decay |P^{N-1}|.
inline Report admissibility_check(const AdmissibleCandidate& cand, int degree = -1,
                                  double tol = 1e-8) {
    const int horizon = degree >= 0 ? degree : admissibility_horizon(cand.P.P);
    TaylorSeries ts = char_fn_taylor(cand.P, horizon);
    const Mat f_adj = cand.F.adjoint();
    const Mat g_adj = cand.G.adjoint();

    double max_resid = 0.0;
    int first_fail = -1;
    double last_coeff_norm = 0.0;
    for (int n = 0; n <= horizon; ++n) {
        const Mat& th_n = ts.coeffs[static_cast<size_t>(n)];
        Mat lhs = th_n * cand.F;
        Mat rhs = g_adj * th_n;
        if (n > 0) {
            const Mat& th_prev = ts.coeffs[static_cast<size_t>(n - 1)];
            lhs += th_prev * f_adj;
            rhs += cand.G * th_prev;
        }
        double r = op_norm(lhs - rhs);
        if (r > tol && first_fail < 0) first_fail = n;
        max_resid = std::max(max_resid, r);
        if (n == horizon) last_coeff_norm = op_norm(th_n);
    }

    Report rep;
    rep.name = "admissibility";
    rep.add("coefficient_identities", max_resid, tol);
    rep.metrics["horizon"] = horizon;
    rep.metrics["tail_decay"] = ts.decay;
    rep.metrics["last_coefficient_norm"] = last_coeff_norm;
    rep.metrics["first_failing_coefficient"] = first_fail;
    return rep;
}

inline Report admissibility_check(const Contraction& p, const Mat& f, const Mat& g,
                                  int degree = -1, double tol = 1e-8) {
    return admissibility_check(AdmissibleCandidate(p, f, g), degree, tol);
}

// Certificate that (S, P) is a gamma-contraction in the operational sense:
// commuting, |P| <= 1, |S| <= 2, both fundamental equations exactly
// solvable, and both fundamental operators of numerical radius <= 1. All
// checks are evaluated so a failing report shows everything that broke; the
// spectral radius of S is reported as a metric for pairs where |S| > 2 but
// the weaker spectral bound still holds.
inline Report gamma_contraction_certificate(const GammaPair& pair, double tol = 1e-8) {
    require_pair_shape(pair, "gamma_contraction_certificate");
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double norm_s = op_norm(pair.S);
    const double norm_p = op_norm(pair.P);
    const double scale = std::max(1.0, norm_s);

    Report rep;
    rep.name = "gamma_contraction";
    rep.add("commuting", op_norm(pair.S * pair.P - pair.P * pair.S), 1e-10 * scale);
    rep.add("p_contractive", std::max(0.0, norm_p - 1.0), 1e-10);
    rep.add("s_norm_at_most_2", std::max(0.0, norm_s - 2.0), tol);
    rep.metrics["op_norm_S"] = norm_s;
    rep.metrics["op_norm_P"] = norm_p;
    rep.metrics["spectral_radius_S"] = spectral_radius(pair.S);

    try {
        ExtractResult ef = extract_F(pair, inf);
        ExtractResult eg = extract_G(pair, inf);
        rep.add("fundamental_eq", ef.eq_residual, tol * scale);
        rep.add("fundamental_eq_adjoint", eg.eq_residual, tol * scale);
        double wf = numerical_radius(ef.F), wg = numerical_radius(eg.F);
        rep.add("radius_F", std::max(0.0, wf - 1.0), tol);
        rep.add("radius_G", std::max(0.0, wg - 1.0), tol);
        rep.metrics["w_F"] = wf;
        rep.metrics["w_G"] = wg;
    } catch (const Error&) {
        // P is too far from a contraction for defect data to make sense.
        rep.add("fundamental_eq", inf, tol * scale);
    }
    return rep;
}

namespace detail {

inline double compressed_norm(const Mat& x, const Mat& proj) {
    if (proj.size() == 0) return op_norm(x);
    return op_norm(proj * x * proj);
}

} // namespace detail

// Gamma-isometry certificate: commuting, P an isometry, |S| <= 2 and
// S = S* P. An optional orthogonal projection restricts every residual to a
// subspace (used for truncated models, where the top degree block is a
// truncation edge rather than a defect of the identity).
inline Report gamma_isometry_certificate(const GammaPair& pair, double tol = 1e-8,
                                         const Mat& proj = Mat()) {
    require_pair_shape(pair, "gamma_isometry_certificate");
    const double scale = std::max(1.0, op_norm(pair.S));
    Report rep;
    rep.name = "gamma_isometry";
    rep.add("commuting",
            detail::compressed_norm(pair.S * pair.P - pair.P * pair.S, proj),
            1e-10 * scale);
    rep.add("p_isometry",
            detail::compressed_norm(pair.P.adjoint() * pair.P - identity_like(pair.P), proj),
            tol);
    double s_norm = proj.size() == 0 ? op_norm(pair.S) : op_norm(proj * pair.S * proj);
    rep.add("s_norm_at_most_2", std::max(0.0, s_norm - 2.0), tol);
    rep.add("s_equals_sadj_p",
            detail::compressed_norm(pair.S - pair.S.adjoint() * pair.P, proj),
            tol * scale);
    return rep;
}

inline Report gamma_unitary_certificate(const GammaPair& pair, double tol = 1e-8) {
    Report rep = gamma_isometry_certificate(pair, tol);
    rep.name = "gamma_unitary";
    rep.add("p_coisometry",
            op_norm(pair.P * pair.P.adjoint() - identity_like(pair.P)), tol);
    return rep;
}

} // namespace fundop
