#pragma once

// Commuting triples (A, B, P) with the pair of fundamental equations
//   A - B* P = D_P F1 D_P,   B - A* P = D_P F2 D_P,
// their extraction, the relations tying (F1, F2) to the adjoint-side pair
// (G1, G2), coefficient-wise admissibility, reconstruction of (A, B) from
// (P, G1, G2), and scalar membership in the closed tetrablock.

#include <array>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fundop/complexmat.hpp"
#include "fundop/contraction.hpp"
#include "fundop/errors.hpp"
#include "fundop/gamma.hpp"
#include "fundop/hardy.hpp"
#include "fundop/report.hpp"
#include "fundop/rng.hpp"

namespace fundop {

struct TetraTriple {
    Mat A;
    Mat B;
    Mat P;
};

inline void require_triple_shape(const TetraTriple& t, const char* who) {
    require_square(t.A, who);
    require_square(t.B, who);
    require_square(t.P, who);
    if (t.A.rows() != t.P.rows() || t.B.rows() != t.P.rows())
        throw DimMismatch(std::string(who) + ": A, B, P must share one space");
    if (!all_finite(t.A) || !all_finite(t.B) || !all_finite(t.P))
        throw PreconditionFailed(std::string(who) + ": non-finite entries");
}

inline TetraTriple adjoint_triple(const TetraTriple& t) {
    return TetraTriple{t.A.adjoint(), t.B.adjoint(), t.P.adjoint()};
}

struct TetraExtract {
    Mat F1;
    Mat F2;
    double eq1_residual = 0.0;   // | D (Q F1 Q*) D - (A - B*P) |
    double eq2_residual = 0.0;   // | D (Q F2 Q*) D - (B - A*P) |
    double joint1_residual = 0.0; // | D_P A - F1 D_P - F2* D_P P |
    double joint2_residual = 0.0; // | D_P B - F2 D_P - F1* D_P P |
};

// Solve both fundamental equations on the defect space of P. The joint
// residuals measure the first-order system that makes the solution pair
// unique; they vanish together with the equation residuals on genuine
// triples.
inline TetraExtract extract_F12(const TetraTriple& t, double tol = 1e-8) {
    require_triple_shape(t, "extract_F12");
    Contraction c(t.P);
    DefectData dp = defect(c);
    Mat pinv = pinv_on_range(dp.D, dp.Q);
    Mat rhs1 = t.A - t.B.adjoint() * t.P;
    Mat rhs2 = t.B - t.A.adjoint() * t.P;

    TetraExtract out;
    out.F1 = dp.Q.adjoint() * pinv * rhs1 * pinv * dp.Q;
    out.F2 = dp.Q.adjoint() * pinv * rhs2 * pinv * dp.Q;
    Mat e1 = dp.Q * out.F1 * dp.Q.adjoint();
    Mat e2 = dp.Q * out.F2 * dp.Q.adjoint();
    out.eq1_residual = op_norm(dp.D * e1 * dp.D - rhs1);
    out.eq2_residual = op_norm(dp.D * e2 * dp.D - rhs2);
    out.joint1_residual = op_norm(dp.D * t.A - e1 * dp.D - e2.adjoint() * dp.D * t.P);
    out.joint2_residual = op_norm(dp.D * t.B - e2 * dp.D - e1.adjoint() * dp.D * t.P);

    const double scale = std::max({1.0, op_norm(t.A), op_norm(t.B)});
    if (out.eq1_residual > tol * scale || out.eq2_residual > tol * scale)
        throw InconsistentEquation("extract_F12: fundamental equation residuals " +
                                   std::to_string(out.eq1_residual) + ", " +
                                   std::to_string(out.eq2_residual));
    return out;
}

// Fundamental pair of the adjoint triple (A*, B*, P*) on the defect space
// of P*.
inline TetraExtract extract_G12(const TetraTriple& t, double tol = 1e-8) {
    return extract_F12(adjoint_triple(t), tol);
}

// First-order relations: the joint system on D_P and P F_i = G_i* P.
inline Report tetra_relations_check(const TetraTriple& t, const Mat& f1, const Mat& f2,
                                    const Mat& g1, const Mat& g2, double tol = 1e-8) {
    require_triple_shape(t, "tetra_relations_check");
    Contraction c(t.P);
    DefectData dp = defect(c, false);
    DefectData dq = defect(c, true);
    Mat e1 = embed_defect_op(dp, f1);
    Mat e2 = embed_defect_op(dp, f2);
    Mat h1 = embed_defect_op(dq, g1);
    Mat h2 = embed_defect_op(dq, g2);
    Mat proj = dp.Q * dp.Q.adjoint();
    const double scale = std::max({1.0, op_norm(t.A), op_norm(t.B)});

    Report rep;
    rep.name = "tetra_relations";
    rep.add("joint_system_a",
            op_norm(dp.D * t.A - e1 * dp.D - e2.adjoint() * dp.D * t.P), tol * scale);
    rep.add("joint_system_b",
            op_norm(dp.D * t.B - e2 * dp.D - e1.adjoint() * dp.D * t.P), tol * scale);
    rep.add("pf1_equals_g1adj_p", op_norm(t.P * e1 - h1.adjoint() * t.P * proj),
            tol * scale);
    rep.add("pf2_equals_g2adj_p", op_norm(t.P * e2 - h2.adjoint() * t.P * proj),
            tol * scale);
    return rep;
}

// Cross relations through both defect operators, restricted to D_{P*}:
//   F1* D_P D_{P*} - F2 P* = D_P D_{P*} G1 - P* G2*   and the 1 <-> 2 twin.
inline Report tetra_defect_relations_check(const TetraTriple& t, const Mat& f1,
                                           const Mat& f2, const Mat& g1, const Mat& g2,
                                           double tol = 1e-8) {
    require_triple_shape(t, "tetra_defect_relations_check");
    Contraction c(t.P);
    DefectData dp = defect(c, false);
    DefectData dq = defect(c, true);
    Mat e1 = embed_defect_op(dp, f1);
    Mat e2 = embed_defect_op(dp, f2);
    Mat h1 = embed_defect_op(dq, g1);
    Mat h2 = embed_defect_op(dq, g2);
    Mat proj = dq.Q * dq.Q.adjoint();
    Mat dd = dp.D * dq.D;
    const double scale = std::max({1.0, op_norm(t.A), op_norm(t.B)});

    Report rep;
    rep.name = "tetra_defect_relations";
    Mat r1 = (e1.adjoint() * dd - e2 * t.P.adjoint() - dd * h1 +
              t.P.adjoint() * h2.adjoint()) * proj;
    Mat r2 = (e2.adjoint() * dd - e1 * t.P.adjoint() - dd * h2 +
              t.P.adjoint() * h1.adjoint()) * proj;
    rep.add("cross_defect_relation_a", op_norm(r1), tol * scale);
    rep.add("cross_defect_relation_b", op_norm(r2), tol * scale);
    return rep;
}

namespace detail {

inline void require_tetra_ranks(const DefectData& dp, const DefectData& dq, const Mat& f1,
                                const Mat& f2, const Mat& g1, const Mat& g2,
                                const char* who) {
    auto fits = [](const Mat& m, Index r) { return m.rows() == r && m.cols() == r; };
    if (!fits(f1, dp.rank) || !fits(f2, dp.rank))
        throw DimMismatch(std::string(who) + ": F1, F2 must act on the defect space of P");
    if (!fits(g1, dq.rank) || !fits(g2, dq.rank))
        throw DimMismatch(std::string(who) + ": G1, G2 must act on the defect space of P*");
}

} // namespace detail

// Coefficient form of the pair of intertwinings
//   Theta_n F1 + Theta_{n-1} F2* = G1* Theta_n + G2 Theta_{n-1}
//   Theta_n F2 + Theta_{n-1} F1* = G2* Theta_n + G1 Theta_{n-1}
// for 0 <= n <= N, certified up to the reported tail decay.
inline Report tetra_admissibility_check(const Contraction& p, const Mat& f1, const Mat& f2,
                                        const Mat& g1, const Mat& g2, int degree = -1,
                                        double tol = 1e-8) {
    DefectData dp = defect(p, false);
    DefectData dq = defect(p, true);
    detail::require_tetra_ranks(dp, dq, f1, f2, g1, g2, "tetra_admissibility_check");
    const int horizon = degree >= 0 ? degree : admissibility_horizon(p.P);
    TaylorSeries ts = char_fn_taylor(p, horizon);

    double max_a = 0.0, max_b = 0.0;
    int first_fail = -1;
    for (int n = 0; n <= horizon; ++n) {
        const Mat& th_n = ts.coeffs[static_cast<size_t>(n)];
        Mat lhs_a = th_n * f1;
        Mat rhs_a = g1.adjoint() * th_n;
        Mat lhs_b = th_n * f2;
        Mat rhs_b = g2.adjoint() * th_n;
        if (n > 0) {
            const Mat& th_prev = ts.coeffs[static_cast<size_t>(n - 1)];
            lhs_a += th_prev * f2.adjoint();
            rhs_a += g2 * th_prev;
            lhs_b += th_prev * f1.adjoint();
            rhs_b += g1 * th_prev;
        }
        double ra = op_norm(lhs_a - rhs_a);
        double rb = op_norm(lhs_b - rhs_b);
        if (std::max(ra, rb) > tol && first_fail < 0) first_fail = n;
        max_a = std::max(max_a, ra);
        max_b = std::max(max_b, rb);
    }

    Report rep;
    rep.name = "tetra_admissibility";
    rep.add("coefficient_identities_a", max_a, tol);
    rep.add("coefficient_identities_b", max_b, tol);
    rep.metrics["horizon"] = horizon;
    rep.metrics["tail_decay"] = ts.decay;
    rep.metrics["first_failing_coefficient"] = first_fail;
    return rep;
}

// [G1, G2] = 0 and [G1, G1*] = [G2, G2*]: exactly the conditions under
// which the reconstructed pair (A, B) commutes.
inline Report commutation_conditions_check(const Mat& g1, const Mat& g2,
                                           double tol = 1e-10) {
    require_square(g1, "commutation_conditions_check");
    if (g1.rows() != g2.rows() || g1.cols() != g2.cols())
        throw DimMismatch("commutation_conditions_check: G1, G2 must share a space");
    const double scale = std::max(1.0, op_norm(g1) * op_norm(g2));
    Report rep;
    rep.name = "commutation_conditions";
    rep.add("g1_g2_commute", op_norm(g1 * g2 - g2 * g1), tol * scale);
    Mat c1 = g1 * g1.adjoint() - g1.adjoint() * g1;
    Mat c2 = g2 * g2.adjoint() - g2.adjoint() * g2;
    rep.add("self_commutator_match", op_norm(c1 - c2), tol * scale);
    return rep;
}

// Point of the distinguished boundary: (conj(beta) e^{i phi}, beta, e^{i phi})
// for |beta| <= 1.
inline std::array<Complex, 3> distinguished_boundary_point(Complex beta, double phi) {
    Complex ph(std::cos(phi), std::sin(phi));
    return {std::conj(beta) * ph, beta, ph};
}

struct MembershipResult {
    bool member = false;
    // min over the w-grid of |z*(w)| - 1; < 0 means a z-zero dips inside the
    // disc somewhere; +infinity (sentinel) means no w produced a z-zero
    double margin = 0.0;
};

// Scalar membership in the closed tetrablock, decided through the defining
// function 1 - x1 z - x2 w + x3 z w. For fixed w the function is affine in z
// with the unique zero z*(w) = (1 - x2 w)/(x1 - x3 w); the point belongs to
// the closed domain exactly when no zero enters the open bidisc, so the scan
// requires |z*(w)| >= 1 - 1/grid at every w of a polar grid (grid angles,
// grid/4 radii, plus the origin) of the disc of radius 1 - 1/grid. A
// vanishing denominator with nonzero numerator contributes no z-zero for that
// w; both vanishing means the function is identically zero in z there,
// recorded as margin -1. The predicate is approximate with the documented
// grid resolution.
inline MembershipResult tetra_membership(Complex x1, Complex x2, Complex x3,
                                         int grid = 256) {
    if (grid < 64) throw PreconditionFailed("tetra_membership: grid must be at least 64");
    const double slack = 1.0 / grid;
    const int n_ang = grid;
    const int n_rad = grid / 4;
    const double r_max = 1.0 - slack;
    const double two_pi = 6.283185307179586476925286766559;
    double margin = std::numeric_limits<double>::infinity();
    auto visit = [&](Complex w) {
        const double num = std::abs(1.0 - x2 * w);
        const double den = std::abs(x1 - x3 * w);
        if (den == 0.0) {
            if (num == 0.0) margin = std::min(margin, -1.0);
            return;
        }
        margin = std::min(margin, num / den - 1.0);
    };
    visit(Complex(0.0, 0.0));
    for (int i = 1; i <= n_rad; ++i) {
        double r = r_max * static_cast<double>(i) / n_rad;
        for (int k = 0; k < n_ang; ++k) {
            double t = two_pi * k / n_ang;
            visit(Complex(r * std::cos(t), r * std::sin(t)));
        }
    }
    MembershipResult out;
    out.margin = margin;
    out.member = margin >= -slack;
    return out;
}

// Spot check of the von Neumann inequality: a fixed-seed family of cubic
// polynomials evaluated on (A*, B*, P*) must be dominated by the polynomial's
// sup over a sampled distinguished boundary. Sampled points are filtered
// through tetra_membership before use.
inline Report tetra_vn_check(const TetraTriple& t, int n_poly = 20, double tol = 1e-6) {
    require_triple_shape(t, "tetra_vn_check");
    const Index n = t.P.rows();

    std::vector<Mat> pa(4), pb(4), pp(4);
    pa[0] = pb[0] = pp[0] = Mat::Identity(n, n);
    for (int k = 1; k <= 3; ++k) {
        pa[static_cast<size_t>(k)] = pa[static_cast<size_t>(k - 1)] * t.A.adjoint();
        pb[static_cast<size_t>(k)] = pb[static_cast<size_t>(k - 1)] * t.B.adjoint();
        pp[static_cast<size_t>(k)] = pp[static_cast<size_t>(k - 1)] * t.P.adjoint();
    }

    struct BoundaryPoint {
        std::array<Complex, 3> x;
        std::array<std::array<Complex, 4>, 3> pow;
    };
    std::vector<BoundaryPoint> pts;
    const int n_beta_ang = 24, n_beta_rad = 8, n_phi = 24;
    const double two_pi = 6.283185307179586476925286766559;
    for (int i = 1; i <= n_beta_rad; ++i) {
        double r = static_cast<double>(i) / n_beta_rad;
        for (int a = 0; a < n_beta_ang; ++a) {
            Complex beta = r * Complex(std::cos(two_pi * a / n_beta_ang),
                                       std::sin(two_pi * a / n_beta_ang));
            for (int f = 0; f < n_phi; ++f) {
                auto x = distinguished_boundary_point(beta, two_pi * f / n_phi);
                if (!tetra_membership(x[0], x[1], x[2], 64).member) continue;
                BoundaryPoint bp;
                bp.x = x;
                for (int c = 0; c < 3; ++c) {
                    bp.pow[static_cast<size_t>(c)][0] = Complex(1.0, 0.0);
                    for (int k = 1; k <= 3; ++k)
                        bp.pow[static_cast<size_t>(c)][static_cast<size_t>(k)] =
                            bp.pow[static_cast<size_t>(c)][static_cast<size_t>(k - 1)] *
                            x[static_cast<size_t>(c)];
                }
                pts.push_back(bp);
            }
        }
    }
    if (pts.empty()) throw PreconditionFailed("tetra_vn_check: empty boundary sample");

    Rng rng(0x7e7a5eedULL);
    double worst = std::numeric_limits<double>::infinity();
    for (int q = 0; q < n_poly; ++q) {
        std::vector<std::array<int, 3>> mono;
        std::vector<Complex> coef;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                for (int k = 0; i + j + k <= 3; ++k) {
                    mono.push_back({i, j, k});
                    coef.push_back(rng.disc(1.0));
                }

        Mat val = Mat::Zero(n, n);
        for (size_t m = 0; m < mono.size(); ++m)
            val += coef[m] * pa[static_cast<size_t>(mono[m][0])] *
                   pb[static_cast<size_t>(mono[m][1])] * pp[static_cast<size_t>(mono[m][2])];
        double lhs = op_norm(val);

        double sup = 0.0;
        for (const BoundaryPoint& bp : pts) {
            Complex s(0.0, 0.0);
            for (size_t m = 0; m < mono.size(); ++m)
                s += coef[m] * bp.pow[0][static_cast<size_t>(mono[m][0])] *
                     bp.pow[1][static_cast<size_t>(mono[m][1])] *
                     bp.pow[2][static_cast<size_t>(mono[m][2])];
            sup = std::max(sup, std::abs(s));
        }
        worst = std::min(worst, sup - lhs);
    }

    Report rep;
    rep.name = "von_neumann_spot_check";
    // worst_margin is the slack (boundary sup minus operator value); a
    // negative value of magnitude above tol is a violation of the bound.
    rep.add("polynomial_bound", std::max(0.0, -worst), tol);
    rep.metrics["worst_margin"] = worst;
    rep.metrics["boundary_points"] = static_cast<double>(pts.size());
    return rep;
}

// Certificate that (A, B, P) is a commuting triple satisfying both
// fundamental equations with numerical-radius-one solutions on either side.
inline Report tetra_triple_certificate(const TetraTriple& t, double tol = 1e-8) {
    require_triple_shape(t, "tetra_triple_certificate");
    const double scale = std::max({1.0, op_norm(t.A), op_norm(t.B)});

    Report rep;
    rep.name = "tetra_triple_certificate";
    rep.add("commuting_ab", op_norm(t.A * t.B - t.B * t.A), 1e-10 * scale * scale);
    rep.add("commuting_ap", op_norm(t.A * t.P - t.P * t.A), 1e-10 * scale);
    rep.add("commuting_bp", op_norm(t.B * t.P - t.P * t.B), 1e-10 * scale);
    rep.add("a_contractive", std::max(0.0, op_norm(t.A) - 1.0), tol);
    rep.add("b_contractive", std::max(0.0, op_norm(t.B) - 1.0), tol);
    rep.add("p_contractive", std::max(0.0, op_norm(t.P) - 1.0), 1e-10);
    rep.metrics["op_norm_A"] = op_norm(t.A);
    rep.metrics["op_norm_B"] = op_norm(t.B);
    rep.metrics["op_norm_P"] = op_norm(t.P);

    constexpr double inf = std::numeric_limits<double>::infinity();
    try {
        TetraExtract fe = extract_F12(t, inf);
        TetraExtract ge = extract_G12(t, inf);
        rep.add("fundamental_eq_1", fe.eq1_residual, tol * scale);
        rep.add("fundamental_eq_2", fe.eq2_residual, tol * scale);
        rep.add("fundamental_eq_adjoint_1", ge.eq1_residual, tol * scale);
        rep.add("fundamental_eq_adjoint_2", ge.eq2_residual, tol * scale);
        double w_f1 = numerical_radius(fe.F1), w_f2 = numerical_radius(fe.F2);
        double w_g1 = numerical_radius(ge.F1), w_g2 = numerical_radius(ge.F2);
        rep.add("radius_f1", std::max(0.0, w_f1 - 1.0), tol);
        rep.add("radius_f2", std::max(0.0, w_f2 - 1.0), tol);
        rep.add("radius_g1", std::max(0.0, w_g1 - 1.0), tol);
        rep.add("radius_g2", std::max(0.0, w_g2 - 1.0), tol);
        rep.metrics["w_F1"] = w_f1;
        rep.metrics["w_F2"] = w_f2;
        rep.metrics["w_G1"] = w_g1;
        rep.metrics["w_G2"] = w_g2;
    } catch (const Error&) {
        // P outside the contraction ball: the defect spaces do not exist
        rep.add("fundamental_eq_1", inf, tol * scale);
    }
    return rep;
}

struct TetraSynthesisResult {
    Mat A;
    Mat B;
    Report certificate;
};

// A = sum_n P^n (D_{P*} G1* D_{P*} + P D_{P*} G2 D_{P*}) P*^n and the twin
// with G1, G2 swapped, for pure P. Inputs must pass the commutation
// conditions and the coefficient admissibility pair; the certificate checks
// the triple and matches all four extracted fundamental operators.
inline TetraSynthesisResult synthesize_AB(const Contraction& p, const Mat& f1,
                                          const Mat& f2, const Mat& g1, const Mat& g2,
                                          double tol = 1e-10) {
    Classification cl = classify(p);
    if (!cl.is_pure)
        throw NotPure("synthesize_AB: P has a unitary part (rho = " +
                      std::to_string(cl.rho) + ")");
    DefectData dp = defect(p, false);
    DefectData dq = defect(p, true);
    detail::require_tetra_ranks(dp, dq, f1, f2, g1, g2, "synthesize_AB");
    for (const Mat* m : {&f1, &f2, &g1, &g2}) {
        double w = numerical_radius(*m);
        if (w > 1.0 + 1e-8)
            throw NumericalRadiusExceeded("synthesize_AB: numerical radius " +
                                          std::to_string(w));
    }
    if (!commutation_conditions_check(g1, g2).pass())
        throw NotAdmissible("synthesize_AB: G1, G2 fail the commutation conditions");
    Report adm = tetra_admissibility_check(p, f1, f2, g1, g2);
    if (!adm.pass())
        throw NotAdmissible(
            "synthesize_AB: coefficient identities fail first at n = " +
            std::to_string(static_cast<long>(adm.metrics.at("first_failing_coefficient"))));

    const Mat h1 = embed_defect_op(dq, g1);
    const Mat h2 = embed_defect_op(dq, g2);
    const Mat core_a = dq.D * h1.adjoint() * dq.D + p.P * (dq.D * h2 * dq.D);
    const Mat core_b = dq.D * h2.adjoint() * dq.D + p.P * (dq.D * h1 * dq.D);
    const double core_norm = std::max(op_norm(core_a), op_norm(core_b));
    const double thresh = tol * (1.0 - cl.rho * cl.rho);

    Mat a = Mat::Zero(p.dim(), p.dim());
    Mat b = Mat::Zero(p.dim(), p.dim());
    Mat pn = Mat::Identity(p.dim(), p.dim());
    bool converged = false;
    for (long n = 0; n < 200000; ++n) {
        a += pn * core_a * pn.adjoint();
        b += pn * core_b * pn.adjoint();
        pn = p.P * pn;
        double head = op_norm(pn);
        if (head * head * core_norm <= thresh) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NoConvergence("synthesize_AB: series did not reach the tail threshold");

    TetraTriple triple{a, b, p.P};
    Report cert = tetra_triple_certificate(triple);
    cert.name = "tetra_synthesis";
    constexpr double inf = std::numeric_limits<double>::infinity();
    TetraExtract fe = extract_F12(triple, inf);
    TetraExtract ge = extract_G12(triple, inf);
    cert.add("fo_match_F1", op_norm(fe.F1 - f1), 1e-7);
    cert.add("fo_match_F2", op_norm(fe.F2 - f2), 1e-7);
    cert.add("fo_match_G1", op_norm(ge.F1 - g1), 1e-7);
    cert.add("fo_match_G2", op_norm(ge.F2 - g2), 1e-7);
    const double adj_tol = 1e-8 * std::max({1.0, op_norm(a), op_norm(b)});
    cert.add("adjoint_fundamental_eq_1",
             op_norm(a.adjoint() - b * p.P.adjoint() - dq.D * h1 * dq.D), adj_tol);
    cert.add("adjoint_fundamental_eq_2",
             op_norm(b.adjoint() - a * p.P.adjoint() - dq.D * h2 * dq.D), adj_tol);
    cert.absorb(tetra_vn_check(triple));
    return TetraSynthesisResult{std::move(a), std::move(b), std::move(cert)};
}

// Compression of (M_{G1*+zG2}, M_{G2*+zG1}, M_z) to polynomials of degree
// <= N. Requires the commutation conditions; the result is the model every
// pure triple reconstructs to, with F1 = G1*, F2 = G2* on the top-degree
// defect space.
inline TetraTriple gen_pure_tetra(const Mat& g1, const Mat& g2, int degree) {
    require_square(g1, "gen_pure_tetra");
    if (degree < 0) throw PreconditionFailed("gen_pure_tetra: negative degree");
    Report cc = commutation_conditions_check(g1, g2);
    if (!cc.pass())
        throw PreconditionFailed("gen_pure_tetra: commutation conditions fail (" +
                                 cc.first_failure()->name + ")");
    HardySpace space{g1.rows(), degree};
    return TetraTriple{block_toeplitz({g1.adjoint(), g2}, degree).matrix,
                       block_toeplitz({g2.adjoint(), g1}, degree).matrix,
                       shift_op(space).matrix};
}

} // namespace fundop
