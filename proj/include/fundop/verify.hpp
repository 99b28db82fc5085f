#pragma once

// Seeded self-verification corpus. Every generator draws from a Rng owned by
// the caller, so a (seed, cases, dim_max) triple pins the whole run and the
// emitted report bytes.

#include <string>
#include <vector>

#include "fundop/complexmat.hpp"
#include "fundop/contraction.hpp"
#include "fundop/gamma.hpp"
#include "fundop/hardy.hpp"
#include "fundop/io.hpp"
#include "fundop/report.hpp"
#include "fundop/rng.hpp"
#include "fundop/synthesis.hpp"
#include "fundop/tetrablock.hpp"

namespace fundop {

// Strict contraction of the given size, optionally direct-summed with a
// small unitary block and mixed by a random change of basis.
inline Contraction random_contraction(Rng& rng, Index n, bool allow_unitary_part = true) {
    Index pure_dim = n;
    Index uni_dim = 0;
    if (allow_unitary_part && n >= 2 && rng.uniform() < 0.3) {
        uni_dim = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - 1)));
        pure_dim = n - uni_dim;
    }
    Mat x = rng.box_matrix(pure_dim, pure_dim);
    double nx = op_norm(x);
    if (nx > 0) x *= rng.uniform(0.2, 0.95) / nx;
    if (uni_dim == 0) return Contraction(x);

    Mat p = Mat::Zero(n, n);
    p.topLeftCorner(pure_dim, pure_dim) = x;
    p.bottomRightCorner(uni_dim, uni_dim) = rng.unitary(uni_dim);
    Mat v = rng.unitary(n);
    return Contraction(v * p * v.adjoint());
}

// Pure pair from the polynomial model with w(Y) strictly below 1.
inline GammaPair random_pure_gamma(Rng& rng, Index fiber, int degree) {
    Mat y = rng.box_matrix(fiber, fiber);
    double w = numerical_radius(y);
    if (w > 0) y *= rng.uniform(0.3, 0.9) / w;
    return gen_pure_gamma(y, degree);
}

// Commuting pair of unitaries (U1 + U2, U1 U2), diagonalized in a common
// random basis. The (U + I, U) special case is U2 = I.
inline GammaPair random_gamma_unitary(Rng& rng, Index n, bool shifted_form) {
    Mat v = rng.unitary(n);
    Mat d1 = Mat::Zero(n, n), d2 = Mat::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        d1(j, j) = rng.phase();
        d2(j, j) = shifted_form ? Complex(1.0, 0.0) : rng.phase();
    }
    Mat u1 = v * d1 * v.adjoint();
    Mat u2 = v * d2 * v.adjoint();
    return GammaPair{u1 + u2, u1 * u2};
}

// Commuting normal pair (G1, G2) with |g1| + |g2| <= cap on the joint
// spectrum. The cap keeps the reconstructed triple inside the tetrablock
// family with margin; radius-one inputs alone do not.
inline void random_tetra_generators(Rng& rng, Index fiber, double cap, Mat& g1, Mat& g2) {
    Mat v = rng.unitary(fiber);
    Mat d1 = Mat::Zero(fiber, fiber), d2 = Mat::Zero(fiber, fiber);
    for (Index j = 0; j < fiber; ++j) {
        double total = cap * rng.uniform();
        double split = rng.uniform();
        d1(j, j) = total * split * rng.phase();
        d2(j, j) = total * (1.0 - split) * rng.phase();
    }
    g1 = v * d1 * v.adjoint();
    g2 = v * d2 * v.adjoint();
}

inline TetraTriple random_pure_tetra(Rng& rng, Index fiber, int degree, double cap = 0.95) {
    Mat g1, g2;
    random_tetra_generators(rng, fiber, cap, g1, g2);
    return gen_pure_tetra(g1, g2, degree);
}

namespace detail {

// Closed-form scalar membership: coordinatewise bounds plus
// |x1 - conj(x2) x3| + |x2 - conj(x1) x3| <= 1 - |x3|^2.
inline double tetra_oracle_margin(Complex x1, Complex x2, Complex x3) {
    double coord = std::min({1.0 - std::abs(x1), 1.0 - std::abs(x2), 1.0 - std::abs(x3)});
    double ineq = (1.0 - std::norm(x3)) -
                  (std::abs(x1 - std::conj(x2) * x3) + std::abs(x2 - std::conj(x1) * x3));
    return std::min(coord, ineq);
}

} // namespace detail

// Deterministic end-to-end sweep over the generator families. Each case
// contributes one report; the run passes iff every check passes. cases = 0 is
// a legal vacuous pass; dim_max = 1 restricts every drawn operator to
// scalars, replacing the polynomial-model families by their scalar analogues
// (z1 + z2, z1 z2) and (conj(g1) + g2 p, conj(g2) + g1 p, p).
inline RunReport verify_suite(std::uint64_t seed, int cases, Index dim_max) {
    if (cases < 0) throw PreconditionFailed("verify_suite: cases must be non-negative");
    if (dim_max < 1) throw PreconditionFailed("verify_suite: dim_max must be at least 1");
    Rng rng(seed);
    RunReport run;
    run.command = "verify-suite";
    run.inputs.emplace_back("seed", std::to_string(seed));
    run.inputs.emplace_back("cases", std::to_string(cases));
    run.inputs.emplace_back("dim-max", std::to_string(dim_max));

    for (int i = 0; i < cases; ++i) {
        const std::string tag = "case_" + std::to_string(i);

        {
            Index n = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(dim_max)));
            int degree = 2 + static_cast<int>(rng.below(5));
            Contraction c = random_contraction(rng, n);
            Report rep;
            rep.name = tag + "_contraction_model";
            rep.add("model_decomposition", model_decomposition_residual(c, degree), 1e-10);
            rep.add("embedding_gram", embedding_gram_residual(c, degree), 1e-12);
            rep.absorb(shift_intertwining_check(c, degree));
            rep.metrics["dim"] = static_cast<double>(n);
            rep.metrics["degree"] = degree;
            run.reports.push_back(std::move(rep));
        }

        {
            GammaPair pair;
            if (dim_max == 1) {
                Complex z1 = rng.disc(0.95), z2 = rng.disc(0.95);
                Mat s(1, 1), p(1, 1);
                s(0, 0) = z1 + z2;
                p(0, 0) = z1 * z2;
                pair = GammaPair{s, p};
            } else {
                Index fiber = 1 + static_cast<Index>(rng.below(2));
                int degree = 2 + static_cast<int>(rng.below(4));
                pair = random_pure_gamma(rng, fiber, degree);
            }
            ExtractResult ef = extract_F(pair);
            ExtractResult eg = extract_G(pair);
            Report rep = gamma_contraction_certificate(pair);
            rep.name = tag + "_gamma_pure";
            rep.absorb(fundamental_relations_check(pair, ef.F, eg.F));
            rep.absorb(admissibility_check(Contraction(pair.P), ef.F, eg.F));
            SynthesisResult syn = synthesize_S(Contraction(pair.P), ef.F, eg.F);
            rep.add("synthesis_round_trip", op_norm(syn.S - pair.S), 1e-7);
            run.reports.push_back(std::move(rep));
        }

        {
            Index n = 1 + static_cast<Index>(rng.below(
                          std::min<std::uint64_t>(3, static_cast<std::uint64_t>(dim_max))));
            GammaPair pair = random_gamma_unitary(rng, n, /*shifted_form=*/true);
            Report rep = asymptotic_relation_check(pair);
            rep.name = tag + "_gamma_unitary_asymptotics";
            rep.absorb(gamma_unitary_certificate(pair));
            run.reports.push_back(std::move(rep));
        }

        {
            TetraTriple t;
            if (dim_max == 1) {
                Mat g1, g2;
                random_tetra_generators(rng, 1, 0.95, g1, g2);
                Complex p0 = rng.disc(0.9);
                Mat a(1, 1), b(1, 1), p(1, 1);
                a(0, 0) = std::conj(g1(0, 0)) + g2(0, 0) * p0;
                b(0, 0) = std::conj(g2(0, 0)) + g1(0, 0) * p0;
                p(0, 0) = p0;
                t = TetraTriple{a, b, p};
            } else {
                Index fiber = 1 + static_cast<Index>(rng.below(2));
                int degree = 2 + static_cast<int>(rng.below(3));
                t = random_pure_tetra(rng, fiber, degree);
            }
            TetraExtract fe = extract_F12(t);
            TetraExtract ge = extract_G12(t);
            Report rep;
            rep.name = tag + "_tetra_pure";
            rep.absorb(tetra_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2));
            rep.absorb(tetra_defect_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2));
            rep.absorb(tetra_admissibility_check(Contraction(t.P), fe.F1, fe.F2, ge.F1,
                                                 ge.F2));
            TetraSynthesisResult syn =
                synthesize_AB(Contraction(t.P), fe.F1, fe.F2, ge.F1, ge.F2);
            rep.add("synthesis_round_trip_a", op_norm(syn.A - t.A), 1e-7);
            rep.add("synthesis_round_trip_b", op_norm(syn.B - t.B), 1e-7);
            run.reports.push_back(std::move(rep));
        }

        {
            Report rep;
            rep.name = tag + "_membership_consistency";
            int disagree = 0;
            int decided = 0;
            for (int k = 0; k < 25; ++k) {
                Complex x1 = rng.disc(1.2), x2 = rng.disc(1.2), x3 = rng.disc(1.2);
                double oracle = detail::tetra_oracle_margin(x1, x2, x3);
                if (std::abs(oracle) < 0.05) continue; // skip the boundary band
                ++decided;
                MembershipResult mr = tetra_membership(x1, x2, x3, 256);
                if (mr.member != (oracle >= 0)) ++disagree;
            }
            rep.add("grid_matches_closed_form", static_cast<double>(disagree), 0.0);
            rep.metrics["decided_points"] = static_cast<double>(decided);
            run.reports.push_back(std::move(rep));
        }

        {
            Index n = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(dim_max)));
            Mat a = rng.box_matrix(n, n);
            double w = numerical_radius(a);
            double nrm = op_norm(a);
            Report rep;
            rep.name = tag + "_numerical_radius";
            rep.add("lower_bound", std::max(0.0, nrm / 2.0 - w), 1e-9 * std::max(1.0, nrm));
            rep.add("upper_bound", std::max(0.0, w - nrm), 1e-9 * std::max(1.0, nrm));
            Mat v = rng.unitary(n);
            rep.add("unitary_invariance", std::abs(numerical_radius(v * a * v.adjoint()) - w),
                    1e-8 * std::max(1.0, nrm));
            run.reports.push_back(std::move(rep));
        }
    }

    return run;
}

} // namespace fundop
