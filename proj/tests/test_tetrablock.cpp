#include <catch2/catch_amalgamated.hpp>

#include "fundop/tetrablock.hpp"
#include "fundop/verify.hpp"
#include "test_helpers.hpp"

using namespace fundop;

namespace {

// commuting scalar triples glued into one triple and mixed by a random
// change of basis; keeps every relation true while making the matrices
// genuinely non-commutative entrywise
TetraTriple mixed_scalar_triple(Rng& rng) {
    const std::array<std::array<Complex, 3>, 3> pts = {{
        {Complex(0.3, 0.1), Complex(0.2, -0.2), Complex(0.25, 0.0)},
        {Complex(-0.1, 0.25), Complex(0.35, 0.0), Complex(0.1, -0.3)},
        {Complex(0.0, 0.4), Complex(-0.2, 0.1), Complex(-0.15, 0.2)},
    }};
    Mat a = Mat::Zero(3, 3), b = Mat::Zero(3, 3), p = Mat::Zero(3, 3);
    for (Index i = 0; i < 3; ++i) {
        a(i, i) = pts[static_cast<size_t>(i)][0];
        b(i, i) = pts[static_cast<size_t>(i)][1];
        p(i, i) = pts[static_cast<size_t>(i)][2];
    }
    Mat v = rng.unitary(3);
    return TetraTriple{v * a * v.adjoint(), v * b * v.adjoint(), v * p * v.adjoint()};
}

} // namespace

TEST_CASE("scalar membership agrees with the closed form", "[tetrablock]") {
    // interior, boundary-of-disc and clearly outside points
    CHECK(tetra_membership(Complex(0, 0), Complex(0, 0), Complex(0, 0)).member);
    CHECK(tetra_membership(Complex(0.3, 0.1), Complex(0.2, -0.2), Complex(0.25, 0)).member);
    CHECK_FALSE(tetra_membership(Complex(1, 0), Complex(1, 0), Complex(0, 0)).member);
    CHECK_FALSE(tetra_membership(Complex(0.9, 0), Complex(0.9, 0), Complex(0, 0)).member);
    CHECK_FALSE(tetra_membership(Complex(1.2, 0), Complex(0, 0), Complex(0, 0)).member);

    // distinguished boundary points are members with margin about zero
    for (double phi : {0.3, 1.9, 4.4}) {
        auto x = distinguished_boundary_point(Complex(0.4, -0.5), phi);
        MembershipResult mr = tetra_membership(x[0], x[1], x[2]);
        CHECK(mr.member);
        CHECK(std::abs(mr.margin) < 1e-2);
    }

    // randomized sign agreement against the closed-form inequality
    Rng rng(61);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
        Complex x1 = rng.disc(1.2), x2 = rng.disc(1.2), x3 = rng.disc(1.2);
        double oracle = detail::tetra_oracle_margin(x1, x2, x3);
        if (std::abs(oracle) < 0.05) continue;
        ++checked;
        CHECK(tetra_membership(x1, x2, x3, 256).member == (oracle >= 0));
    }
    CHECK(checked > 100);
}

TEST_CASE("model triples commute and expose their fundamental pairs",
          "[tetrablock]") {
    Rng rng(62);
    for (int trial = 0; trial < 3; ++trial) {
        Index fiber = 1 + static_cast<Index>(rng.below(2));
        int degree = 2 + static_cast<int>(rng.below(3));
        TetraTriple t = random_pure_tetra(rng, fiber, degree);

        CHECK(op_norm(t.A * t.B - t.B * t.A) < 1e-15);
        CHECK(op_norm(t.A * t.P - t.P * t.A) == 0.0);
        CHECK(op_norm(t.B * t.P - t.P * t.B) == 0.0);

        TetraExtract fe = extract_F12(t);
        TetraExtract ge = extract_G12(t);
        CHECK(fe.joint1_residual < 1e-10);
        CHECK(fe.joint2_residual < 1e-10);

        CHECK(tetra_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2).pass());
        CHECK(tetra_defect_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2).pass());
        CHECK(tetra_admissibility_check(Contraction(t.P), fe.F1, fe.F2, ge.F1, ge.F2)
                  .pass());
        CHECK(tetra_triple_certificate(t).pass());
    }
}

TEST_CASE("conjugated scalar triples satisfy every relation", "[tetrablock]") {
    Rng rng(63);
    TetraTriple t = mixed_scalar_triple(rng);
    TetraExtract fe = extract_F12(t);
    TetraExtract ge = extract_G12(t);
    CHECK(fe.eq1_residual < 1e-12);
    CHECK(fe.eq2_residual < 1e-12);
    CHECK(fe.joint1_residual < 1e-10);
    CHECK(fe.joint2_residual < 1e-10);
    CHECK(tetra_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2).pass());
    CHECK(tetra_defect_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2).pass());
    Report adm = tetra_admissibility_check(Contraction(t.P), fe.F1, fe.F2, ge.F1, ge.F2);
    CHECK(adm.pass());
    CHECK(tetra_vn_check(t).pass());
}

TEST_CASE("admissibility notices perturbed tetra operators", "[tetrablock]") {
    Rng rng(64);
    TetraTriple t = random_pure_tetra(rng, 2, 3);
    TetraExtract fe = extract_F12(t);
    TetraExtract ge = extract_G12(t);
    Mat g1_bad = ge.F1;
    g1_bad(0, 0) += 1e-4;
    Report rep =
        tetra_admissibility_check(Contraction(t.P), fe.F1, fe.F2, g1_bad, ge.F2);
    CHECK_FALSE(rep.pass());
    CHECK(rep.metrics.at("first_failing_coefficient") >= 0.0);
}

TEST_CASE("commutation conditions separate usable generator pairs",
          "[tetrablock]") {
    Rng rng(65);
    Mat g1, g2;
    random_tetra_generators(rng, 3, 0.9, g1, g2);
    CHECK(commutation_conditions_check(g1, g2).pass());

    // non-commuting pair
    Mat j = 0.5 * testutil::jordan_block(2);
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 0.5;
    d(1, 1) = -0.5;
    Report nc = commutation_conditions_check(j, d);
    CHECK_FALSE(nc.pass());

    // commuting but with mismatched self-commutators
    Report sc = commutation_conditions_check(j, Mat::Zero(2, 2));
    CHECK_FALSE(sc.pass());
    CHECK(sc.checks[0].pass);
    CHECK_FALSE(sc.checks[1].pass);

    CHECK_THROWS_AS(gen_pure_tetra(j, d, 2), PreconditionFailed);
}

TEST_CASE("synthesize_AB round-trips pure model triples", "[tetrablock]") {
    Rng rng(66);
    for (int trial = 0; trial < 3; ++trial) {
        Index fiber = 1 + static_cast<Index>(rng.below(2));
        int degree = 2 + static_cast<int>(rng.below(3));
        TetraTriple t = random_pure_tetra(rng, fiber, degree);
        TetraExtract fe = extract_F12(t);
        TetraExtract ge = extract_G12(t);
        TetraSynthesisResult syn =
            synthesize_AB(Contraction(t.P), fe.F1, fe.F2, ge.F1, ge.F2);
        CHECK(op_norm(syn.A - t.A) < 1e-10);
        CHECK(op_norm(syn.B - t.B) < 1e-10);
        CHECK(syn.certificate.pass());
    }
}

TEST_CASE("synthesize_AB gates its inputs", "[tetrablock]") {
    Rng rng(67);
    Mat g1, g2;
    random_tetra_generators(rng, 2, 0.9, g1, g2);
    TetraTriple t = gen_pure_tetra(g1, g2, 3);
    TetraExtract fe = extract_F12(t);
    TetraExtract ge = extract_G12(t);
    Contraction p(t.P);

    CHECK_THROWS_AS(synthesize_AB(Contraction(rng.unitary(2)), fe.F1, fe.F2, ge.F1,
                                  ge.F2),
                    NotPure);
    CHECK_THROWS_AS(synthesize_AB(p, fe.F1, fe.F2, 5.0 * ge.F1, ge.F2),
                    NumericalRadiusExceeded);
    // sign flip breaks the coefficient identities
    CHECK_THROWS_AS(synthesize_AB(p, fe.F1, fe.F2, -ge.F1, ge.F2), NotAdmissible);
    // non-commuting generators are rejected before any series is summed
    Mat j = 0.5 * testutil::jordan_block(2);
    CHECK_THROWS_AS(synthesize_AB(p, fe.F1, fe.F2, j, Mat::Zero(2, 2)), NotAdmissible);
    CHECK_THROWS_AS(synthesize_AB(p, Mat::Zero(3, 3), fe.F2, ge.F1, ge.F2), DimMismatch);
}

TEST_CASE("von neumann spot check separates scale violations", "[tetrablock]") {
    Rng rng(68);
    TetraTriple good = random_pure_tetra(rng, 1, 3);
    CHECK(tetra_vn_check(good).pass());

    TetraTriple bad{2.0 * Mat::Identity(2, 2), 2.0 * Mat::Identity(2, 2),
                    Mat::Zero(2, 2)};
    CHECK_FALSE(tetra_vn_check(bad).pass());
}
