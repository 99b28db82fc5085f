#include <catch2/catch_amalgamated.hpp>

#include "fundop/complexmat.hpp"
#include "fundop/rng.hpp"
#include "test_helpers.hpp"

using namespace fundop;
using testutil::oracle_numerical_radius;

TEST_CASE("op_norm basics", "[matrix]") {
    CHECK(op_norm(Mat()) == 0.0);
    Mat one(1, 1);
    one(0, 0) = Complex(-3.0, 4.0);
    CHECK(op_norm(one) == Catch::Approx(5.0));

    Mat d = Mat::Zero(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = Complex(0.0, -7.0);
    d(2, 2) = 1.0;
    CHECK(op_norm(d) == Catch::Approx(7.0).margin(1e-12));

    Rng rng(11);
    Mat a = rng.box_matrix(4, 6);
    Mat u = rng.unitary(4), v = rng.unitary(6);
    CHECK(op_norm(u * a * v) == Catch::Approx(op_norm(a)).margin(1e-10));
}

TEST_CASE("herm_eig reconstructs and rejects", "[matrix]") {
    Rng rng(12);
    for (Index n : {1, 2, 5, 9}) {
        Mat h = testutil::hermitian(rng, n);
        HermEig eig = herm_eig(h);
        Mat rebuilt = eig.vectors *
                      eig.values.asDiagonal().toDenseMatrix().cast<Complex>() *
                      eig.vectors.adjoint();
        CHECK(op_norm(rebuilt - h) < 1e-12 * std::max(1.0, op_norm(h)));
        for (Index i = 0; i + 1 < n; ++i) CHECK(eig.values[i] <= eig.values[i + 1]);
        CHECK(op_norm(eig.vectors.adjoint() * eig.vectors - Mat::Identity(n, n)) < 1e-13);
        CHECK(herm_lambda_max(h) == Catch::Approx(eig.values[n - 1]).margin(1e-12));
    }
    Mat bad = rng.box_matrix(3, 3);
    bad(0, 1) += Complex(0.5, 0.5);
    CHECK_THROWS_AS(herm_eig(bad), NotHermitian);
}

TEST_CASE("psd_sqrt squares back and rejects indefinite input", "[matrix]") {
    Rng rng(13);
    for (Index n : {1, 3, 6}) {
        Mat x = rng.box_matrix(n, n);
        Mat h = (x * x.adjoint()).eval(); // PSD by construction
        Mat r = psd_sqrt(h);
        CHECK(op_norm(r * r - h) < 1e-11 * std::max(1.0, op_norm(h)));
        CHECK(op_norm(r - r.adjoint()) < 1e-13 * std::max(1.0, op_norm(h)));
    }
    Mat neg = -Mat::Identity(2, 2);
    CHECK_THROWS_AS(psd_sqrt(neg), NotPSD);

    // tiny negative eigenvalues from rounding are clamped, not fatal
    Mat h = Mat::Zero(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = -1e-14;
    Mat r = psd_sqrt(h);
    Mat expected = Mat::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK(op_norm(r * r - expected) < 1e-10);
}

TEST_CASE("matrix_power matches naive products", "[matrix]") {
    Rng rng(14);
    Mat a = rng.box_matrix(4, 4, 0.6);
    Mat naive = Mat::Identity(4, 4);
    for (unsigned k = 0; k <= 9; ++k) {
        CHECK(op_norm(matrix_power(a, k) - naive) < 1e-11);
        naive = naive * a;
    }
}

TEST_CASE("spectral_radius on known matrices", "[matrix]") {
    Mat j = testutil::jordan_block(4);
    CHECK(spectral_radius(j) < 1e-12);
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = Complex(0.3, 0.4);
    d(1, 1) = Complex(-0.1, 0.0);
    CHECK(spectral_radius(d) == Catch::Approx(0.5).margin(1e-12));
    CHECK_THROWS_AS(spectral_radius(Mat::Zero(2, 3)), NonSquare);
}

TEST_CASE("numerical radius of the 2x2 nilpotent is half the entry", "[matrix]") {
    Mat a = Mat::Zero(2, 2);
    a(0, 1) = 2.0;
    CHECK(numerical_radius(a) == Catch::Approx(1.0).margin(1e-9));
    a(0, 1) = Complex(0.0, -3.0);
    CHECK(numerical_radius(a) == Catch::Approx(1.5).margin(1e-9));
}

TEST_CASE("numerical radius agrees with the sweep oracle", "[matrix]") {
    Rng rng(15);
    for (int trial = 0; trial < 25; ++trial) {
        Index n = 1 + static_cast<Index>(rng.below(4));
        Mat a = rng.box_matrix(n, n);
        double w = numerical_radius(a, 1e-11);
        double oracle = oracle_numerical_radius(a);
        CHECK(std::abs(w - oracle) < 1e-8 * std::max(1.0, op_norm(a)));
        CHECK(w <= op_norm(a) + 1e-10);
        CHECK(w >= op_norm(a) / 2.0 - 1e-10);
        CHECK(numerical_radius(Complex(0.0, 1.0) * a) ==
              Catch::Approx(w).margin(1e-9 * std::max(1.0, op_norm(a))));
    }
    // normal matrices: radius equals spectral radius
    Mat d = Mat::Zero(3, 3);
    d(0, 0) = Complex(0.6, -0.3);
    d(1, 1) = Complex(-0.9, 0.1);
    d(2, 2) = 0.2;
    Rng rng2(16);
    Mat v = rng2.unitary(3);
    CHECK(numerical_radius(v * d * v.adjoint()) ==
          Catch::Approx(spectral_radius(d)).margin(1e-9));
}

TEST_CASE("range_basis finds rank and an orthonormal frame", "[matrix]") {
    Rng rng(17);
    Mat b = rng.box_matrix(5, 2);
    Mat h = (b * b.adjoint()).eval(); // rank 2 PSD
    RangeBasis rb = range_basis(h);
    REQUIRE(rb.rank == 2);
    CHECK(op_norm(rb.Q.adjoint() * rb.Q - Mat::Identity(2, 2)) < 1e-12);
    // projection onto the frame leaves H fixed
    Mat proj = rb.Q * rb.Q.adjoint();
    CHECK(op_norm(proj * h - h) < 1e-11 * op_norm(h));

    RangeBasis zero = range_basis(Mat::Zero(3, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.Q.cols() == 0);
}

TEST_CASE("pinv_on_range inverts on the range and kills the kernel", "[matrix]") {
    Rng rng(18);
    Mat b = rng.box_matrix(4, 2);
    Mat h = (b * b.adjoint()).eval();
    Mat d = psd_sqrt(h);
    RangeBasis rb = range_basis(d);
    Mat pinv = pinv_on_range(d, rb.Q);
    Mat proj = rb.Q * rb.Q.adjoint();
    CHECK(op_norm(pinv * d - proj) < 1e-10);
    CHECK(op_norm(d * pinv - proj) < 1e-10);
    CHECK(op_norm(pinv * (Mat::Identity(4, 4) - proj)) < 1e-12);
}

TEST_CASE("rng stream is stable across runs", "[matrix]") {
    Rng a(123456), b(123456);
    for (int i = 0; i < 100; ++i) REQUIRE(a.uniform() == b.uniform());
    Mat ua = Rng(7).unitary(3), ub = Rng(7).unitary(3);
    REQUIRE((ua - ub).cwiseAbs().maxCoeff() == 0.0);
    CHECK(op_norm(ua.adjoint() * ua - Mat::Identity(3, 3)) < 1e-13);
}
