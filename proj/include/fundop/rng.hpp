#pragma once

// Seeded RNG with hand-rolled uniforms. std::uniform_real_distribution is
// not pinned across standard libraries; reports must be byte-identical for
// a given seed, so we map the raw 64-bit stream ourselves.

#include <cstdint>
#include <random>

#include "fundop/complexmat.hpp"

namespace fundop {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    // uniform in [0, 1), 53-bit mantissa
    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t below(std::uint64_t n) { return eng() % n; }

    // uniform on the complex unit disc boundary
    Complex phase() {
        double t = uniform(0.0, 6.283185307179586476925286766559);
        return Complex(std::cos(t), std::sin(t));
    }

    // uniform on the closed disc of the given radius
    Complex disc(double radius = 1.0) {
        double r = radius * std::sqrt(uniform());
        return r * phase();
    }

    Mat box_matrix(Index rows, Index cols, double scale = 1.0) {
        Mat m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                m(i, j) = scale * Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
        return m;
    }

    // Haar-ish unitary: QR of a random matrix with the R-diagonal phases
    // folded back in so the distribution does not depend on the QR pivoting.
    Mat unitary(Index n) {
        Mat z = box_matrix(n, n);
        Eigen::HouseholderQR<Mat> qr(z);
        Mat q = qr.householderQ();
        Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Index j = 0; j < n; ++j) {
            Complex d = r(j, j);
            double a = std::abs(d);
            q.col(j) *= a > 0 ? d / a : Complex(1.0, 0.0);
        }
        return q;
    }
};

} // namespace fundop
