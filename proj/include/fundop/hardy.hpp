#pragma once

// Truncated vector-valued Hardy space H^2(E) of analytic polynomials of
// degree <= N. Basis ordering is degree-major: all fiber coordinates of z^n
// come before those of z^{n+1}, so analytic Toeplitz operators are block
// lower triangular with constant block diagonals.

#include <vector>

#include "fundop/complexmat.hpp"
#include "fundop/contraction.hpp"
#include "fundop/errors.hpp"
#include "fundop/report.hpp"

namespace fundop {

struct HardySpace {
    Index fiber = 1;
    int degree = 0;

    Index total() const { return fiber * (degree + 1); }
};

// Multiplication by an operator-valued polynomial symbol sum_m z^m X_m on the
// truncation: block(j,k) = X_{j-k} for j >= k, zero above the diagonal.
struct HardyOp {
    int degree = 0;
    Index out_fiber = 0;
    Index in_fiber = 0;
    std::vector<Mat> symbol; // symbol[m], all out_fiber x in_fiber
    Mat matrix;              // (degree+1)*out_fiber x (degree+1)*in_fiber
};

inline HardyOp block_toeplitz(std::vector<Mat> symbol, int degree) {
    if (symbol.empty()) throw PreconditionFailed("block_toeplitz: empty symbol");
    if (degree < 0) throw PreconditionFailed("block_toeplitz: negative degree");
    HardyOp op;
    op.degree = degree;
    op.out_fiber = symbol[0].rows();
    op.in_fiber = symbol[0].cols();
    for (const Mat& m : symbol)
        if (m.rows() != op.out_fiber || m.cols() != op.in_fiber)
            throw DimMismatch("block_toeplitz: ragged symbol coefficients");
    symbol.resize(static_cast<size_t>(degree) + 1, Mat::Zero(op.out_fiber, op.in_fiber));
    op.matrix = Mat::Zero((degree + 1) * op.out_fiber, (degree + 1) * op.in_fiber);
    for (int j = 0; j <= degree; ++j)
        for (int k = 0; k <= j; ++k)
            op.matrix.block(j * op.out_fiber, k * op.in_fiber, op.out_fiber, op.in_fiber) =
                symbol[static_cast<size_t>(j - k)];
    op.symbol = std::move(symbol);
    return op;
}

// Truncated shift M_z on the space: identity blocks on the first
// subdiagonal.
inline HardyOp shift_op(const HardySpace& space) {
    std::vector<Mat> symbol{Mat::Zero(space.fiber, space.fiber),
                            Mat::Identity(space.fiber, space.fiber)};
    return block_toeplitz(std::move(symbol), space.degree);
}

// Truncated M_{X* + z X}, the Hermitian-symbol pencil attached to X.
inline HardyOp pencil_op(const Mat& x, int degree) {
    require_square(x, "pencil_op");
    return block_toeplitz({x.adjoint(), x}, degree);
}

// Truncated multiplication by the characteristic function of P; input fiber
// is the defect space of P, output fiber the defect space of P*.
inline HardyOp char_fn_op(const Contraction& c, int degree) {
    TaylorSeries ts = char_fn_taylor(c, degree);
    return block_toeplitz(std::move(ts.coeffs), degree);
}

// Model embedding W: rows are degree blocks D_{P*} P*^n in the coordinates of
// the defect space of P*; W h collects the Taylor coefficients of the model
// vector of h. Isometric (up to a P^{N+1} tail) iff P is pure; callers that
// rely on isometry keep the purity gate on.
inline Mat model_embedding(const Contraction& c, int degree, bool require_pure = true) {
    if (degree < 0) throw PreconditionFailed("model_embedding: negative degree");
    if (require_pure && !classify(c).is_pure)
        throw NotPure("model_embedding: contraction has a unitary part");
    DefectData dq = defect(c, true);
    Mat w(static_cast<Index>(degree + 1) * dq.rank, c.dim());
    Mat row = dq.Q.adjoint() * dq.D; // D_{P*} P*^n, compressed on the left
    for (int n = 0; n <= degree; ++n) {
        w.block(n * dq.rank, 0, dq.rank, c.dim()) = row;
        row = row * c.P.adjoint();
    }
    return w;
}

// Residual of the orthogonal decomposition of the truncated Hardy space into
// the embedded model space and the range of M_Theta:
//   | W W* + M_Theta M_Theta* - I |.
// The identity is exact on the truncation (every block of the infinite
// identity involves finitely many terms, all present), so the residual is
// rounding-level for every contraction and every degree.
inline double model_decomposition_residual(const Contraction& c, int degree) {
    Mat w = model_embedding(c, degree, /*require_pure=*/false);
    HardyOp mt = char_fn_op(c, degree);
    Mat lhs = w * w.adjoint() + mt.matrix * mt.matrix.adjoint();
    return op_norm(lhs - Mat::Identity(lhs.rows(), lhs.cols()));
}

// M_z* W = W P* holds exactly below the top degree; the top block row is the
// truncation edge and is excluded by construction.
inline Report shift_intertwining_check(const Contraction& c, int degree) {
    Report rep;
    rep.name = "shift_intertwining";
    Mat w = model_embedding(c, degree, /*require_pure=*/false);
    DefectData dq = defect(c, true);
    HardySpace space{dq.rank, degree};
    Mat mz = shift_op(space).matrix;
    Mat diff = mz.adjoint() * w - w * c.P.adjoint();
    const Index keep = static_cast<Index>(degree) * dq.rank; // rows of degree < N
    double resid = keep > 0 ? op_norm(diff.topRows(keep)) : 0.0;
    rep.add("shift_intertwining_below_top", resid, 1e-12 * std::max<double>(1, c.dim()));
    rep.metrics["top_row_residual"] = op_norm(diff.bottomRows(dq.rank));
    return rep;
}

// | W* W + P^{N+1} P*^{N+1} - I |; telescopes to zero in exact arithmetic
// for every contraction.
inline double embedding_gram_residual(const Contraction& c, int degree) {
    Mat w = model_embedding(c, degree, /*require_pure=*/false);
    Mat tail = matrix_power(c.P, static_cast<unsigned long long>(degree) + 1);
    Mat lhs = w.adjoint() * w + tail * tail.adjoint();
    return op_norm(lhs - identity_like(c.P));
}

} // namespace fundop
