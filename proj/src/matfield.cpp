#include "linrank/matfield.hpp"

#include <string>

namespace linrank {

namespace {

void require_same_ctx(const MatrixF& a, const MatrixF& b) {
    if (!a.ctx()->same_field(*b.ctx())) fail(Errc::CtxMismatch, "matrices over different fields");
}

}  // namespace

MatrixF::MatrixF(FieldCtxPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(rows * cols, ctx_->zero()) {}

MatrixF::MatrixF(FieldCtxPtr ctx, std::size_t rows, std::size_t cols,
                 std::vector<FieldElement> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        fail(Errc::ShapeMismatch, "entry count " + std::to_string(entries_.size()) +
                                      " does not match " + std::to_string(rows_) + "x" +
                                      std::to_string(cols_));
    for (const auto& e : entries_) ctx_->require(e);
}

MatrixF MatrixF::identity(FieldCtxPtr ctx, std::size_t k) {
    MatrixF m(ctx, k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, ctx->one());
    return m;
}

FieldElement det(const MatrixF& m) {
    if (!m.is_square()) fail(Errc::NotSquare, "determinant of a non-square matrix");
    const FieldCtx& ctx = *m.ctx();
    std::size_t k = m.rows();
    if (k == 0) return ctx.one();  // empty-product convention
    std::vector<FieldElement> a = m.entries();
    auto at = [&](std::size_t r, std::size_t c) -> FieldElement& { return a[r * k + c]; };
    bool negate = false;
    FieldElement result = ctx.one();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && at(pivot, col).is_zero()) ++pivot;
        if (pivot == k) return ctx.zero();
        if (pivot != col) {
            for (std::size_t c = col; c < k; ++c) std::swap(at(pivot, c), at(col, c));
            negate = !negate;
        }
        const FieldElement& pv = at(col, col);
        result = ctx.mul(result, pv);
        FieldElement pinv = ctx.inv(pv);
        for (std::size_t r = col + 1; r < k; ++r) {
            if (at(r, col).is_zero()) continue;
            FieldElement factor = ctx.mul(at(r, col), pinv);
            for (std::size_t c = col; c < k; ++c)
                at(r, c) = ctx.sub(at(r, c), ctx.mul(factor, at(col, c)));
        }
    }
    return negate ? ctx.neg(result) : result;
}

std::pair<std::size_t, std::size_t> rank_nullity(const MatrixF& m) {
    const FieldCtx& ctx = *m.ctx();
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<FieldElement> a = m.entries();
    auto at = [&](std::size_t r, std::size_t c) -> FieldElement& { return a[r * cols + c]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
        FieldElement pinv = ctx.inv(at(rank, col));
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (at(r, col).is_zero()) continue;
            FieldElement factor = ctx.mul(at(r, col), pinv);
            for (std::size_t c = col; c < cols; ++c)
                at(r, c) = ctx.sub(at(r, c), ctx.mul(factor, at(rank, c)));
        }
        ++rank;
    }
    return {rank, cols - rank};
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) {
    require_same_ctx(a, b);
    if (a.cols() != b.rows()) fail(Errc::ShapeMismatch, "inner dimensions differ");
    const FieldCtx& ctx = *a.ctx();
    MatrixF out(a.ctx(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t i = 0; i < a.cols(); ++i) {
            if (a.at(r, i).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.set(r, c, ctx.add(out.at(r, c), ctx.mul(a.at(r, i), b.at(i, c))));
        }
    return out;
}

MatrixF mat_add(const MatrixF& a, const MatrixF& b) {
    require_same_ctx(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Errc::ShapeMismatch, "matrix sum shape mismatch");
    const FieldCtx& ctx = *a.ctx();
    MatrixF out(a.ctx(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, ctx.add(a.at(r, c), b.at(r, c)));
    return out;
}

MatrixF transpose(const MatrixF& m) {
    MatrixF out(m.ctx(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m.at(r, c));
    return out;
}

MatrixF mat_inverse(const MatrixF& m) {
    if (!m.is_square()) fail(Errc::NotSquare, "inverse of a non-square matrix");
    const FieldCtx& ctx = *m.ctx();
    std::size_t k = m.rows();
    std::vector<FieldElement> a = m.entries();
    MatrixF inv = MatrixF::identity(m.ctx(), k);
    auto at = [&](std::size_t r, std::size_t c) -> FieldElement& { return a[r * k + c]; };
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && at(pivot, col).is_zero()) ++pivot;
        if (pivot == k) fail(Errc::SingularW, "matrix is singular");
        if (pivot != col)
            for (std::size_t c = 0; c < k; ++c) {
                std::swap(at(pivot, c), at(col, c));
                FieldElement t = inv.at(pivot, c);
                inv.set(pivot, c, inv.at(col, c));
                inv.set(col, c, std::move(t));
            }
        FieldElement pinv = ctx.inv(at(col, col));
        for (std::size_t c = 0; c < k; ++c) {
            at(col, c) = ctx.mul(at(col, c), pinv);
            inv.set(col, c, ctx.mul(inv.at(col, c), pinv));
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || at(r, col).is_zero()) continue;
            FieldElement factor = at(r, col);
            for (std::size_t c = 0; c < k; ++c) {
                at(r, c) = ctx.sub(at(r, c), ctx.mul(factor, at(col, c)));
                inv.set(r, c, ctx.sub(inv.at(r, c), ctx.mul(factor, inv.at(col, c))));
            }
        }
    }
    return inv;
}

FieldElement schur_block_det(const MatrixF& x, const MatrixF& y, const MatrixF& z,
                             const MatrixF& w) {
    require_same_ctx(x, w);
    require_same_ctx(x, y);
    require_same_ctx(x, z);
    if (!w.is_square() || !x.is_square()) fail(Errc::ShapeMismatch, "X and W must be square");
    if (y.rows() != x.rows() || y.cols() != w.cols() || z.rows() != w.rows() ||
        z.cols() != x.cols())
        fail(Errc::ShapeMismatch, "block dimensions incompatible");
    const FieldCtx& ctx = *x.ctx();
    MatrixF winv = mat_inverse(w);  // SingularW when W is not invertible
    MatrixF prod = mat_mul(mat_mul(y, winv), z);
    MatrixF diff(x.ctx(), x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
            diff.set(r, c, ctx.sub(x.at(r, c), prod.at(r, c)));
    return ctx.mul(det(w), det(diff));
}

FieldElement bordered_block_det(const MatrixF& a, const MatrixF& b, const MatrixF& c) {
    require_same_ctx(a, b);
    require_same_ctx(a, c);
    const FieldCtx& ctx = *a.ctx();
    std::size_t k = a.rows(), l = a.cols();
    if (c.rows() != k || c.cols() != l) fail(Errc::ShapeMismatch, "A and C must have equal shape");
    if (l > k) fail(Errc::ShapeMismatch, "need l <= k");
    if (b.rows() != k || b.cols() != k - l) fail(Errc::ShapeMismatch, "B must be k x (k-l)");

    // M = [[A, B, C], [I_l, O, -I_l]], size (k+l) x (k+l)
    MatrixF m(a.ctx(), k + l, k + l);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t col = 0; col < l; ++col) m.set(r, col, a.at(r, col));
        for (std::size_t col = 0; col < k - l; ++col) m.set(r, l + col, b.at(r, col));
        for (std::size_t col = 0; col < l; ++col) m.set(r, k + col, c.at(r, col));
    }
    for (std::size_t i = 0; i < l; ++i) {
        m.set(k + i, i, ctx.one());
        m.set(k + i, k + i, ctx.minus_one());
    }
    FieldElement det_m = det(m);

    // N = [B, A + C], size k x k
    MatrixF n(a.ctx(), k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t col = 0; col < k - l; ++col) n.set(r, col, b.at(r, col));
        for (std::size_t col = 0; col < l; ++col)
            n.set(r, (k - l) + col, ctx.add(a.at(r, col), c.at(r, col)));
    }
    FieldElement det_n = det(n);
    bool odd = (l * (k - l + 1)) % 2 == 1;
    FieldElement expected = odd ? ctx.neg(det_n) : det_n;
    if (det_m != expected)
        fail(Errc::InternalInconsistency, "bordered determinant identity violated");
    return det_m;
}

}  // namespace linrank
