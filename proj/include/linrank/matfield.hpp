#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "linrank/field.hpp"

namespace linrank {

/// Dense rectangular matrix over F_{q^n}, row-major. The 0x0 matrix is legal
/// and has determinant 1. Callers treat matrices as immutable values;
/// elimination always works on an internal copy.
class MatrixF {
  public:
    MatrixF(FieldCtxPtr ctx, std::size_t rows, std::size_t cols);
    MatrixF(FieldCtxPtr ctx, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static MatrixF identity(FieldCtxPtr ctx, std::size_t k);

    const FieldCtxPtr& ctx() const noexcept { return ctx_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const FieldElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, FieldElement v) { entries_[r * cols_ + c] = std::move(v); }
    const std::vector<FieldElement>& entries() const noexcept { return entries_; }

    friend bool operator==(const MatrixF& a, const MatrixF& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    FieldCtxPtr ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> entries_;
};

/// Exact determinant by Gaussian elimination with first-nonzero pivoting and
/// swap-sign tracking. det of the 0x0 matrix is 1.
FieldElement det(const MatrixF& m);

/// (rank, nullity) with nullity = cols - rank.
std::pair<std::size_t, std::size_t> rank_nullity(const MatrixF& m);

MatrixF mat_mul(const MatrixF& a, const MatrixF& b);
MatrixF mat_add(const MatrixF& a, const MatrixF& b);
MatrixF transpose(const MatrixF& m);
/// Gauss-Jordan inverse; SingularW if not invertible.
MatrixF mat_inverse(const MatrixF& m);

/// det(W) * det(X - Y W^{-1} Z), the determinant of [[X, Y], [Z, W]].
FieldElement schur_block_det(const MatrixF& x, const MatrixF& y, const MatrixF& z,
                             const MatrixF& w);

/// Determinant of M = [[A, B, C], [I_l, O, -I_l]] where A, C are k x l and B
/// is k x (k-l). Also checks det(M) = (-1)^{l(k-l+1)} det([B, A+C]) and throws
/// InternalInconsistency if the identity fails.
FieldElement bordered_block_det(const MatrixF& a, const MatrixF& b, const MatrixF& c);

}  // namespace linrank
