#include "linrank/dickson.hpp"

#include <string>

namespace linrank {

namespace {

// sigma-position coefficients folded to length n: x^{sigma^i} == x^{sigma^{i mod n}}
std::vector<FieldElement> fold_sigma_coeffs(const LinearizedPoly& f) {
    const FieldCtx& ctx = *f.ctx();
    std::uint32_t n = ctx.n();
    std::vector<FieldElement> a(n, ctx.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        std::size_t j = i % n;
        a[j] = ctx.add(a[j], f.coeffs()[i]);
    }
    return a;
}

// entry (r, c) = a_{(c-r) mod n}^{sigma^r}
MatrixF sigma_matrix(const LinearizedPoly& f) {
    const FieldCtx& ctx = *f.ctx();
    std::uint32_t n = ctx.n();
    std::vector<FieldElement> a = fold_sigma_coeffs(f);
    MatrixF m(f.ctx(), n, n);
    for (std::uint32_t r = 0; r < n; ++r) {
        std::uint64_t twist = (std::uint64_t(r) * f.stride()) % n;
        for (std::uint32_t c = 0; c < n; ++c)
            m.set(r, c, ctx.frobenius_q(a[(c + n - r) % n], twist));
    }
    return m;
}

MatrixF remove_rows_cols(const MatrixF& m, const std::vector<std::uint32_t>& rows,
                         const std::vector<std::uint32_t>& cols) {
    std::vector<bool> drop_row(m.rows(), false), drop_col(m.cols(), false);
    for (auto r : rows) drop_row[r] = true;
    for (auto c : cols) drop_col[c] = true;
    MatrixF out(m.ctx(), m.rows() - rows.size(), m.cols() - cols.size());
    std::size_t rr = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (drop_row[r]) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (drop_col[c]) continue;
            out.set(rr, cc, m.at(r, c));
            ++cc;
        }
        ++rr;
    }
    return out;
}

// standard minor D_m: drop the first m columns and the last m rows
MatrixF chain_minor(const MatrixF& d, std::uint32_t m) {
    std::uint32_t n = std::uint32_t(d.rows());
    std::vector<std::uint32_t> rows, cols;
    for (std::uint32_t i = 0; i < m; ++i) {
        rows.push_back(n - m + i);
        cols.push_back(i);
    }
    return remove_rows_cols(d, rows, cols);
}

RankCertificate scan_chain(const MatrixF& d) {
    std::uint32_t n = std::uint32_t(d.rows());
    RankCertificate cert;
    for (std::uint32_t m = 0; m <= n; ++m) {
        FieldElement dm = det(chain_minor(d, m));
        cert.det_chain.push_back(dm);
        if (!dm.is_zero()) {
            cert.mu = m;
            cert.rank = n - m;
            cert.zero_map = (m == n);
            return cert;
        }
    }
    fail(Errc::InternalInconsistency, "minor chain ended without a nonzero determinant");
}

void require_stride_one(const LinearizedPoly& f, const char* op) {
    std::uint32_t n = f.ctx()->n();
    if (f.stride() % n != 1 % n)
        fail(Errc::StrideNotOne, std::string(op) + " needs stride 1; use the sigma variant");
}

// validates a set of residues as a run of consecutive integers mod n
void require_consecutive_run(const std::vector<std::uint32_t>& set, std::uint32_t n,
                             const char* which) {
    std::size_t m = set.size();
    if (m == 0) return;
    std::vector<bool> member(n, false);
    for (auto v : set) {
        if (v >= n) fail(Errc::OutOfRange, std::string(which) + " index out of [0, n)");
        if (member[v]) fail(Errc::NotConsecutive, std::string(which) + " has repeated indices");
        member[v] = true;
    }
    for (std::uint32_t start = 0; start < n; ++start) {
        bool run = true;
        for (std::size_t i = 0; i < m; ++i)
            if (!member[(start + std::uint32_t(i)) % n]) {
                run = false;
                break;
            }
        if (run) return;
    }
    fail(Errc::NotConsecutive, std::string(which) + " is not a consecutive run mod n");
}

}  // namespace

MatrixF dickson_matrix(const LinearizedPoly& f) {
    require_stride_one(f, "dickson_matrix");
    return sigma_matrix(f);
}

MatrixF dickson_minor(const LinearizedPoly& f, std::uint32_t m) {
    if (m > f.ctx()->n())
        fail(Errc::OutOfRange, "minor index m = " + std::to_string(m) + " exceeds n");
    return chain_minor(dickson_matrix(f), m);
}

RankCertificate rank_via_minor_chain(const LinearizedPoly& f) {
    require_stride_one(f, "rank_via_minor_chain");
    return scan_chain(sigma_matrix(f));
}

MatrixF dickson_sigma(const LinearizedPoly& f) {
    // gcd(stride, n) = 1 is a construction invariant of LinearizedPoly
    return sigma_matrix(f);
}

MatrixF minor_MJK(const LinearizedPoly& f, const std::vector<std::uint32_t>& row_set,
                  const std::vector<std::uint32_t>& col_set) {
    if (row_set.size() != col_set.size())
        fail(Errc::SizeMismatch, "row and column sets must have equal size");
    std::uint32_t n = f.ctx()->n();
    require_consecutive_run(row_set, n, "J");
    require_consecutive_run(col_set, n, "K");
    return remove_rows_cols(dickson_sigma(f), row_set, col_set);
}

RankCertificate rank_via_minor_chain_sigma(const LinearizedPoly& f) {
    return scan_chain(sigma_matrix(f));
}

}  // namespace linrank
