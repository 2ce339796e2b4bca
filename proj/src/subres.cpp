#include "linrank/subres.hpp"

#include <functional>
#include <string>

namespace linrank {

namespace {

using CoeffFn = std::function<FieldElement(std::int64_t)>;

// Shared transcription for the classical and q-twisted variants. Row r of the
// a-block carries a_{k-c+r} twisted by q^{l-m-1-r}; the b-block swaps roles.
MatrixF subres_build(const FieldCtxPtr& ctx, const CoeffFn& a, std::int64_t k, const CoeffFn& b,
                     std::int64_t l, std::int64_t m, bool twisted) {
    std::int64_t size = k + l - 2 * m;
    MatrixF out(ctx, std::size_t(size), std::size_t(size));
    auto put = [&](std::int64_t row, std::int64_t col, const FieldElement& v, std::int64_t e) {
        out.set(std::size_t(row), std::size_t(col),
                twisted ? ctx->frobenius_q(v, std::uint64_t(e) % ctx->n()) : v);
    };
    for (std::int64_t r = 0; r < l - m; ++r)
        for (std::int64_t c = 0; c < size; ++c) put(r, c, a(k - c + r), l - m - 1 - r);
    for (std::int64_t r = 0; r < k - m; ++r)
        for (std::int64_t c = 0; c < size; ++c) put(l - m + r, c, b(l - c + r), k - m - 1 - r);
    return out;
}

CoeffFn lp_coeff_fn(const LinearizedPoly& f) {
    return [&f](std::int64_t i) {
        if (i < 0 || std::size_t(i) >= f.coeffs().size()) return f.ctx()->zero();
        return f.coeffs()[std::size_t(i)];
    };
}

CoeffFn dp_coeff_fn(const DensePoly& f) {
    return [&f](std::int64_t i) {
        if (i < 0 || std::size_t(i) >= f.coeffs().size()) return f.ctx()->zero();
        return f.coeffs()[std::size_t(i)];
    };
}

void require_q_pair(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (!f.ctx()->same_field(*g.ctx())) fail(Errc::CtxMismatch, "polynomials over different fields");
    std::uint32_t n = f.ctx()->n();
    if (f.stride() % n != 1 % n || g.stride() % n != 1 % n)
        fail(Errc::StrideNotOne, "scalar q-subresultants need stride 1");
    if (f.is_zero() || g.is_zero())
        fail(Errc::ZeroLeadingCoefficient, "subresultants need nonzero polynomials");
}

}  // namespace

MatrixF build_subresultant_q(const LinearizedPoly& f, const LinearizedPoly& g, std::uint32_t m) {
    require_q_pair(f, g);
    std::int64_t k = f.qdegree(), l = g.qdegree();
    if (std::int64_t(m) > std::min(k, l))
        fail(Errc::DegreeRange, "m = " + std::to_string(m) + " exceeds min(k, l)");
    return subres_build(f.ctx(), lp_coeff_fn(f), k, lp_coeff_fn(g), l, std::int64_t(m), true);
}

bool structural_shrink_check(const LinearizedPoly& f, const LinearizedPoly& g, std::uint32_t m) {
    require_q_pair(f, g);
    std::int64_t k = f.qdegree(), l = g.qdegree();
    if (std::int64_t(m) + 1 > std::min(k, l))
        fail(Errc::DegreeRange, "m + 1 exceeds min(k, l)");
    MatrixF big = build_subresultant_q(f, g, m);
    MatrixF small = build_subresultant_q(f, g, m + 1);
    // remove the first and last columns, the first row, and the first b-row
    std::size_t size = big.rows();
    std::size_t first_b_row = std::size_t(l - m);
    std::size_t rr = 0;
    for (std::size_t r = 0; r < size; ++r) {
        if (r == 0 || r == first_b_row) continue;
        std::size_t cc = 0;
        for (std::size_t c = 1; c + 1 < size; ++c) {
            if (!(small.at(rr, cc) == big.at(r, c))) return false;
            ++cc;
        }
        ++rr;
    }
    return true;
}

SubresChain gcd_qdeg_via_subres(const LinearizedPoly& f, const LinearizedPoly& g) {
    require_q_pair(f, g);
    std::int64_t bound = std::min(f.qdegree(), g.qdegree());
    SubresChain chain;
    for (std::int64_t m = 0; m <= bound; ++m) {
        MatrixF r = build_subresultant_q(f, g, std::uint32_t(m));
        FieldElement d = det(r);
        chain.det_chain.push_back(d);
        chain.sizes.push_back(r.rows());
        if (!d.is_zero()) {
            chain.mu = std::uint32_t(m);
            return chain;
        }
    }
    fail(Errc::InternalInconsistency, "subresultant chain ended without a nonzero determinant");
}

std::size_t subres_nullity(const LinearizedPoly& f, const LinearizedPoly& g, std::uint32_t m) {
    return rank_nullity(build_subresultant_q(f, g, m)).second;
}

MatrixF build_subresultant_padded(const LinearizedPoly& f, std::uint32_t m) {
    const FieldCtxPtr& ctx = f.ctx();
    std::uint32_t n = ctx->n();
    if (f.stride() % n != 1 % n) fail(Errc::StrideNotOne, "padded subresultants need stride 1");
    if (m >= n) fail(Errc::OutOfRange, "m = " + std::to_string(m) + " must be below n");
    LinearizedPoly plain = expand_to_plain(f);  // n coefficients, a_{n-1} may vanish
    FieldElement one = ctx->one(), minus_one = ctx->minus_one(), zero = ctx->zero();
    CoeffFn b = [&, n](std::int64_t i) {
        if (i == std::int64_t(n)) return one;
        if (i == 0) return minus_one;
        return zero;
    };
    return subres_build(ctx, lp_coeff_fn(plain), std::int64_t(n) - 1, b, std::int64_t(n),
                        std::int64_t(m), true);
}

SubresChain rank_via_subres_padded(const LinearizedPoly& f) {
    std::uint32_t n = f.ctx()->n();
    SubresChain chain;
    for (std::uint32_t m = 0; m < n; ++m) {
        MatrixF r = build_subresultant_padded(f, m);
        FieldElement d = det(r);
        chain.det_chain.push_back(d);
        chain.sizes.push_back(r.rows());
        if (!d.is_zero()) {
            chain.mu = m;
            return chain;
        }
    }
    chain.mu = n;  // all proper subresultants vanish: the zero map
    return chain;
}

MatrixF classical_subresultant(const DensePoly& f, const DensePoly& g, std::uint32_t m) {
    if (!f.ctx()->same_field(*g.ctx())) fail(Errc::CtxMismatch, "polynomials over different fields");
    if (f.is_zero() || g.is_zero())
        fail(Errc::ZeroLeadingCoefficient, "subresultants need nonzero polynomials");
    std::int64_t k = f.degree(), l = g.degree();
    if (std::int64_t(m) > std::min(k, l))
        fail(Errc::DegreeRange, "m = " + std::to_string(m) + " exceeds min(deg f, deg g)");
    return subres_build(f.ctx(), dp_coeff_fn(f), k, dp_coeff_fn(g), l, std::int64_t(m), false);
}

std::uint32_t classical_gcd_deg(const DensePoly& f, const DensePoly& g) {
    std::int64_t bound = std::min(f.degree(), g.degree());
    if (f.is_zero() || g.is_zero())
        fail(Errc::ZeroLeadingCoefficient, "subresultants need nonzero polynomials");
    for (std::int64_t m = 0; m <= bound; ++m) {
        if (!det(classical_subresultant(f, g, std::uint32_t(m))).is_zero())
            return std::uint32_t(m);
    }
    fail(Errc::InternalInconsistency, "classical chain ended without a nonzero determinant");
}

}  // namespace linrank
