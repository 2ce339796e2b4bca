#include "linrank/linpoly.hpp"

#include <numeric>
#include <string>

namespace linrank {

namespace {

void trim(std::vector<FieldElement>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

void require_same(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (!f.ctx()->same_field(*g.ctx()))
        fail(Errc::CtxMismatch, "polynomials over different fields");
    if (f.stride() != g.stride())
        fail(Errc::StrideMismatch, "stride " + std::to_string(f.stride()) + " vs " +
                                       std::to_string(g.stride()));
}

}  // namespace

LinearizedPoly::LinearizedPoly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs,
                               std::uint32_t stride)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)), stride_(stride) {
    if (stride_ == 0 || std::gcd(std::uint64_t(stride_), std::uint64_t(ctx_->n())) != 1)
        fail(Errc::StrideNotCoprime,
             "stride " + std::to_string(stride_) + " not coprime to n = " + std::to_string(ctx_->n()));
    for (const auto& c : coeffs_) ctx_->require(c);
    trim(coeffs_);
}

LinearizedPoly LinearizedPoly::zero(FieldCtxPtr ctx, std::uint32_t stride) {
    return LinearizedPoly(std::move(ctx), {}, stride);
}

LinearizedPoly LinearizedPoly::identity(FieldCtxPtr ctx, std::uint32_t stride) {
    FieldElement one = ctx->one();
    return LinearizedPoly(std::move(ctx), {one}, stride);
}

LinearizedPoly LinearizedPoly::monomial(FieldCtxPtr ctx, const FieldElement& a, std::size_t k,
                                        std::uint32_t stride) {
    std::vector<FieldElement> coeffs(k + 1, ctx->zero());
    coeffs[k] = a;
    return LinearizedPoly(std::move(ctx), std::move(coeffs), stride);
}

FieldElement LinearizedPoly::leading() const {
    if (is_zero()) fail(Errc::ZeroLeadingCoefficient, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FieldElement lp_eval(const LinearizedPoly& f, const FieldElement& x) {
    const FieldCtx& ctx = *f.ctx();
    ctx.require(x);
    FieldElement acc = ctx.zero();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        std::uint64_t k = (std::uint64_t(i) * f.stride()) % ctx.n();
        acc = ctx.add(acc, ctx.mul(f.coeffs()[i], ctx.frobenius_q(x, k)));
    }
    return acc;
}

LinearizedPoly lp_add(const LinearizedPoly& f, const LinearizedPoly& g) {
    require_same(f, g);
    const FieldCtx& ctx = *f.ctx();
    std::vector<FieldElement> out(std::max(f.coeffs().size(), g.coeffs().size()), ctx.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(f.coeff(i), g.coeff(i));
    return LinearizedPoly(f.ctx(), std::move(out), f.stride());
}

LinearizedPoly lp_sub(const LinearizedPoly& f, const LinearizedPoly& g) {
    require_same(f, g);
    const FieldCtx& ctx = *f.ctx();
    std::vector<FieldElement> out(std::max(f.coeffs().size(), g.coeffs().size()), ctx.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub(f.coeff(i), g.coeff(i));
    return LinearizedPoly(f.ctx(), std::move(out), f.stride());
}

LinearizedPoly lp_scale(const FieldElement& c, const LinearizedPoly& f) {
    const FieldCtx& ctx = *f.ctx();
    std::vector<FieldElement> out = f.coeffs();
    for (auto& a : out) a = ctx.mul(c, a);
    return LinearizedPoly(f.ctx(), std::move(out), f.stride());
}

LinearizedPoly lp_compose(const LinearizedPoly& f, const LinearizedPoly& g, bool reduce_mod) {
    require_same(f, g);
    const FieldCtx& ctx = *f.ctx();
    if (f.is_zero() || g.is_zero()) return LinearizedPoly::zero(f.ctx(), f.stride());
    std::size_t out_len = f.coeffs().size() + g.coeffs().size() - 1;
    std::size_t folded_len = reduce_mod ? std::min<std::size_t>(out_len, ctx.n()) : out_len;
    std::vector<FieldElement> out(folded_len, ctx.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        std::uint64_t twist = (std::uint64_t(i) * f.stride()) % ctx.n();
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            if (g.coeffs()[j].is_zero()) continue;
            std::size_t m = i + j;
            if (reduce_mod) m %= ctx.n();
            out[m] = ctx.add(out[m], ctx.mul(f.coeffs()[i], ctx.frobenius_q(g.coeffs()[j], twist)));
        }
    }
    return LinearizedPoly(f.ctx(), std::move(out), f.stride());
}

std::pair<LinearizedPoly, LinearizedPoly> lp_right_divide(const LinearizedPoly& f,
                                                          const LinearizedPoly& h) {
    require_same(f, h);
    const FieldCtx& ctx = *f.ctx();
    if (h.is_zero()) fail(Errc::DivisionByZero, "right division by the zero polynomial");
    std::vector<FieldElement> rem = f.coeffs();
    std::size_t hlen = h.coeffs().size();
    std::vector<FieldElement> quot;
    if (rem.size() >= hlen) quot.assign(rem.size() - hlen + 1, ctx.zero());
    while (rem.size() >= hlen) {
        std::size_t d = rem.size() - hlen;  // q-degree gap
        // leading coefficient of (t x^{sigma^d}) o h is t * h_lead^{sigma^d}
        std::uint64_t twist = (std::uint64_t(d) * f.stride()) % ctx.n();
        FieldElement t = ctx.mul(rem.back(), ctx.inv(ctx.frobenius_q(h.coeffs().back(), twist)));
        quot[d] = t;
        for (std::size_t j = 0; j < hlen; ++j) {
            if (h.coeffs()[j].is_zero()) continue;
            rem[d + j] = ctx.sub(rem[d + j], ctx.mul(t, ctx.frobenius_q(h.coeffs()[j], twist)));
        }
        rem.pop_back();
        trim(rem);
    }
    return {LinearizedPoly(f.ctx(), std::move(quot), f.stride()),
            LinearizedPoly(f.ctx(), std::move(rem), f.stride())};
}

namespace {

LinearizedPoly make_monic(const LinearizedPoly& f) {
    if (f.is_zero()) return f;
    return lp_scale(f.ctx()->inv(f.leading()), f);
}

}  // namespace

LinearizedPoly lp_gcrd(const LinearizedPoly& f, const LinearizedPoly& g) {
    require_same(f, g);
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcrd(0, 0) is undefined");
    LinearizedPoly a = f, b = g;
    while (!b.is_zero()) {
        LinearizedPoly r = lp_right_divide(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

LinearizedPoly expand_to_plain(const LinearizedPoly& f) {
    const FieldCtx& ctx = *f.ctx();
    std::vector<FieldElement> plain(ctx.n(), ctx.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        std::size_t j = (std::uint64_t(i) * f.stride()) % ctx.n();
        plain[j] = ctx.add(plain[j], f.coeffs()[i]);
    }
    return LinearizedPoly(f.ctx(), std::move(plain), 1);
}

DensePoly lp_to_ordinary(const LinearizedPoly& f, std::uint64_t cap) {
    const FieldCtx& ctx = *f.ctx();
    if (f.is_zero()) return DensePoly(f.ctx());
    // ordinary degree is q^{stride * qdeg}
    unsigned __int128 top = 1;
    std::uint64_t exps = std::uint64_t(f.qdegree()) * f.stride();
    for (std::uint64_t i = 0; i < exps; ++i) {
        top *= ctx.q();
        if (top > cap)
            fail(Errc::SizeBudgetExceeded, "ordinary degree exceeds the expansion cap");
    }
    std::vector<FieldElement> out(std::size_t(top) + 1, ctx.zero());
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        out[e] = ctx.add(out[e], f.coeffs()[i]);
        for (std::uint32_t t = 0; t < f.stride(); ++t) e *= ctx.q();
    }
    return DensePoly(f.ctx(), std::move(out));
}

DensePoly lp_ordinary_gcd_oracle(const LinearizedPoly& f, const LinearizedPoly& g,
                                 std::uint64_t cap) {
    require_same(f, g);
    if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    return dp_gcd(lp_to_ordinary(f, cap), lp_to_ordinary(g, cap));
}

KernelReport lp_kernel_brute(const LinearizedPoly& f, bool collect_elements,
                             std::uint64_t budget) {
    const FieldCtx& ctx = *f.ctx();
    if (ctx.order() > budget)
        fail(Errc::SizeBudgetExceeded,
             "field order " + std::to_string(ctx.order()) + " exceeds sweep budget");
    LinearizedPoly plain = expand_to_plain(f);
    std::uint64_t zeros = 0;
    std::vector<FieldElement> elements;
    for (std::uint64_t v = 0; v < ctx.order(); ++v) {
        FieldElement x = ctx.decode(v);
        if (lp_eval(plain, x).is_zero()) {
            ++zeros;
            if (collect_elements) elements.push_back(std::move(x));
        }
    }
    std::uint32_t mu = 0;
    std::uint64_t power = 1;
    while (power < zeros) {
        power *= ctx.q();
        ++mu;
    }
    if (power != zeros)
        fail(Errc::InternalInconsistency,
             "kernel size " + std::to_string(zeros) + " is not a power of q");
    KernelReport report;
    report.dim = mu;
    report.rank = ctx.n() - mu;
    if (collect_elements) report.kernel_elements = std::move(elements);
    return report;
}

}  // namespace linrank
