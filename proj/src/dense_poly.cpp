#include "linrank/dense_poly.hpp"

namespace linrank {

namespace {

void trim(std::vector<FieldElement>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

const FieldCtx& common_ctx(const DensePoly& a, const DensePoly& b) {
    if (!a.ctx()->same_field(*b.ctx())) fail(Errc::CtxMismatch, "polynomials over different fields");
    return *a.ctx();
}

}  // namespace

DensePoly::DensePoly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) ctx_->require(c);
    trim(coeffs_);
}

FieldElement DensePoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ctx_->zero();
}

FieldElement DensePoly::leading() const {
    if (is_zero()) fail(Errc::ZeroLeadingCoefficient, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

DensePoly dp_add(const DensePoly& a, const DensePoly& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()), ctx.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(a.coeff(i), b.coeff(i));
    return DensePoly(a.ctx(), std::move(out));
}

DensePoly dp_sub(const DensePoly& a, const DensePoly& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()), ctx.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub(a.coeff(i), b.coeff(i));
    return DensePoly(a.ctx(), std::move(out));
}

DensePoly dp_mul(const DensePoly& a, const DensePoly& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    if (a.is_zero() || b.is_zero()) return DensePoly(a.ctx());
    std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() - 1, ctx.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = ctx.add(out[i + j], ctx.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return DensePoly(a.ctx(), std::move(out));
}

std::pair<DensePoly, DensePoly> dp_divmod(const DensePoly& a, const DensePoly& b) {
    const FieldCtx& ctx = common_ctx(a, b);
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<FieldElement> rem = a.coeffs();
    std::vector<FieldElement> quot;
    if (a.coeffs().size() >= b.coeffs().size())
        quot.assign(a.coeffs().size() - b.coeffs().size() + 1, ctx.zero());
    FieldElement lead_inv = ctx.inv(b.leading());
    while (rem.size() >= b.coeffs().size() && !rem.empty()) {
        FieldElement c = ctx.mul(rem.back(), lead_inv);
        std::size_t shift = rem.size() - b.coeffs().size();
        quot[shift] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i < b.coeffs().size(); ++i)
                rem[i + shift] = ctx.sub(rem[i + shift], ctx.mul(c, b.coeffs()[i]));
        rem.pop_back();
        trim(rem);
    }
    return {DensePoly(a.ctx(), std::move(quot)), DensePoly(a.ctx(), std::move(rem))};
}

DensePoly dp_make_monic(const DensePoly& a) {
    if (a.is_zero()) return a;
    const FieldCtx& ctx = *a.ctx();
    FieldElement scale = ctx.inv(a.leading());
    std::vector<FieldElement> out = a.coeffs();
    for (auto& c : out) c = ctx.mul(c, scale);
    return DensePoly(a.ctx(), std::move(out));
}

DensePoly dp_gcd(DensePoly a, DensePoly b) {
    common_ctx(a, b);
    if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        DensePoly r = dp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return dp_make_monic(a);
}

FieldElement dp_eval(const DensePoly& a, const FieldElement& x) {
    const FieldCtx& ctx = *a.ctx();
    FieldElement acc = ctx.zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), a.coeffs()[i]);
    return acc;
}

}  // namespace linrank
