#include "linrank/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace linrank {

const char* errc_name(Errc kind) noexcept {
    switch (kind) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::SizeBudgetExceeded: return "SizeBudgetExceeded";
        case Errc::CtxMismatch: return "CtxMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::StrideMismatch: return "StrideMismatch";
        case Errc::StrideNotOne: return "StrideNotOne";
        case Errc::StrideNotCoprime: return "StrideNotCoprime";
        case Errc::BothZero: return "BothZero";
        case Errc::NotSquare: return "NotSquare";
        case Errc::SingularW: return "SingularW";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::NotConsecutive: return "NotConsecutive";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::DegreeRange: return "DegreeRange";
        case Errc::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::ParseError: return "ParseError";
        case Errc::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(u64 v) {
    if (v < 2) return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (v % sp == 0) return v == sp;
    }
    u64 d = v - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, v);
            if (x == v - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 inv_mod_prime(u64 a, u64 p) {
    // extended Euclid on (a, p); p prime, a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = std::int64_t(p), newr = std::int64_t(a % p);
    while (newr != 0) {
        std::int64_t quot = r / newr;
        std::int64_t tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += std::int64_t(p);
    return u64(t);
}

// --- dense polynomials over F_p (constant term first, trimmed) ---

using PolyP = std::vector<u64>;

void pp_trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::ptrdiff_t pp_deg(const PolyP& a) { return std::ptrdiff_t(a.size()) - 1; }

PolyP pp_mul(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = (out[i + j] + u128(a[i]) * b[j]) % p;
        }
    }
    pp_trim(out);
    return out;
}

PolyP pp_sub(PolyP a, const PolyP& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    pp_trim(a);
    return a;
}

// remainder of a by b; b nonzero
PolyP pp_mod(PolyP a, const PolyP& b, u64 p) {
    u64 lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        u64 c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        if (c != 0) {
            for (std::size_t i = 0; i < b.size(); ++i) {
                u64 t = mulmod(c, b[i], p);
                a[i + shift] = (a[i + shift] + p - t) % p;
            }
        }
        a.pop_back();
        pp_trim(a);
    }
    return a;
}

PolyP pp_gcd(PolyP a, PolyP b, u64 p) {
    pp_trim(a);
    pp_trim(b);
    while (!b.empty()) {
        PolyP r = pp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PolyP pp_powmod(PolyP base, u64 e, const PolyP& mod, u64 p) {
    PolyP result{1};
    base = pp_mod(std::move(base), mod, p);
    while (e) {
        if (e & 1) result = pp_mod(pp_mul(result, base, p), mod, p);
        base = pp_mod(pp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return result;
}

// g of degree d is irreducible over F_p iff x^{p^d} = x (mod g) and
// gcd(x^{p^{d/r}} - x, g) = 1 for every prime r | d.
bool pp_is_irreducible(const PolyP& g, u64 p) {
    std::size_t d = g.size() - 1;
    PolyP x{0, 1};
    PolyP x_red = pp_mod(x, g, p);
    std::vector<PolyP> states(d + 1);  // states[i] = x^{p^i} mod g
    states[0] = x_red;
    for (std::size_t i = 1; i <= d; ++i) states[i] = pp_powmod(states[i - 1], p, g, p);
    if (states[d] != x_red) return false;
    std::size_t rem = d;
    for (std::size_t r = 2; r * r <= rem; ++r) {
        if (rem % r) continue;
        while (rem % r == 0) rem /= r;
        PolyP diff = pp_sub(states[d / r], x_red, p);
        PolyP gg = pp_gcd(diff, g, p);
        if (pp_deg(gg) != 0) return false;
    }
    if (rem > 1) {
        PolyP diff = pp_sub(states[d / rem], x_red, p);
        PolyP gg = pp_gcd(diff, g, p);
        if (pp_deg(gg) != 0) return false;
    }
    return true;
}

// First irreducible monic polynomial of degree d, scanning the non-leading
// coefficients as ascending base-p integers (constant term least significant).
PolyP pp_default_modulus(u64 p, std::uint32_t d) {
    for (u64 counter = 0;; ++counter) {
        PolyP g(d + 1, 0);
        u64 v = counter;
        for (std::uint32_t i = 0; i < d; ++i) {
            g[i] = v % p;
            v /= p;
        }
        if (v != 0) break;  // exhausted (cannot happen: irreducibles exist)
        g[d] = 1;
        if (pp_is_irreducible(g, p)) return g;
    }
    fail(Errc::InternalInconsistency, "no irreducible modulus found");
}

}  // namespace

FieldCtx::FieldCtx(const FieldParams& params, std::optional<std::vector<u64>> modulus)
    : params_(params) {
    if (!is_prime(params.p)) fail(Errc::NotPrime, "p = " + std::to_string(params.p) + " is not prime");
    if (params.s < 1 || params.n < 1) fail(Errc::ValidationError, "s and n must be positive");
    std::uint64_t deg64 = std::uint64_t(params.s) * params.n;
    if (deg64 > 62) fail(Errc::SizeBudgetExceeded, "p^(s*n) exceeds the 2^62 word budget");
    degree_ = std::uint32_t(deg64);

    // order = p^{s*n}, rejected beyond the word budget so encodings fit u64
    u128 ord = 1;
    for (std::uint32_t i = 0; i < degree_; ++i) {
        ord *= params.p;
        if (ord > kWordBudget)
            fail(Errc::SizeBudgetExceeded, "p^(s*n) exceeds the 2^62 word budget");
    }
    order_ = u64(ord);
    q_ = 1;
    for (std::uint32_t i = 0; i < params.s; ++i) q_ *= params.p;

    if (modulus.has_value()) {
        modulus_ = std::move(*modulus);
        if (modulus_.size() != std::size_t(degree_) + 1 || modulus_.back() != 1)
            fail(Errc::ValidationError, "modulus must be monic of degree s*n");
        for (u64 c : modulus_)
            if (c >= params.p) fail(Errc::ValidationError, "modulus coefficient out of range");
        if (!pp_is_irreducible(modulus_, params.p))
            fail(Errc::NotIrreducible, "modulus is reducible over F_p");
    } else {
        modulus_ = pp_default_modulus(params.p, degree_);
    }

    // x^{degree+j} mod modulus for j in [0, degree-1)
    const u64 p = params.p;
    std::vector<u64> row(degree_);
    for (std::uint32_t t = 0; t < degree_; ++t) row[t] = (p - modulus_[t]) % p;
    reduction_.reserve(degree_ > 0 ? degree_ - 1 : 0);
    for (std::uint32_t j = 0; j + 1 < degree_; ++j) {
        reduction_.push_back(row);
        // multiply by x and reduce the overflow term through x^degree
        u64 top = row[degree_ - 1];
        for (std::uint32_t t = degree_ - 1; t > 0; --t) row[t] = row[t - 1];
        row[0] = 0;
        if (top != 0)
            for (std::uint32_t t = 0; t < degree_; ++t)
                row[t] = (row[t] + u128(top) * ((p - modulus_[t]) % p)) % p;
    }

    // columns of the matrices of x -> x^{q^k} for k in [0, n)
    frob_cols_.assign(params.n, {});
    std::vector<std::vector<u64>>& id = frob_cols_[0];
    id.assign(degree_, std::vector<u64>(degree_, 0));
    for (std::uint32_t i = 0; i < degree_; ++i) id[i][i] = 1;
    if (params.n > 1) {
        PolyP xq = pp_powmod(PolyP{0, 1}, q_, modulus_, p);
        std::vector<std::vector<u64>> m1(degree_);
        PolyP cur{1};
        for (std::uint32_t i = 0; i < degree_; ++i) {
            std::vector<u64> col(degree_, 0);
            for (std::size_t t = 0; t < cur.size(); ++t) col[t] = cur[t];
            m1[i] = std::move(col);
            cur = pp_mod(pp_mul(cur, xq, p), modulus_, p);
        }
        frob_cols_[1] = m1;
        for (std::uint32_t k = 2; k < params.n; ++k) {
            // compose: column i of M_k is M_1 applied to column i of M_{k-1}
            std::vector<std::vector<u64>> mk(degree_);
            for (std::uint32_t i = 0; i < degree_; ++i) {
                std::vector<u64> acc(degree_, 0);
                const auto& prev = frob_cols_[k - 1][i];
                for (std::uint32_t c = 0; c < degree_; ++c) {
                    if (prev[c] == 0) continue;
                    const auto& col = m1[c];
                    for (std::uint32_t r = 0; r < degree_; ++r)
                        acc[r] = (acc[r] + u128(prev[c]) * col[r]) % p;
                }
                mk[i] = std::move(acc);
            }
            frob_cols_[k] = std::move(mk);
        }
    }
}

void FieldCtx::require(const FieldElement& a) const {
    if (a.coeffs().size() != degree_)
        fail(Errc::CtxMismatch, "element has " + std::to_string(a.coeffs().size()) +
                                    " coordinates, field needs " + std::to_string(degree_));
    for (u64 c : a.coeffs())
        if (c >= params_.p) fail(Errc::CtxMismatch, "element coordinate out of range");
}

FieldElement FieldCtx::one() const {
    std::vector<u64> c(degree_, 0);
    c[0] = 1 % params_.p;
    return FieldElement(std::move(c));
}

FieldElement FieldCtx::add(const FieldElement& a, const FieldElement& b) const {
    require(a);
    require(b);
    std::vector<u64> out(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) out[i] = (a.coeffs()[i] + b.coeffs()[i]) % params_.p;
    return FieldElement(std::move(out));
}

FieldElement FieldCtx::sub(const FieldElement& a, const FieldElement& b) const {
    require(a);
    require(b);
    std::vector<u64> out(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i)
        out[i] = (a.coeffs()[i] + params_.p - b.coeffs()[i]) % params_.p;
    return FieldElement(std::move(out));
}

FieldElement FieldCtx::neg(const FieldElement& a) const {
    require(a);
    std::vector<u64> out(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) out[i] = (params_.p - a.coeffs()[i]) % params_.p;
    return FieldElement(std::move(out));
}

FieldElement FieldCtx::mul(const FieldElement& a, const FieldElement& b) const {
    require(a);
    require(b);
    const u64 p = params_.p;
    std::vector<u64> tmp(2 * std::size_t(degree_) - 1, 0);
    for (std::uint32_t i = 0; i < degree_; ++i) {
        u64 ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::uint32_t j = 0; j < degree_; ++j) {
            u64 bj = b.coeffs()[j];
            if (bj == 0) continue;
            tmp[i + j] = (tmp[i + j] + u128(ai) * bj) % p;
        }
    }
    std::vector<u64> out(tmp.begin(), tmp.begin() + degree_);
    for (std::size_t i = degree_; i < tmp.size(); ++i) {
        u64 c = tmp[i];
        if (c == 0) continue;
        const auto& row = reduction_[i - degree_];
        for (std::uint32_t t = 0; t < degree_; ++t) out[t] = (out[t] + u128(c) * row[t]) % p;
    }
    return FieldElement(std::move(out));
}

FieldElement FieldCtx::inv(const FieldElement& a) const {
    require(a);
    if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    const u64 p = params_.p;
    PolyP r0(modulus_), r1(a.coeffs().begin(), a.coeffs().end());
    pp_trim(r1);
    PolyP t0{}, t1{1};
    while (!r1.empty()) {
        // one Euclid step: r0 = q*r1 + r, with the Bezout line updated alongside
        PolyP q;
        {
            PolyP rem = r0;
            u64 lead_inv = inv_mod_prime(r1.back(), p);
            q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                u64 c = mulmod(rem.back(), lead_inv, p);
                std::size_t shift = rem.size() - r1.size();
                q[shift] = c;
                if (c != 0)
                    for (std::size_t i = 0; i < r1.size(); ++i) {
                        u64 tt = mulmod(c, r1[i], p);
                        rem[i + shift] = (rem[i + shift] + p - tt) % p;
                    }
                rem.pop_back();
                pp_trim(rem);
            }
            pp_trim(q);
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        PolyP nt = pp_sub(t0, pp_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    // r0 is a nonzero constant (modulus irreducible)
    if (pp_deg(r0) != 0) fail(Errc::InternalInconsistency, "gcd with modulus not constant");
    u64 scale = inv_mod_prime(r0[0], p);
    std::vector<u64> out(degree_, 0);
    for (std::size_t i = 0; i < t0.size(); ++i) out[i] = mulmod(t0[i], scale, p);
    return FieldElement(std::move(out));
}

FieldElement FieldCtx::pow(const FieldElement& a, u64 e) const {
    require(a);
    FieldElement result = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement FieldCtx::frobenius_q(const FieldElement& a, u64 k) const {
    require(a);
    k %= params_.n;
    if (k == 0) return a;
    const auto& cols = frob_cols_[std::size_t(k)];
    const u64 p = params_.p;
    std::vector<u64> out(degree_, 0);
    for (std::uint32_t c = 0; c < degree_; ++c) {
        u64 ac = a.coeffs()[c];
        if (ac == 0) continue;
        const auto& col = cols[c];
        for (std::uint32_t r = 0; r < degree_; ++r) out[r] = (out[r] + u128(ac) * col[r]) % p;
    }
    return FieldElement(std::move(out));
}

u64 FieldCtx::encode(const FieldElement& a) const {
    require(a);
    u64 v = 0;
    for (std::uint32_t i = degree_; i-- > 0;) v = v * params_.p + a.coeffs()[i];
    return v;
}

FieldElement FieldCtx::decode(u64 v) const {
    if (v >= order_) fail(Errc::OutOfRange, "encoding " + std::to_string(v) + " out of range");
    std::vector<u64> out(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) {
        out[i] = v % params_.p;
        v /= params_.p;
    }
    return FieldElement(std::move(out));
}

FieldCtxPtr make_field_ctx(const FieldParams& params, std::optional<std::vector<u64>> modulus) {
    return std::make_shared<const FieldCtx>(params, std::move(modulus));
}

u64 default_sweep_budget() {
    if (const char* env = std::getenv("LINRANK_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return u64(1) << 48;
}

std::vector<FieldElement> enumerate_elements(const FieldCtx& ctx, u64 budget) {
    if (ctx.order() > budget)
        fail(Errc::SizeBudgetExceeded,
             "field order " + std::to_string(ctx.order()) + " exceeds sweep budget");
    std::vector<FieldElement> out;
    out.reserve(std::size_t(ctx.order()));
    for (u64 v = 0; v < ctx.order(); ++v) out.push_back(ctx.decode(v));
    return out;
}

}  // namespace linrank
