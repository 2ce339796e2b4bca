#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "linrank/dense_poly.hpp"
#include "linrank/field.hpp"

namespace linrank {

/// Linearized sigma-polynomial sum_i a_i x^{sigma^i} over F_{q^n}, with
/// sigma = q^stride and gcd(stride, n) = 1. Stride 1 gives plain
/// q-polynomials. Coefficients are stored with trailing zeros trimmed, so the
/// q-degree is coeffs().size() - 1 and the zero polynomial has empty support.
class LinearizedPoly {
  public:
    LinearizedPoly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs, std::uint32_t stride = 1);

    static LinearizedPoly zero(FieldCtxPtr ctx, std::uint32_t stride = 1);
    /// The identity map x.
    static LinearizedPoly identity(FieldCtxPtr ctx, std::uint32_t stride = 1);
    /// a * x^{sigma^k}.
    static LinearizedPoly monomial(FieldCtxPtr ctx, const FieldElement& a, std::size_t k,
                                   std::uint32_t stride = 1);

    const FieldCtxPtr& ctx() const noexcept { return ctx_; }
    std::uint32_t stride() const noexcept { return stride_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t qdegree() const noexcept { return std::int64_t(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : ctx_->zero();
    }
    FieldElement leading() const;

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
        return a.stride_ == b.stride_ && a.coeffs_ == b.coeffs_;
    }

  private:
    FieldCtxPtr ctx_;
    std::vector<FieldElement> coeffs_;
    std::uint32_t stride_;
};

/// Kernel dimension report: mu = dim_q(ker f), rank = n - mu.
struct KernelReport {
    std::uint32_t dim = 0;
    std::uint32_t rank = 0;
    std::optional<std::vector<FieldElement>> kernel_elements;
};

FieldElement lp_eval(const LinearizedPoly& f, const FieldElement& x);

LinearizedPoly lp_add(const LinearizedPoly& f, const LinearizedPoly& g);
LinearizedPoly lp_sub(const LinearizedPoly& f, const LinearizedPoly& g);
/// Left scaling c * f, i.e. (c x) o f.
LinearizedPoly lp_scale(const FieldElement& c, const LinearizedPoly& f);

/// Symbolic composition f o g with the skew rule c_m = sum a_i * b_j^{sigma^i}
/// over i+j = m. Without reduction the q-degree is deg f + deg g; with
/// reduce_mod, exponents are folded mod n (x^{q^n} == x on the field).
LinearizedPoly lp_compose(const LinearizedPoly& f, const LinearizedPoly& g,
                          bool reduce_mod = false);

/// Right Euclidean division: f = quotient o h + remainder with
/// qdeg(remainder) < qdeg(h). No modular reduction is applied.
std::pair<LinearizedPoly, LinearizedPoly> lp_right_divide(const LinearizedPoly& f,
                                                          const LinearizedPoly& h);

/// Monic greatest common symbolic right divisor.
LinearizedPoly lp_gcrd(const LinearizedPoly& f, const LinearizedPoly& g);

/// f folded mod x^{q^n} - x into a stride-1 polynomial with at most n
/// coefficients: the induced F_q-linear map on F_{q^n}.
LinearizedPoly expand_to_plain(const LinearizedPoly& f);

/// f viewed as an ordinary univariate polynomial (sparse exponents q^{i*stride}
/// expanded densely). SizeBudgetExceeded when the ordinary degree exceeds cap.
DensePoly lp_to_ordinary(const LinearizedPoly& f, std::uint64_t cap = std::uint64_t(1) << 20);

/// Monic ordinary gcd of f and g as univariate polynomials. Oracle path only.
DensePoly lp_ordinary_gcd_oracle(const LinearizedPoly& f, const LinearizedPoly& g,
                                 std::uint64_t cap = std::uint64_t(1) << 20);

/// Exhaustive kernel count: reduces f mod x^{q^n} - x, evaluates on the whole
/// field and returns mu = log_q(#zeros). InternalInconsistency if the zero
/// count is not a q-power.
KernelReport lp_kernel_brute(const LinearizedPoly& f, bool collect_elements = false,
                             std::uint64_t budget = default_sweep_budget());

}  // namespace linrank
