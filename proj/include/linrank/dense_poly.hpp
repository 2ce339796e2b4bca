#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linrank/field.hpp"

namespace linrank {

/// Ordinary (non-linearized) dense polynomial over F_{q^n}, constant term
/// first, trailing zeros trimmed. Used by the gcd-degree oracles and the
/// classical subresultants; never on a fast path.
class DensePoly {
  public:
    explicit DensePoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    DensePoly(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

    const FieldCtxPtr& ctx() const noexcept { return ctx_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return std::int64_t(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    FieldElement coeff(std::size_t i) const;
    FieldElement leading() const;

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    FieldCtxPtr ctx_;
    std::vector<FieldElement> coeffs_;
};

DensePoly dp_add(const DensePoly& a, const DensePoly& b);
DensePoly dp_sub(const DensePoly& a, const DensePoly& b);
DensePoly dp_mul(const DensePoly& a, const DensePoly& b);
/// Euclidean division; divisor nonzero. Returns (quotient, remainder).
std::pair<DensePoly, DensePoly> dp_divmod(const DensePoly& a, const DensePoly& b);
DensePoly dp_make_monic(const DensePoly& a);
/// Monic gcd by the Euclidean algorithm; BothZero if both inputs vanish.
DensePoly dp_gcd(DensePoly a, DensePoly b);
FieldElement dp_eval(const DensePoly& a, const FieldElement& x);

}  // namespace linrank
