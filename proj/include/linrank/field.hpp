#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "linrank/error.hpp"

namespace linrank {

/// Parameters of F_{p^{s*n}} viewed as F_{q^n} with q = p^s.
struct FieldParams {
    std::uint64_t p = 2;  // characteristic, prime
    std::uint32_t s = 1;  // q = p^s
    std::uint32_t n = 1;  // extension degree over F_q

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// Element of F_{p^{s*n}} in the power basis of the modulus: s*n residues
/// mod p, constant term first.
class FieldElement {
  public:
    FieldElement() = default;
    explicit FieldElement(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    bool is_zero() const noexcept {
        for (auto c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

  private:
    std::vector<std::uint64_t> coeffs_;
};

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Immutable description of F_{p^{s*n}} with its irreducible modulus over F_p.
/// All operations are pure; a constructed ctx is safe to share across threads.
class FieldCtx {
  public:
    /// Validates params and modulus; computes Frobenius and reduction tables.
    /// If `modulus` is empty, picks the deterministic default: the first
    /// irreducible monic polynomial of degree s*n in ascending order of the
    /// integer whose base-p digits are the non-leading coefficients.
    FieldCtx(const FieldParams& params, std::optional<std::vector<std::uint64_t>> modulus);

    const FieldParams& params() const noexcept { return params_; }
    std::uint64_t p() const noexcept { return params_.p; }
    std::uint32_t s() const noexcept { return params_.s; }
    std::uint32_t n() const noexcept { return params_.n; }
    /// s*n, the degree of the modulus over F_p.
    std::uint32_t ext_degree() const noexcept { return degree_; }
    /// q = p^s.
    std::uint64_t q() const noexcept { return q_; }
    /// p^{s*n}, the number of field elements.
    std::uint64_t order() const noexcept { return order_; }
    /// Monic irreducible modulus, constant term first, length s*n+1.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    bool same_field(const FieldCtx& other) const noexcept {
        return params_ == other.params_ && modulus_ == other.modulus_;
    }

    /// Throws CtxMismatch unless `a` is a well-formed element of this field.
    void require(const FieldElement& a) const;

    FieldElement zero() const { return FieldElement(std::vector<std::uint64_t>(degree_, 0)); }
    FieldElement one() const;
    FieldElement minus_one() const { return neg(one()); }
    bool is_one(const FieldElement& a) const { return a == one(); }

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Multiplicative inverse via extended Euclid on coefficient polynomials.
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    /// a^{q^k}; k is reduced mod n (the q-Frobenius has order n on this field).
    FieldElement frobenius_q(const FieldElement& a, std::uint64_t k) const;

    /// Little-endian base-p digit encoding; inverse of decode.
    std::uint64_t encode(const FieldElement& a) const;
    FieldElement decode(std::uint64_t v) const;

  private:
    FieldParams params_;
    std::uint32_t degree_ = 1;
    std::uint64_t q_ = 2;
    std::uint64_t order_ = 2;
    std::vector<std::uint64_t> modulus_;
    // reduction_[j] = x^{degree_+j} mod modulus, as degree_ residues
    std::vector<std::vector<std::uint64_t>> reduction_;
    // frob_cols_[k][c] = column c of the matrix of x -> x^{q^k} over F_p
    std::vector<std::vector<std::vector<std::uint64_t>>> frob_cols_;
};

/// Builds a shared field context. Errors: NotPrime, NotIrreducible,
/// SizeBudgetExceeded, ValidationError.
FieldCtxPtr make_field_ctx(const FieldParams& params,
                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

/// Hard cap on p^{s*n} so integer encodings stay inside one 64-bit word.
inline constexpr std::uint64_t kWordBudget = std::uint64_t(1) << 62;

/// Default cap for exhaustive sweeps (2^48), overridable with LINRANK_BUDGET.
std::uint64_t default_sweep_budget();

/// All p^{s*n} elements in ascending encoding order. SizeBudgetExceeded if
/// the field order exceeds the budget.
std::vector<FieldElement> enumerate_elements(const FieldCtx& ctx,
                                             std::uint64_t budget = default_sweep_budget());

}  // namespace linrank
