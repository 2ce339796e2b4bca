#pragma once

#include <cstdint>
#include <vector>

#include "linrank/dense_poly.hpp"
#include "linrank/linpoly.hpp"
#include "linrank/matfield.hpp"

namespace linrank {

/// Determinant chain |R_{0,q}|,...,|R_{mu,q}| of scalar q-subresultants, all
/// zero before index mu. For the padded chain of the zero map there is no
/// nonzero entry; mu is then n and the chain carries n zeros.
struct SubresChain {
    std::uint32_t mu = 0;
    std::vector<FieldElement> det_chain;
    std::vector<std::size_t> sizes;
};

/// The (k+l-2m)-square matrix R_{m,q}(f,g) of Frobenius-twisted coefficient
/// bands: row r of the a-block carries a_{k-c+r} twisted by q^{l-m-1-r}, row r
/// of the b-block carries b_{l-c+r} twisted by q^{k-m-1-r}; out-of-range
/// coefficients are zero. Requires nonzero leading coefficients, stride 1 and
/// 0 <= m <= min(k, l).
MatrixF build_subresultant_q(const LinearizedPoly& f, const LinearizedPoly& g, std::uint32_t m);

/// Verifies entrywise that R_{m+1,q}(f,g) equals R_{m,q}(f,g) with its first
/// and last columns and its first and (l-m+1)-th rows removed.
bool structural_shrink_check(const LinearizedPoly& f, const LinearizedPoly& g, std::uint32_t m);

/// Ascending determinant scan; the first nonzero index equals the q-degree of
/// gcrd(f, g).
SubresChain gcd_qdeg_via_subres(const LinearizedPoly& f, const LinearizedPoly& g);

/// Nullity of R_{m,q}(f,g). Equals mu - m whenever m <= mu.
std::size_t subres_nullity(const LinearizedPoly& f, const LinearizedPoly& g, std::uint32_t m);

/// R_m(f) := R_{m,q}(f, x^{q^n} - x) built with formal q-degree n-1, so the
/// true q-degree of f need not be known. 0 <= m <= n-1.
MatrixF build_subresultant_padded(const LinearizedPoly& f, std::uint32_t m);

/// Scan of the padded chain |R_0(f)|,...: the first nonzero index is
/// dim_q(ker f); an all-zero chain means the zero map (mu = n).
SubresChain rank_via_subres_padded(const LinearizedPoly& f);

/// Classical scalar subresultant matrix of two ordinary polynomials (same
/// band layout, no Frobenius twist).
MatrixF classical_subresultant(const DensePoly& f, const DensePoly& g, std::uint32_t m);

/// First nonzero index of the classical chain; equals deg gcd(f, g).
std::uint32_t classical_gcd_deg(const DensePoly& f, const DensePoly& g);

}  // namespace linrank
