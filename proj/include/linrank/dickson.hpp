#pragma once

#include <cstdint>
#include <vector>

#include "linrank/linpoly.hpp"
#include "linrank/matfield.hpp"

namespace linrank {

/// Result of a minor-chain scan: the determinants |D_0|,...,|D_mu| with the
/// first mu of them zero and the last nonzero, mu = dim_q(ker f) and
/// rank = n - mu. For the zero map every proper minor vanishes and the chain
/// is closed by the 0x0 convention value 1; zero_map flags that extension.
struct RankCertificate {
    std::uint32_t mu = 0;
    std::uint32_t rank = 0;
    std::vector<FieldElement> det_chain;
    bool zero_map = false;
};

/// The n x n matrix with entry (r, c) = a_{(c-r) mod n}^{q^r}, coefficients
/// folded to length n first. Requires stride 1.
MatrixF dickson_matrix(const LinearizedPoly& f);

/// D_m(f): dickson_matrix with the first m columns and last m rows removed.
MatrixF dickson_minor(const LinearizedPoly& f, std::uint32_t m);

/// Ascending scan of |D_0(f)|, |D_1(f)|, ... stopping at the first nonzero
/// determinant. Requires stride 1.
RankCertificate rank_via_minor_chain(const LinearizedPoly& f);

/// Sigma-analogue with entry (r, c) = a_{(c-r) mod n}^{sigma^r}, sigma =
/// q^stride. Coincides with dickson_matrix for stride 1.
MatrixF dickson_sigma(const LinearizedPoly& f);

/// D_sigma(f) with rows in J and columns in K removed. J and K must be equal
/// sized runs of consecutive residues mod n (wrap-around allowed).
MatrixF minor_MJK(const LinearizedPoly& f, const std::vector<std::uint32_t>& row_set,
                  const std::vector<std::uint32_t>& col_set);

/// Minor-chain scan over D_{m,sigma}(f); mu equals the F_q-kernel dimension
/// of the induced map.
RankCertificate rank_via_minor_chain_sigma(const LinearizedPoly& f);

}  // namespace linrank
