#pragma once

#include "dldeg/multipoly.hpp"
#include "dldeg/partitions.hpp"

namespace dldeg {

/// Schur polynomial S_lam(x_1..x_d) as det(x_i^{lam_j+d-j}) / det(x_i^{d-j}).
/// The alternant is expanded over permutations; the quotient is exact.
MultiPoly schur_bialternant(const Partition& lam, int d);

/// Schur polynomial as the sum of x^content over semistandard tableaux of
/// shape lam with entries in 1..d.
MultiPoly schur_ssyt(const Partition& lam, int d);

/// Checks sum_c S_c(x) S_{c-hat'}(y) = prod_{i,j} (x_i + y_j) over the d x d
/// box, with x in positions 1..d and y in positions d+1..2d.
bool verify_dual_cauchy(int d);

/// sum_c S_c(q x) S_{c-hat'}(x) S_1(x)^d, summand by summand.
MultiPoly build_S(int d);

/// (prod_{i,j} (q x_i + x_j)) (x_1 + ... + x_d)^d, the closed form of build_S.
MultiPoly build_S_product_form(int d);

}  // namespace dldeg
