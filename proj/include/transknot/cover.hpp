#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "transknot/braid.hpp"
#include "transknot/laurent.hpp"

namespace transknot {

// Reduced Burau representation, (n-1) x (n-1). Generator sigma_i acts as the
// identity except for column i, which is (t, -t, 1) in rows i-1, i, i+1
// (1-based, truncated at the edges); sigma_i^-1 has column (1, -1/t, 1/t).
// Words multiply left to right: burau(ab) = burau(a) burau(b).
LaurentMatrix burau_reduced(const BraidWord& braid);

// Same representation evaluated at a complex point, multiplied numerically.
std::vector<std::vector<std::complex<double>>> burau_reduced_at(const BraidWord& braid,
                                                                std::complex<double> t);

// Alexander polynomial of a knot closure, from
//   det(burau(b) - I) / (1 + t + ... + t^(n-1)),
// normalized to be symmetric under t -> 1/t with value +1 at t = 1.
LaurentPolynomial alexander_polynomial(const BraidWord& braid);

// Multiplies by the unit +-t^k making p symmetric with p(1) > 0.
LaurentPolynomial normalize_alexander(const LaurentPolynomial& p);

// |H_1| of the n-fold cyclic branched cover of S^3 along a knot, by Fox's
// formula: the product of |Delta(zeta^j)| over nontrivial n-th roots of
// unity. Returns 0 when H_1 is infinite. Computed exactly as |det Delta(C)|
// for C the companion matrix of 1 + t + ... + t^(n-1), and cross-checked
// against a 50-digit floating-point evaluation of the product.
std::uint64_t cyclic_cover_homology_order(const BraidWord& braid, int n);
std::uint64_t cyclic_cover_homology_order(const LaurentPolynomial& alexander, int n);

}  // namespace transknot
