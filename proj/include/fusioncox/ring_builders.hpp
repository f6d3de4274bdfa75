#pragma once

#include <vector>

#include "fusioncox/fusion_ring.hpp"

namespace fusioncox {

// Cayley tables are matrices t with t[g][h] = index of g*h. The builders
// verify the group axioms and throw StructuralError when they fail.
using CayleyTable = std::vector<std::vector<int>>;

CayleyTable cyclic_group_table(int n);
CayleyTable symmetric_group3_table();

// Integer group ring Z[G]; involution is g -> g^{-1}.
RingPtr build_group_ring(const CayleyTable& table, std::vector<std::string> labels = {},
                         std::string name = "");

// Rank n-1 quotient Z[x]/(P_{n-1}(x)) on the Chebyshev-like basis
// P_0, ..., P_{n-2} (P_0 = 1, P_1 = x, P_{k+1} = x P_k - P_{k-1}).
// Structure constants come from exact polynomial multiplication followed
// by reduction modulo P_{n-1}; the involution is the identity.
RingPtr build_verlinde(int n);

// The subring spanned by the even-index basis elements of build_verlinde(n).
RingPtr build_verlinde_even(int n);

// Basis (1, V, sgn) with V*V = 1 + V + sgn; involution is the identity.
RingPtr build_rep_s3();

// Basis G together with one extra element m: g*h from the table,
// g*m = m*g = m and m*m = sum of all g. Requires an abelian table.
RingPtr build_tambara_yamagami(const CayleyTable& table, std::vector<std::string> labels = {},
                               std::string name = "");

// Tensor product with the lexicographic basis, left factor index major.
RingPtr build_tensor_product(const RingPtr& a, const RingPtr& b);

// --- exact Chebyshev-style polynomial helpers -------------------------------
// Exposed so tests can cross-check the Verlinde structure constants against
// independent closed forms. Polynomials are coefficient vectors, index =
// degree, normalized to drop trailing zeros.
using Poly = std::vector<Int>;

Poly poly_mul(const Poly& a, const Poly& b);
// Remainder of a modulo the monic polynomial b (exact over the integers).
Poly poly_mod_monic(Poly a, const Poly& b);
// P_k as an integer polynomial.
Poly chebyshev_basis_poly(int k);
// Expand a polynomial of degree <= bound over the basis P_0..P_bound.
std::vector<Int> to_chebyshev_basis(Poly p, int bound);

}  // namespace fusioncox
