#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fusioncox/realisation.hpp"

namespace fusioncox {

// Breadth-first enumeration of the group generated by the matrices of a
// realisation, deduplicating on exact matrix coefficients. `words` holds
// shortlex normal forms in discovery order (identity first); `parents[i]`
// records which element and appended generator produced element i, so
// derived data can be replayed without recomputing products from scratch.
struct GroupEnumeration {
  std::vector<std::vector<int>> words;
  std::vector<std::pair<int, int>> parents;  // (parent index, generator); (-1,-1) at identity
  bool complete = false;                     // false when the cap stopped the search
};

GroupEnumeration enumerate_ring_group(const GeometricRealisation& real, size_t cap = 10000);

// Order of the abstract Coxeter group, computed independently of any ring:
// breadth-first closure of the classical reflection representation built
// from the Coxeter matrix alone. nullopt when the cap was reached.
std::optional<size_t> real_group_order(const CoxeterMatrix& coxeter, size_t cap = 10000,
                                       double tol = 1e-9);

}  // namespace fusioncox
