#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusioncox/realisation.hpp"

namespace fusioncox {

// The Coxeter system obtained from a realisation over a fusion ring by
// passing to the integral basis b_i alpha_s of the underlying free module.
// Vertices are (basis index, generator index) pairs, ordered by generator
// index first so that each generator's fiber is a contiguous block; this
// fixes the word order of the unfolding homomorphism and of all emitted
// matrices.
struct UnfoldedSystem {
  GeometricRealisation source;
  std::vector<std::pair<int, int>> vertices;  // (basis index, generator index)
  CoxeterMatrix graph;                        // labels in {2 (no edge), 3, infinity}
  IntMatrix cartan_z;                         // integral Cartan matrix, symmetric
  std::vector<std::vector<int>> fibers;       // per source generator: vertex indices
  std::vector<double> basis_fpdim;            // FP dimensions of the ring basis

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int vertex_index(int basis, int generator) const;
  std::string vertex_name(int v) const;
};

// Builds the unfolded system. Construction verifies: diagonal entries 2,
// off-diagonal entries <= 0, symmetry of the integral Cartan matrix,
// agreement between the graph labels and the Cartan entries (3 <-> -1,
// infinity <-> <= -2, no edge <-> 0), non-adjacency inside each fiber, and
// agreement between the two equivalent edge rules (left and right
// multiplication by the Cartan entry). Violations throw VerificationError.
UnfoldedSystem unfold(const GeometricRealisation& real);

// Reflection matrix of one unfolded vertex acting on row vectors over Z.
IntMatrix unfolded_reflection(const UnfoldedSystem& u, int v);

// Integral matrix of a ring-matrix through the module identification
// (b_j alpha_t) -> vertex (j, t): entry[(j,t)][(i,s)] is the coefficient of
// b_i in b_j * w(t,s).
IntMatrix integral_matrix(const UnfoldedSystem& u, const RMatrix& w);

// Image of a word in the source generators under the unfolding
// homomorphism: each generator is replaced by its fiber, vertices in
// basis order.
std::vector<int> phi_image(const UnfoldedSystem& u, std::span<const int> source_word);

// Matrix of a word in the unfolded generators (row convention, first
// letter applied first).
IntMatrix unfolded_word_matrix(const UnfoldedSystem& u, std::span<const int> word);

struct PsiReport {
  std::vector<int> failed_generators;  // source generators whose check failed
  bool ok() const { return failed_generators.empty(); }
};

// For every source generator s, checks that the integral matrix of [s]
// equals the product of the reflections in its fiber (exact integers).
PsiReport psi_conjugation_check(const UnfoldedSystem& u);

}  // namespace fusioncox
